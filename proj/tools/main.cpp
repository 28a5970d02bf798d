#include "l2zeta/l2zeta.hpp"
int main(){return 0;}
