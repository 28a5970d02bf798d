#include <catch2/catch_amalgamated.hpp>
#include "l2zeta/l2zeta.hpp"

