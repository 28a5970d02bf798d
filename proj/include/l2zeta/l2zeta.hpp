#pragma once

#include "census.hpp"
#include "char_poly.hpp"
#include "chebyshev.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "monodromy.hpp"
#include "numeric.hpp"
#include "omega.hpp"
#include "poly.hpp"
#include "rational_fn.hpp"
#include "report.hpp"
#include "roots.hpp"
#include "surface.hpp"
#include "svg.hpp"
#include "symmetric.hpp"
#include "zeta.hpp"
