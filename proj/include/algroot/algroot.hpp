#pragma once

#include "algroot/exact_arith.hpp"
#include "algroot/polynomial.hpp"
#include "algroot/subresultant.hpp"
#include "algroot/introot.hpp"
#include "algroot/algebraic.hpp"
#include "algroot/extfield.hpp"
#include "algroot/solver_indirect.hpp"
#include "algroot/solver_direct.hpp"
#include "algroot/bounds.hpp"
#include "algroot/bench.hpp"
#include "algroot/io.hpp"
