#pragma once

#include "errors.hpp"
#include "rational.hpp"
#include "interpolation.hpp"
#include "lambda_poly.hpp"
#include "quadrature.hpp"
#include "scheme.hpp"
#include "stability.hpp"
#include "simulator.hpp"
#include "bench.hpp"
