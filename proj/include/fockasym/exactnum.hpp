#pragma once

// Exact arithmetic kernel: rationals, Gaussian rationals, truncated series,
// dense matrices with exact determinants, and quadratic surds for reporting.

#include "fockasym/exactnum/gaussian_rational.hpp"
#include "fockasym/exactnum/matrix.hpp"
#include "fockasym/exactnum/quadratic_surd.hpp"
#include "fockasym/exactnum/rational.hpp"
#include "fockasym/exactnum/truncated_series.hpp"
