#pragma once

// Numeric limit-shape toolkit: the VKLS curve in both coordinate frames,
// deterministic discretization to a partition of exactly n, sup-deviation
// diagnostics, hook integrals (discrete and continuum), and the named
// constants.

#include <functional>

#include "symco/partition.hpp"

namespace symco {

// Non-increasing boundary profile in row/column coordinates.
struct CurveFn {
    double lo = 0.0;
    double hi = 0.0;
    std::function<double(double)> eval;
};

struct Constants {
    double c1;  // pi/sqrt(6)
    double c2;  // (pi-2)/pi^2
    double d;   // pi(1+sqrt(2))/sqrt(6)
    double K;   // prod (1 - 2^-i)^-1
};

Constants constants();

// Rotated-frame profile phi(x) on [-sqrt(2), sqrt(2)].
double vkls_phi(double x);

// Row/column-frame profile psi(u) on [0, 2], by monotone root finding on the
// rotation relations; self-inverse.
double vkls_psi(double u);

// A partition of exactly n tracking sqrt(n) psi, rounded row by row and then
// repaired cell by cell (ties to the smaller row index).
Partition vkls_partition(long long n);

// Sup-deviation between the scaled rotated profile of lambda and the VKLS
// curve, measured on a grid; an upper-bound surrogate for the Frechet
// distance of the two boundary curves.
double vkls_distance(const Partition& la);

// -(1/n) sum over cells of log(h_ij / sqrt(n)).
double hook_integral_partition(const Partition& la);

// Midpoint-rule quadrature of -log of the continuum hook over the region
// between the curves; requires area(omega/pi) = 1 within 1e-3.
double hook_integral_curve(const CurveFn& omega, const CurveFn& inner, int grid);

// CurveFn view of psi (for the quadrature entry points).
CurveFn vkls_curve();

// Zero inner curve on [0, hi].
CurveFn zero_curve(double hi);

}  // namespace symco
