#pragma once

// Exact skew standard-Young-tableau counts (determinant backend, LR-expansion
// backend, direct chain enumeration) and the sum-of-squares machinery.

#include <string>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"
#include "symco/report.hpp"
#include "symco/skew_shape.hpp"

namespace symco {

// f^{lambda/mu} = n! det[ 1/((lambda_i - i) - (mu_j - j))! ], the Feit
// (Aitken) determinant, evaluated exactly; integrality and nonnegativity
// are asserted.
Int skew_syt_count(const SkewShape& shape);

// Same count via sum of c^lambda_{mu,nu} f^nu over the LR expansion.
Int skew_syt_count_lr(const SkewShape& shape);

// Same count by direct enumeration: saturated chains from mu to lambda.
Int skew_syt_count_chains(const SkewShape& shape);

// Sum over lambda |- n, mu |- m of (f^{lambda/mu})^2 by coefficient
// extraction from Stanley's generating function.
Int skew_sum_squares(int n, int m);

// The same sum by exhaustive enumeration over (lambda, mu) pairs.
Int skew_sum_squares_brute(int n, int m);

// A published closed form for the same sum that disagrees with the
// generating function at small (n, m); kept so reports can flag it.
Int skew_sum_squares_printed_form(int n, int m);

struct SkewSquaresReport {
    int n = 0, m = 0;
    Int gf_value;
    Int printed_value;
    bool printed_matches = false;
};

SkewSquaresReport skew_squares_report(int n, int m);

// Lemma bounds (n-1)!/(m-1)! <= sum <= (n!/m!) p(m) against the exact sum.
BoundReport skew_bounds_report(int n, int m);

}  // namespace symco
