#pragma once

// Hook-length machinery: irreducible dimensions f^lambda, hook-content
// evaluations, the Naruse lower bound for skew shapes, the largest dimension
// D(n), and the Plancherel dimension predicate.

#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"
#include "symco/report.hpp"
#include "symco/skew_shape.hpp"

namespace symco {

struct HookGrid {
    Partition shape;
    // hooks[i-1][j-1] = lambda_i + lambda'_j - i - j + 1 for cell (i, j).
    std::vector<std::vector<int>> hooks;

    int hook(int i, int j) const { return hooks[i - 1][j - 1]; }
};

HookGrid hook_grid(const Partition& la);

// f^lambda by the hook-length formula; the division is exact.
Int dim_irrep(const Partition& la);

// s_lambda(1^m) by the hook-content formula; 0 when lambda has more than m rows.
Int schur_ones(const Partition& la, int m);

// n! * prod over cells of lambda/mu of 1/h_lambda(i,j), as an exact rational.
Rat naruse_lower_bound(const SkewShape& shape);

// D(n) = max over lambda of f^lambda, with every attaining shape.
MaxRecord max_dim(int n, unsigned threads = 1);

// log f^lambda >= (1/2) log n! - a sqrt(n), compared in log domain.
bool is_plancherel(const Partition& la, double a);

}  // namespace symco
