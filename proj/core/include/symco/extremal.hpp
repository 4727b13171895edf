#pragma once

// Maxima tables and conjecture scanners: D(n) via dimensions, C(n,k), C(n),
// row-restricted C_l(n), F(m,n), zeta/rho, stabilization against D(k),
// containment and monotonicity scans, and the bound reports built on them.

#include <string>
#include <utility>
#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"
#include "symco/report.hpp"

namespace symco {

inline constexpr int kCnkTableCap = 18;
inline constexpr int kCnkStretchCap = 23;

struct TableOptions {
    unsigned threads = 1;
    bool stretch = false;          // extends the row cap from 18 to 23
    double time_budget_seconds = 0;  // 0 = unlimited
};

struct CnkTable {
    int n_max = 0;
    // entries[n][k] for 0 <= k <= n <= n_max.
    std::vector<std::vector<MaxRecord>> entries;

    const MaxRecord& at(int n, int k) const { return entries.at(n).at(k); }
    Int value(int n, int k) const { return at(n, k).value; }
};

// Exact C(n,k) for all 0 <= k <= n <= n_max with lexicographically smallest
// witnesses; rows are cached per process and shared between calls.
CnkTable table_cnk(int n_max, const TableOptions& opts = {});

// One row of the table (C(n,0..n)); cached.
const std::vector<MaxRecord>& cnk_row(int n, const TableOptions& opts = {});

// Single C(n,k) slice without building a row; used by bound reports for
// (n,k) beyond the table cap.
Int cnk_single(int n, int k, unsigned threads = 1);

// C(n) = max_k C(n,k), witnesses are (lambda,mu,nu) tuples.
MaxRecord max_lr(int n, const TableOptions& opts = {});

// C_l(n): lambda restricted to exactly l rows; asserts the (n+1)^(l^2/2) and
// (m+l)^(l^2/2) upper bounds on the way out.
MaxRecord max_lr_rows(int n, int l, const TableOptions& opts = {});

// zeta(n) = smallest k with C(n,k) = C(n); rho(n) = n/2 - zeta(n).
std::pair<int, Rat> zeta_rho(int n, const TableOptions& opts = {});

// Smallest n0 <= binom(k+1,2) with C(n,k) = D(k) for every scanned n >= n0
// (scan range k..18); the flag records n0 == binom(k+1,2).
std::pair<int, bool> stabilization_index(int k, const TableOptions& opts = {});

// Checks the regular-representation witness lambda = delta_{k+1} + (r),
// nu = delta_k + (r): the expansion of lambda/nu must be {mu: f^mu} over all
// mu |- k.  Returns the attaining mu (the argmax of f) whose c equals D(k).
Partition verify_stabilization_witness(int k, int n);

struct ContainmentReport {
    int n = 0;
    Int c_n;
    unsigned long long maximizer_count = 0;
    bool flag_exists = false;      // some maximizer has mu, nu nested (asserted)
    bool all_nested = true;        // the conjecture's universal claim (reported)
    std::vector<Witness> violations;  // up to 8 non-nested maximizers
};

ContainmentReport containment_scan(int n, const TableOptions& opts = {});

struct MonotonicityReport {
    int n_max = 0;
    bool ok = true;
    std::string failure;
    // (n, k) positions with C(n,k-1) > C(n,k) < C(n,k+1).
    std::vector<std::pair<int, int>> dips;
};

MonotonicityReport monotonicity_scan(int n_max, const TableOptions& opts = {});

// lambda maximizing c^lambda_{mu,nu} f^lambda (ties to smaller lambda),
// returned with the coefficient; existence-theorem guarantees are asserted.
std::pair<Partition, Int> find_large_lr_from_mu_nu(const Partition& mu, const Partition& nu);

// (mu,nu) maximizing c^lambda_{mu,nu} f^mu f^nu for the given split, returned
// with that maximal product; guarantees asserted.
std::pair<std::pair<Partition, Partition>, Int> find_large_lr_from_lambda(
    const Partition& la, int k);

// F(m,n) = max over lambda |- n, mu |- m of f^{lambda/mu}; asserts the
// sandwich bounds when m >= 1.
MaxRecord max_skew_syt(int m, int n, const TableOptions& opts = {});

// Numeric lower/upper bounds for C(n,k) plus the D(k) cap, against the exact
// value (from the table when available, else a direct slice scan).
BoundReport lr_bounds_report(int n, int k, const TableOptions& opts = {});

// CSV with header n,k,C,lambda,mu,nu; partition fields are RFC-4180 quoted
// when they contain commas.  One row per (n,k), deterministic.
std::string cnk_table_csv(const CnkTable& table);

}  // namespace symco
