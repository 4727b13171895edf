#include "symco/dimensions.hpp"

#include <cmath>

#include "symco/parallel.hpp"

namespace symco {

HookGrid hook_grid(const Partition& la) {
    HookGrid g;
    g.shape = la;
    Partition conj = la.conjugate();
    g.hooks.resize(la.rows());
    for (int i = 1; i <= la.rows(); ++i) {
        g.hooks[i - 1].resize(la.part(i));
        for (int j = 1; j <= la.part(i); ++j)
            g.hooks[i - 1][j - 1] = la.part(i) + conj.part(j) - i - j + 1;
    }
    return g;
}

Int dim_irrep(const Partition& la) {
    Int denom = 1;
    Partition conj = la.conjugate();
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            denom *= la.part(i) + conj.part(j) - i - j + 1;
    Int f = factorial(la.size());
    if (!mpz_divisible_p(f.get_mpz_t(), denom.get_mpz_t()))
        throw verification_error("hook-length formula: non-integral quotient for " + la.str());
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), denom.get_mpz_t());
    return f;
}

Int schur_ones(const Partition& la, int m) {
    if (m < 1) throw std::invalid_argument("schur_ones: m must be >= 1");
    if (la.rows() > m) return 0;
    Partition conj = la.conjugate();
    Int num = 1, den = 1;
    for (int i = 1; i <= la.rows(); ++i) {
        for (int j = 1; j <= la.part(i); ++j) {
            num *= m + j - i;
            den *= la.part(i) + conj.part(j) - i - j + 1;
        }
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw verification_error("hook-content formula: non-integral quotient for " + la.str());
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

Rat naruse_lower_bound(const SkewShape& shape) {
    HookGrid g = hook_grid(shape.outer);
    Int denom = 1;
    for (auto [i, j] : shape.cells()) denom *= g.hook(i, j);
    Rat r(factorial(shape.size()), denom);
    r.canonicalize();
    return r;
}

MaxRecord max_dim(int n, unsigned threads) {
    if (n < 1) throw std::invalid_argument("max_dim: n must be >= 1");
    if (n > 40) throw resource_limit_error("max_dim: n exceeds the scan cap 40");
    auto parts = enumerate_partitions(n);
    std::vector<Int> dims(parts.size());
    parallel_for(parts.size(), threads, [&](size_t i) { dims[i] = dim_irrep(parts[i]); });
    MaxRecord rec;
    for (size_t i = 0; i < parts.size(); ++i) rec.offer(dims[i], {parts[i]});
    rec.finalize();
    return rec;
}

bool is_plancherel(const Partition& la, double a) {
    if (a <= 0) throw std::invalid_argument("is_plancherel: a must be positive");
    double lhs = log_int(dim_irrep(la));
    double n = static_cast<double>(la.size());
    double rhs = 0.5 * log_factorial(la.size()) - a * std::sqrt(n);
    return log_leq(rhs, lhs);
}

}  // namespace symco
