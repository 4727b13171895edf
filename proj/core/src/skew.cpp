#include "symco/skew.hpp"

#include <limits>
#include <map>

#include "symco/dimensions.hpp"
#include "symco/lr.hpp"

namespace symco {

Int skew_syt_count(const SkewShape& shape) {
    int L = shape.outer.rows();
    if (L == 0) return 1;
    // Entry (i,j) is 1/(a_i - b_j)! with a_i = la_i - i, b_j = mu_j - j.
    // Multiplying row i by (a_i - b_L)! clears every denominator in the row
    // (b_j decreases in j), leaving falling factorials; Bareiss elimination
    // then stays in integers.
    std::vector<long long> a(L), b(L);
    for (int i = 0; i < L; ++i) a[i] = shape.outer.part(i + 1) - (i + 1);
    for (int j = 0; j < L; ++j) b[j] = shape.inner.part(j + 1) - (j + 1);

    std::vector<std::vector<Int>> m(L, std::vector<Int>(L));
    Int row_scale = 1;
    for (int i = 0; i < L; ++i) {
        long long full = a[i] - b[L - 1];
        if (full < 0) return 0;  // whole row vanishes
        row_scale *= factorial(full);
        for (int j = 0; j < L; ++j) {
            long long d = a[i] - b[j];
            if (d < 0) {
                m[i][j] = 0;
            } else {
                // (a_i - b_L)! / (a_i - b_j)! as a falling factorial product.
                Int v = 1;
                for (long long x = d + 1; x <= full; ++x) v *= static_cast<long>(x);
                m[i][j] = v;
            }
        }
    }

    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < L - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < L; ++r)
                if (m[r][k] != 0) { pivot = r; break; }
            if (pivot < 0) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < L; ++i) {
            for (int j = k + 1; j < L; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = num;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Int det = m[L - 1][L - 1];
    if (sign < 0) det = -det;

    Rat f(factorial(shape.size()) * det, row_scale);
    f.canonicalize();
    if (f.get_den() != 1)
        throw verification_error("skew determinant: non-integral value for " +
                                 shape.outer.str() + "/" + shape.inner.str());
    Int result(f.get_num());
    if (result < 0)
        throw verification_error("skew determinant: negative value for " +
                                 shape.outer.str() + "/" + shape.inner.str());
    return result;
}

Int skew_syt_count_lr(const SkewShape& shape) {
    Int total = 0;
    LRExpansion ex = lr_expand(shape.outer, shape.inner);
    for (const auto& [nu, c] : ex.coeffs) total += c * dim_irrep(nu);
    return total;
}

Int skew_syt_count_chains(const SkewShape& shape) {
    // Saturated chains in Young's lattice from inner to outer, one cell at a
    // time, by level-by-level DP.
    std::map<Partition, Int> level = {{shape.inner, Int(1)}};
    long long steps = shape.size();
    for (long long s = 0; s < steps; ++s) {
        std::map<Partition, Int> next;
        for (const auto& [tau, ways] : level) {
            int rows = tau.rows();
            for (int i = 1; i <= rows + 1; ++i) {
                if (i > 1 && tau.part(i) >= tau.part(i - 1)) continue;  // must stay a partition
                std::vector<int> parts = tau.parts();
                if (i > rows)
                    parts.push_back(1);
                else
                    parts[i - 1]++;
                Partition grown(parts);
                if (!shape.outer.contains(grown)) continue;
                next[grown] += ways;
            }
        }
        level = std::move(next);
    }
    auto it = level.find(shape.outer);
    return it == level.end() ? Int(0) : it->second;
}

Int skew_sum_squares(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("skew_sum_squares: need 0 <= m <= n");
    // (n-m)! [q^m] (1-q)^{-(n-m)} prod_i 1/(1-q^i); the coefficient is
    // sum_k binom(n-m+k-1, k) p(m-k).
    Int coeff = 0;
    for (int k = 0; k <= m; ++k) {
        Int c = (k == 0) ? Int(1) : binomial(n - m + k - 1, k);
        coeff += c * partition_count(m - k);
    }
    return factorial(n - m) * coeff;
}

Int skew_sum_squares_printed_form(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("skew_sum_squares_printed_form");
    Int coeff = 0;
    for (int k = 1; k <= m; ++k) coeff += binomial(n - m + k - 1, k - 1) * partition_count(m - k);
    return factorial(n - m) * coeff;
}

Int skew_sum_squares_brute(int n, int m) {
    if (m < 0 || m > n) throw std::invalid_argument("skew_sum_squares_brute");
    if (n > 12) throw resource_limit_error("skew_sum_squares_brute: n exceeds 12");
    Int total = 0;
    for (const auto& la : enumerate_partitions(n)) {
        for_each_subpartition_of_size(la, m, [&](const Partition& mu) {
            Int f = skew_syt_count(SkewShape(la, mu));
            total += f * f;
        });
    }
    return total;
}

SkewSquaresReport skew_squares_report(int n, int m) {
    SkewSquaresReport rep;
    rep.n = n;
    rep.m = m;
    rep.gf_value = skew_sum_squares(n, m);
    rep.printed_value = skew_sum_squares_printed_form(n, m);
    rep.printed_matches = (rep.gf_value == rep.printed_value);
    return rep;
}

BoundReport skew_bounds_report(int n, int m) {
    if (m < 1 || m > n) throw std::invalid_argument("skew_bounds_report: need 1 <= m <= n");
    Int total = skew_sum_squares(n, m);
    Int lower = factorial(n - 1);
    mpz_divexact(lower.get_mpz_t(), lower.get_mpz_t(), factorial(m - 1).get_mpz_t());
    Int upper = factorial(n);
    mpz_divexact(upper.get_mpz_t(), upper.get_mpz_t(), factorial(m).get_mpz_t());
    upper *= partition_count(m);

    BoundReport rep;
    rep.subject = "sum of (f^{la/mu})^2 at (n,m)=(" + std::to_string(n) + "," +
                  std::to_string(m) + ")";
    rep.exact_value = total;
    rep.add({"(n-1)!/(m-1)! <= sum", log_int(lower), log_int(total),
             std::numeric_limits<double>::infinity(), lower <= total, true});
    rep.add({"sum <= (n!/m!) p(m)", -std::numeric_limits<double>::infinity(),
             log_int(total), log_int(upper), total <= upper, true});
    return rep;
}

}  // namespace symco
