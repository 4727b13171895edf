#include "symco/lr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include "symco/dimensions.hpp"

namespace symco {

namespace {

// Backtracking enumeration of LR tableaux of shape la/mu in reading-word
// order (rows top to bottom, each row right to left).  Entries in row i never
// exceed i, rows weakly increase rightward, columns strictly increase
// downward, and every reading-word prefix stays a lattice word.  The target
// content, when given, prunes by per-value caps.
class LrEnumerator {
public:
    LrEnumerator(const Partition& la, const Partition& mu, const std::vector<int>* target)
        : target_(target) {
        rows_ = la.rows();
        for (int i = 1; i <= rows_; ++i) {
            int lo = mu.part(i), hi = la.part(i);
            for (int j = hi; j > lo; --j) cells_.push_back({i, j});
        }
        la_ = &la;
        mu_ = &mu;
        counts_.assign(rows_ + 2, 0);
        col_val_.assign(la.part(1) + 2, std::vector<int>(rows_ + 2, 0));
    }

    // fn receives the content counts (counts_[v] for v = 1..rows_).
    void run(const std::function<void(const std::vector<int>&)>& fn) {
        fn_ = &fn;
        place(0);
    }

private:
    struct Cell {
        int i, j;
    };

    void place(size_t idx) {
        if (idx == cells_.size()) {
            (*fn_)(counts_);
            return;
        }
        auto [i, j] = cells_[idx];
        int lo = 1;
        if (i > 1 && j > mu_->part(i - 1)) lo = col_val_[j][i - 1] + 1;
        int hi = i;
        if (j < la_->part(i)) hi = std::min(hi, col_val_[j + 1][i]);
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts_[v] >= counts_[v - 1]) continue;
            if (target_ && counts_[v] >= (*target_)[v]) continue;
            counts_[v]++;
            col_val_[j][i] = v;
            place(idx + 1);
            counts_[v]--;
        }
    }

    const Partition* la_ = nullptr;
    const Partition* mu_ = nullptr;
    const std::vector<int>* target_;
    const std::function<void(const std::vector<int>&)>* fn_ = nullptr;
    int rows_ = 0;
    std::vector<Cell> cells_;
    std::vector<int> counts_;
    std::vector<std::vector<int>> col_val_;  // col_val_[j][i] = value at cell (i, j)
};

Partition content_to_partition(const std::vector<int>& counts, int rows) {
    std::vector<int> p;
    for (int v = 1; v <= rows; ++v) {
        if (counts[v] == 0) break;
        p.push_back(counts[v]);
    }
    return Partition(std::move(p));
}

}  // namespace

Int lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != la.size())
        throw std::invalid_argument("lr_coefficient: |mu| + |nu| must equal |lambda|");
    if (!la.contains(mu) || nu.rows() > la.rows() || nu.part(1) > la.part(1)) return 0;
    std::vector<int> target(la.rows() + 2, 0);
    for (int v = 1; v <= nu.rows(); ++v) target[v] = nu.part(v);
    Int count = 0;
    LrEnumerator en(la, mu, &target);
    en.run([&](const std::vector<int>&) { ++count; });
    return count;
}

LRExpansion lr_expand(const Partition& la, const Partition& mu) {
    LRExpansion ex;
    ex.lambda = la;
    ex.mu = mu;
    if (!la.contains(mu)) return ex;
    LrEnumerator en(la, mu, nullptr);
    int rows = la.rows();
    en.run([&](const std::vector<int>& counts) {
        ex.coeffs[content_to_partition(counts, rows)] += 1;
    });
    return ex;
}

// ---------------------------------------------------------------------------
// Hive backend.
//
// Triangular array h[i][j], 0 <= j <= i <= N, N = rows(lambda).  Boundary:
// h[i][0] carries partial sums of mu, h[i][i] partial sums of lambda, and the
// bottom row h[N][j] = |mu| + nu_1 + ... + nu_j.  Rhombus inequalities (sum
// over the shared edge of two glued unit triangles >= sum over the far
// corners) in all three orientations; interior vertices are enumerated in
// row-major order with interval bounds read off the inequalities whose other
// vertices are already fixed.

namespace {

struct HiveCounter {
    int N;
    std::vector<std::vector<long long>> h;
    std::vector<std::vector<bool>> fixed;
    Int count = 0;

    struct Ineq {
        // a + b >= c + d, as (row, col) vertex coordinates.
        std::pair<int, int> a, b, c, d;
    };
    std::vector<Ineq> ineqs;

    explicit HiveCounter(int n) : N(n) {
        h.assign(N + 1, {});
        fixed.assign(N + 1, {});
        for (int i = 0; i <= N; ++i) {
            h[i].assign(i + 1, 0);
            fixed[i].assign(i + 1, false);
        }
        for (int i = 0; i + 2 <= N; ++i)
            for (int j = 0; j <= i; ++j)
                ineqs.push_back({{i + 1, j}, {i + 1, j + 1}, {i, j}, {i + 2, j + 1}});
        for (int i = 0; i + 1 <= N; ++i)
            for (int j = 0; j + 1 <= i; ++j)
                ineqs.push_back({{i, j}, {i + 1, j + 1}, {i, j + 1}, {i + 1, j}});
        for (int i = 0; i + 1 <= N; ++i)
            for (int j = 1; j <= i; ++j)
                ineqs.push_back({{i, j}, {i + 1, j}, {i, j - 1}, {i + 1, j + 1}});
    }

    long long at(std::pair<int, int> v) const { return h[v.first][v.second]; }
    bool is_fixed(std::pair<int, int> v) const { return fixed[v.first][v.second]; }

    bool all_fixed(const Ineq& q) const {
        return is_fixed(q.a) && is_fixed(q.b) && is_fixed(q.c) && is_fixed(q.d);
    }

    bool holds(const Ineq& q) const { return at(q.a) + at(q.b) >= at(q.c) + at(q.d); }

    // Interior vertices in row-major order.
    std::vector<std::pair<int, int>> interior() const {
        std::vector<std::pair<int, int>> vs;
        for (int i = 2; i < N; ++i)
            for (int j = 1; j < i; ++j) vs.push_back({i, j});
        return vs;
    }

    void search(const std::vector<std::pair<int, int>>& vs, size_t idx) {
        if (idx == vs.size()) {
            ++count;
            return;
        }
        auto v = vs[idx];
        long long lo = std::numeric_limits<long long>::min();
        long long hi = std::numeric_limits<long long>::max();
        fixed[v.first][v.second] = true;
        for (const auto& q : ineqs) {
            // Bound v by every inequality whose other three vertices are set.
            auto involves = [&](std::pair<int, int> w) { return w == v; };
            bool va = involves(q.a), vb = involves(q.b), vc = involves(q.c), vd = involves(q.d);
            if (!(va || vb || vc || vd)) continue;
            auto known = [&](std::pair<int, int> w) { return w == v || is_fixed(w); };
            if (!(known(q.a) && known(q.b) && known(q.c) && known(q.d))) continue;
            if (va || vb) {
                std::pair<int, int> other = va ? q.b : q.a;
                if (other == v) continue;  // cannot happen: vertices distinct
                lo = std::max(lo, at(q.c) + at(q.d) - at(other));
            } else {
                std::pair<int, int> other = vc ? q.d : q.c;
                hi = std::min(hi, at(q.a) + at(q.b) - at(other));
            }
        }
        if (lo == std::numeric_limits<long long>::min() ||
            hi == std::numeric_limits<long long>::max())
            throw std::logic_error("hive interior vertex left unbounded");
        for (long long x = lo; x <= hi; ++x) {
            h[v.first][v.second] = x;
            search(vs, idx + 1);
        }
        fixed[v.first][v.second] = false;
    }
};

}  // namespace

Int lr_coefficient_hive(const Partition& la, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != la.size())
        throw std::invalid_argument("lr_coefficient_hive: |mu| + |nu| must equal |lambda|");
    int N = la.rows();
    if (mu.rows() > N || nu.rows() > N) return 0;
    if (N == 0) return 1;
    HiveCounter hc(N);
    long long acc = 0;
    for (int i = 1; i <= N; ++i) {
        acc += mu.part(i);
        hc.h[i][0] = acc;
        hc.fixed[i][0] = true;
    }
    acc = 0;
    for (int i = 1; i <= N; ++i) {
        acc += la.part(i);
        hc.h[i][i] = acc;
        hc.fixed[i][i] = true;
    }
    acc = mu.size();
    for (int j = 1; j < N; ++j) {
        acc += nu.part(j);
        hc.h[N][j] = acc;
        hc.fixed[N][j] = true;
    }
    hc.fixed[0][0] = true;
    // Inequalities entirely on the boundary must hold before any search.
    for (const auto& q : hc.ineqs)
        if (hc.all_fixed(q) && !hc.holds(q)) return 0;
    hc.search(hc.interior(), 0);
    return hc.count;
}

// ---------------------------------------------------------------------------
// Series.

namespace {

std::mutex series_mutex;
constexpr int kSeriesCap = 64;
std::vector<std::vector<Int>> hw_table;  // hw_table[k][m], built to kSeriesCap
std::vector<Int> p2_table;

void build_hw_table() {
    int D = kSeriesCap;
    hw_table.assign(D + 1, std::vector<Int>(D + 1, 0));
    hw_table[0][0] = 1;
    for (int i = 1; i <= D; ++i)
        for (int k = 0; k <= D; ++k)
            for (int m = 0; k + m <= D; ++m) {
                if (k >= i) hw_table[k][m] += hw_table[k - i][m];
                if (m >= i) hw_table[k][m] += hw_table[k][m - i];
            }
}

void build_p2_table() {
    int D = kSeriesCap;
    p2_table.assign(D + 1, 0);
    p2_table[0] = 1;
    for (int i = 1; i <= D; ++i)
        for (int j = i; j <= D; ++j) p2_table[j] += 2 * p2_table[j - i];
}

}  // namespace

Int hw_coefficient(int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("hw_coefficient: negative degree");
    if (k + m > kSeriesCap)
        throw resource_limit_error("hw_coefficient: k+m exceeds series cap " +
                                   std::to_string(kSeriesCap));
    std::lock_guard<std::mutex> lock(series_mutex);
    if (hw_table.empty()) build_hw_table();
    return hw_table[k][m];
}

Int bicolored_count(int n) {
    if (n < 0) throw std::invalid_argument("bicolored_count: n < 0");
    if (n > kSeriesCap)
        throw resource_limit_error("bicolored_count: n exceeds series cap " +
                                   std::to_string(kSeriesCap));
    std::lock_guard<std::mutex> lock(series_mutex);
    if (p2_table.empty()) build_p2_table();
    return p2_table[n];
}

// ---------------------------------------------------------------------------
// Refined maxima, bounds, certificates.

MaxRecord refined_max_lr(const Partition& la) {
    if (la.size() > 23)
        throw resource_limit_error("refined_max_lr: |lambda| exceeds 23");
    MaxRecord rec;
    for_each_subpartition(la, [&](const Partition& mu) {
        LRExpansion ex = lr_expand(la, mu);
        for (const auto& [nu, c] : ex.coeffs) rec.offer(c, {mu, nu});
    });
    rec.finalize();
    return rec;
}

Rat hook_content_bound(const Partition& la, int l) {
    if (l < la.rows())
        throw std::invalid_argument("hook_content_bound: l must be at least rows(lambda)");
    Int num = 1, den = 1;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) {
            num *= 2 * l + j - i;
            den *= l + j - i;
        }
    Rat bound(num, den);
    bound.canonicalize();
    if (la.size() <= 14) {
        Int c = refined_max_lr(la).value;
        if (Rat(c * c) > bound)
            throw verification_error("hook-content bound violated at lambda=" + la.str());
    }
    return bound;
}

namespace {

struct GreedySplit {
    Int c;
    Partition left, right;
};

std::mutex greedy_mutex;
std::map<Partition, GreedySplit> greedy_memo;

GreedySplit greedy_split(const Partition& rho) {
    {
        std::lock_guard<std::mutex> lock(greedy_mutex);
        auto it = greedy_memo.find(rho);
        if (it != greedy_memo.end()) return it->second;
    }
    MaxRecord rec = refined_max_lr(rho);
    GreedySplit gs{rec.value, rec.witnesses.at(0).at(0), rec.witnesses.at(0).at(1)};
    std::lock_guard<std::mutex> lock(greedy_mutex);
    greedy_memo.emplace(rho, gs);
    return gs;
}

}  // namespace

TreeCertificate tree_certificate(const Partition& la, const Partition& mu,
                                 const Partition& nu) {
    if (mu.size() + nu.size() != la.size())
        throw std::invalid_argument("tree_certificate: |mu| + |nu| must equal |lambda|");
    if (la.size() > 18) throw resource_limit_error("tree_certificate: |lambda| exceeds 18");
    Int root_c = lr_coefficient(la, mu, nu);
    if (root_c == 0)
        throw std::invalid_argument("tree_certificate: zero root coefficient");
    long long n = la.size();
    int depth = std::max(1, static_cast<int>(std::ceil(std::log2(std::max<long long>(n, 1)))));

    TreeCertificate cert;
    cert.product = root_c;
    cert.description = la.str() + " -> " + mu.str() + " + " + nu.str() +
                       " (c=" + root_c.get_str() + ")";
    std::vector<Partition> level = {mu, nu};
    for (int d = 1; d < depth; ++d) {
        std::vector<Partition> next;
        for (const auto& rho : level) {
            if (rho.empty()) {
                next.push_back(rho);
                next.push_back(rho);
                continue;
            }
            GreedySplit gs = greedy_split(rho);
            cert.product *= gs.c;
            cert.description += "; " + rho.str() + " -> " + gs.left.str() + " + " +
                                gs.right.str() + " (c=" + gs.c.get_str() + ")";
            next.push_back(gs.left);
            next.push_back(gs.right);
        }
        level = std::move(next);
    }
    if (dim_irrep(la) < cert.product)
        throw verification_error("tree certificate exceeds dimension at lambda=" + la.str());
    return cert;
}

SkewCauchyReport verify_skew_cauchy_square(const Partition& mu, const Partition& nu) {
    if (mu.size() > 10 || nu.size() > 10)
        throw resource_limit_error("verify_skew_cauchy_square: sides exceed 10");
    int n = static_cast<int>(mu.size() + nu.size());
    Int lhs = 0;
    for (const auto& la : enumerate_partitions(n)) {
        Int c = lr_coefficient(la, mu, nu);
        lhs += c * c;
    }
    // Gram matrices of the two expansion families, keyed by (gamma, delta).
    auto gram = [](const Partition& p) {
        std::map<std::pair<Partition, Partition>, Int> m;
        for_each_subpartition(p, [&](const Partition& alpha) {
            LRExpansion ex = lr_expand(p, alpha);
            for (const auto& [g, cg] : ex.coeffs)
                for (const auto& [d, cd] : ex.coeffs) m[{g, d}] += cg * cd;
        });
        return m;
    };
    auto gm = gram(mu), gn = gram(nu);
    Int rhs = 0;
    for (const auto& [key, v] : gm) {
        auto it = gn.find(key);
        if (it != gn.end()) rhs += v * it->second;
    }
    return {lhs, rhs, lhs == rhs};
}

bool verify_lpp(const Partition& la, const Partition& mu, const Partition& nu) {
    Int lhs = lr_coefficient(la, mu, nu);
    Int rhs = lr_coefficient(la, meet(mu, nu), join(mu, nu));
    return lhs <= rhs;
}

bool lr_vanishing_rows(const Partition& la, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != la.size())
        throw std::invalid_argument("lr_vanishing_rows: inconsistent sizes");
    return la.rows() > mu.rows() + nu.rows();
}

LrIdentityReport verify_lr_identities(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("verify_lr_identities: need 0 <= k <= n");
    if (n > 12) throw resource_limit_error("verify_lr_identities: n exceeds 12");
    LrIdentityReport rep;
    rep.n = n;
    rep.k = k;
    rep.binom = binomial(n, k);

    auto lambdas = enumerate_partitions(n);
    auto mus = enumerate_partitions(k);
    auto nus = enumerate_partitions(n - k);

    std::map<Partition, Int> fdim;
    for (const auto& la : lambdas) fdim[la] = dim_irrep(la);
    std::map<Partition, Int> fmu, fnu;
    for (const auto& mu : mus) fmu[mu] = dim_irrep(mu);
    for (const auto& nu : nus) fnu[nu] = dim_irrep(nu);

    std::map<std::pair<Partition, Partition>, Int> sum1, sumsq1;
    Int total_sq = 0;

    auto fail = [&](const std::string& msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.failure = msg;
        }
    };

    for (const auto& la : lambdas) {
        Int s2 = 0, sq2 = 0;
        for_each_subpartition_of_size(la, k, [&](const Partition& mu) {
            LRExpansion ex = lr_expand(la, mu);
            for (const auto& [nu, c] : ex.coeffs) {
                s2 += c * fmu[mu] * fnu[nu];
                sq2 += c * c;
                sum1[{mu, nu}] += c * fdim[la];
                sumsq1[{mu, nu}] += c * c;
                total_sq += c * c;
            }
        });
        if (s2 != fdim[la])
            fail("second expansion identity fails at lambda=" + la.str());
        if (sq2 > rep.binom)
            fail("per-lambda squared sum exceeds binom at lambda=" + la.str());
    }

    for (const auto& mu : mus)
        for (const auto& nu : nus) {
            Int want = rep.binom * fmu[mu] * fnu[nu];
            Int got;
            auto it = sum1.find({mu, nu});
            if (it != sum1.end()) got = it->second;
            if (got != want)
                fail("first expansion identity fails at mu=" + mu.str() + " nu=" + nu.str());
            auto jt = sumsq1.find({mu, nu});
            if (jt != sumsq1.end() && jt->second > rep.binom)
                fail("per-pair squared sum exceeds binom at mu=" + mu.str() +
                     " nu=" + nu.str());
        }

    rep.sum_sq_total = total_sq;

    // Closed forms for the total squared sum: multiplicity binomial products
    // and the centralizer ratio, computed independently and compared.
    Int product_form = 0;
    Rat ratio_form = 0;
    for (const auto& alpha : mus) {
        for (const auto& beta : nus) {
            std::map<int, int> ma, mb;
            for (int p : alpha.parts()) ma[p]++;
            for (int p : beta.parts()) mb[p]++;
            Int prod = 1;
            for (const auto& [part, cnt] : ma) {
                int other = mb.count(part) ? mb[part] : 0;
                prod *= binomial(cnt + other, cnt);
            }
            product_form += prod;
            Rat ratio(centralizer_order(multiset_union(alpha, beta)),
                      centralizer_order(alpha) * centralizer_order(beta));
            ratio.canonicalize();
            ratio_form += ratio;
        }
    }
    rep.product_form = product_form;
    rep.centralizer_form = ratio_form;
    if (product_form != total_sq)
        fail("multiplicity-product closed form disagrees with enumerated squared sum");
    if (Rat(total_sq) != ratio_form)
        fail("centralizer-ratio closed form disagrees with enumerated squared sum");
    if (total_sq < rep.binom) fail("squared sum below binom(n,k)");
    if (total_sq > rep.binom * partition_count(n)) fail("squared sum above binom * p(n)");
    return rep;
}

}  // namespace symco
