#include "symco/kronecker.hpp"

#include <algorithm>
#include <cmath>

#include "symco/characters.hpp"
#include "symco/dimensions.hpp"
#include "symco/parallel.hpp"

namespace symco {

namespace {

// n! g = sum over classes of |class| chi chi chi.  For n within the character
// cap every partial sum fits a 128-bit accumulator (bounded by n! D(n)).
Int kron_from_table(const CharTable& t, int li, int mi, int ni,
                    const std::vector<long long>& class_sizes) {
    __int128 acc = 0;
    size_t classes = t.partitions().size();
    for (size_t a = 0; a < classes; ++a) {
        __int128 term = static_cast<__int128>(t.at(li, a)) * t.at(mi, a);
        term *= t.at(ni, a);
        term *= class_sizes[a];
        acc += term;
    }
    Int num = 0;
    bool neg = acc < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-acc)
                                : static_cast<unsigned __int128>(acc);
    Int high = static_cast<unsigned long>(mag >> 64);
    Int low = static_cast<unsigned long>(mag & ~0UL);
    num = (high << 64) + low;
    if (neg) num = -num;
    Int nfact = factorial(t.n());
    if (!mpz_divisible_p(num.get_mpz_t(), nfact.get_mpz_t()))
        throw verification_error("kronecker: class sum not divisible by n!");
    Int g;
    mpz_divexact(g.get_mpz_t(), num.get_mpz_t(), nfact.get_mpz_t());
    if (g < 0) throw verification_error("kronecker: negative coefficient");
    return g;
}

std::vector<long long> class_sizes_ll(const CharTable& t) {
    std::vector<long long> out;
    out.reserve(t.partitions().size());
    for (const auto& alpha : t.partitions())
        out.push_back(conjugacy_class_size(alpha).get_si());
    return out;
}

}  // namespace

Int kronecker(const Partition& la, const Partition& mu, const Partition& nu) {
    if (la.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("kronecker: arguments must partition the same n");
    if (la.empty()) return 1;
    auto t = character_table(static_cast<int>(la.size()));
    auto cls = class_sizes_ll(*t);
    return kron_from_table(*t, t->index_of(la), t->index_of(mu), t->index_of(nu), cls);
}

KronSquares kron_sum_squares(int n, int brute_cap) {
    if (n < 1) throw std::invalid_argument("kron_sum_squares: n must be >= 1");
    Int z_sum = 0;
    for (const auto& alpha : enumerate_partitions(n)) z_sum += centralizer_order(alpha);
    KronSquares result{z_sum, false};
    if (n <= brute_cap) {
        auto t = character_table(n);
        auto cls = class_sizes_ll(*t);
        size_t count = t->partitions().size();
        Int gg = 0;
        for (size_t l = 0; l < count; ++l)
            for (size_t m = 0; m < count; ++m)
                for (size_t v = 0; v < count; ++v) {
                    Int g = kron_from_table(*t, static_cast<int>(l), static_cast<int>(m),
                                            static_cast<int>(v), cls);
                    gg += g * g;
                }
        if (gg != z_sum)
            throw verification_error("sum of g^2 disagrees with sum of z_alpha at n=" +
                                     std::to_string(n));
        result.verified = true;
    }
    return result;
}

MaxRecord refined_max_kron(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size())
        throw std::invalid_argument("refined_max_kron: |lambda| != |mu|");
    auto t = character_table(static_cast<int>(la.size()));
    auto cls = class_sizes_ll(*t);
    int li = t->index_of(la), mi = t->index_of(mu);
    MaxRecord rec;
    for (size_t v = 0; v < t->partitions().size(); ++v) {
        Int g = kron_from_table(*t, li, mi, static_cast<int>(v), cls);
        rec.offer(g, {t->partitions()[v]});
    }
    rec.finalize();
    return rec;
}

MaxRecord max_kron(int n, unsigned threads, int brute_cap) {
    if (n < 1) throw std::invalid_argument("max_kron: n must be >= 1");
    if (n > brute_cap)
        throw resource_limit_error("max_kron: n=" + std::to_string(n) +
                                   " exceeds the triple-scan cap " +
                                   std::to_string(brute_cap));
    auto t = character_table(n, threads);
    auto cls = class_sizes_ll(*t);
    size_t count = t->partitions().size();
    // Scan canonical-order representatives l <= m <= v and expand by the full
    // S_3 symmetry when recording witnesses.
    std::vector<MaxRecord> partial(count);
    parallel_for(count, threads, [&](size_t l) {
        MaxRecord& rec = partial[l];
        for (size_t m = l; m < count; ++m)
            for (size_t v = m; v < count; ++v) {
                Int g = kron_from_table(*t, static_cast<int>(l), static_cast<int>(m),
                                        static_cast<int>(v), cls);
                if (g == 0) continue;
                const Partition &A = t->partitions()[l], &B = t->partitions()[m],
                                &C = t->partitions()[v];
                std::vector<Witness> perms = {{A, B, C}, {A, C, B}, {B, A, C},
                                              {B, C, A}, {C, A, B}, {C, B, A}};
                std::sort(perms.begin(), perms.end(), witness_less);
                perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
                for (auto& w : perms) rec.offer(g, std::move(w));
            }
    });
    MaxRecord rec;
    for (auto& p : partial) rec.merge(p);
    rec.finalize();
    return rec;
}

BoundReport kron_bounds_report(int n) {
    MaxRecord kn = max_kron(n);
    Int dn = max_dim(n).value;
    double log_k = log_int(kn.value);
    double log_d = log_int(dn);
    double log_p = log_int(partition_count(n));
    double log_nf = log_factorial(n);

    BoundReport rep;
    rep.subject = "K(" + std::to_string(n) + ")";
    rep.exact_value = kn.value;
    rep.witnesses = kn.witnesses;

    double lower1 = 0.5 * log_nf - 1.5 * log_p;
    rep.add({"sqrt(n!)/p(n)^(3/2) <= K(n)", lower1, log_k,
             std::numeric_limits<double>::infinity(), log_leq(lower1, log_k), false});
    double lower2 = 2.0 * log_d - 0.5 * (log_p + log_nf);
    rep.add({"D(n)^2/sqrt(p(n) n!) <= K(n)", lower2, log_k,
             std::numeric_limits<double>::infinity(), log_leq(lower2, log_k), false});
    rep.add({"K(n) <= D(n)", -std::numeric_limits<double>::infinity(), log_k, log_d,
             kn.value <= dn, true});
    return rep;
}

BoundReport refined_kron_bounds(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size())
        throw std::invalid_argument("refined_kron_bounds: |lambda| != |mu|");
    int n = static_cast<int>(la.size());
    auto t = character_table(n);
    auto cls = class_sizes_ll(*t);
    int li = t->index_of(la), mi = t->index_of(mu);

    Int k_ref = 0, a_quartic = 0;
    for (size_t v = 0; v < t->partitions().size(); ++v) {
        Int g = kron_from_table(*t, li, mi, static_cast<int>(v), cls);
        k_ref = std::max(k_ref, g);
        a_quartic += g * g;
    }
    Int fl = dim_irrep(la), fm = dim_irrep(mu);

    BoundReport rep;
    rep.subject = "K(" + la.str() + "; " + mu.str() + ")";
    rep.exact_value = k_ref;

    // Lower bound squared to stay exact: K^2 p(n) n! >= (f^la f^mu)^2.
    Int lhs = k_ref * k_ref * partition_count(n) * factorial(n);
    Int rhs = fl * fl * fm * fm;
    double log_low = log_int(fl) + log_int(fm) -
                     0.5 * (log_int(partition_count(n)) + log_factorial(n));
    rep.add({"f^la f^mu / sqrt(p(n) n!) <= K(la,mu)", log_low, log_int(k_ref),
             std::numeric_limits<double>::infinity(), lhs >= rhs, true});
    Int upper = std::min(fl, fm);
    rep.add({"K(la,mu) <= min(f^la, f^mu)", -std::numeric_limits<double>::infinity(),
             log_int(k_ref), log_int(upper), k_ref <= upper, true});
    rep.add({"A(la,mu) n! >= (f^la f^mu)^2", log_rat(Rat(rhs, factorial(n))),
             log_int(a_quartic), std::numeric_limits<double>::infinity(),
             a_quartic * factorial(n) >= rhs, true});
    return rep;
}

std::pair<Partition, Int> find_large_kron(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("find_large_kron: |mu| != |nu|");
    int n = static_cast<int>(mu.size());
    auto t = character_table(n);
    auto cls = class_sizes_ll(*t);
    int mi = t->index_of(mu), ni = t->index_of(nu);

    Int best_score = -1, best_g = 0;
    Partition best;
    // Canonical enumeration is descending lexicographic; scanning in reverse
    // visits candidates in ascending order so ties keep the smaller lambda.
    const auto& parts = t->partitions();
    for (size_t r = parts.size(); r-- > 0;) {
        Int g = kron_from_table(*t, static_cast<int>(r), mi, ni, cls);
        Int score = g * dim_irrep(parts[r]);
        if (score > best_score) {
            best_score = score;
            best_g = g;
            best = parts[r];
        }
    }

    // Theorem guarantees: g >= f^mu f^nu / (p(n) D(n)) and
    // (f^la)^2 >= f^mu f^nu / p(n), both exact.
    Int fm = dim_irrep(mu), fn = dim_irrep(nu), fl = dim_irrep(best);
    Int dn = max_dim(n).value, pn = partition_count(n);
    if (best_g * pn * dn < fm * fn)
        throw verification_error("find_large_kron: coefficient guarantee fails");
    if (fl * fl * pn < fm * fn)
        throw verification_error("find_large_kron: dimension guarantee fails");
    return {best, best_g};
}

Rat concentration_fraction(const Partition& la, const Partition& mu, double beta) {
    if (beta <= 0) throw std::invalid_argument("concentration_fraction: beta must be > 0");
    if (la.size() != mu.size())
        throw std::invalid_argument("concentration_fraction: |lambda| != |mu|");
    int n = static_cast<int>(la.size());
    auto t = character_table(n);
    auto cls = class_sizes_ll(*t);
    int li = t->index_of(la), mi = t->index_of(mu);
    double threshold = 0.5 * log_factorial(n) - beta * std::sqrt(static_cast<double>(n));

    Int captured = 0;
    for (size_t v = 0; v < t->partitions().size(); ++v) {
        Int fnu = dim_irrep(t->partitions()[v]);
        if (log_int(fnu) <= threshold) continue;  // membership needs f^nu > threshold
        Int g = kron_from_table(*t, li, mi, static_cast<int>(v), cls);
        captured += g * fnu;
    }
    Rat frac(captured, dim_irrep(la) * dim_irrep(mu));
    frac.canonicalize();
    return frac;
}

std::pair<bool, bool> vanishing_predicates(const Partition& la, const Partition& mu,
                                           const Partition& nu) {
    if (la.size() != mu.size() || mu.size() != nu.size())
        throw std::invalid_argument("vanishing_predicates: sizes differ");
    bool regev = static_cast<long long>(la.rows()) >
                 static_cast<long long>(mu.part(1)) * nu.part(1);
    bool dvir = la.rows() > meet(mu, nu).size();
    return {regev, dvir};
}

SaxlScan saxl_scan(int k) {
    if (k < 2) throw std::invalid_argument("saxl_scan: k must be >= 2");
    std::vector<int> stair;
    for (int p = k - 1; p >= 1; --p) stair.push_back(p);
    SaxlScan scan;
    scan.k = k;
    scan.staircase = Partition(stair);
    int n = static_cast<int>(scan.staircase.size());

    auto t = character_table(n);
    auto cls = class_sizes_ll(*t);
    int di = t->index_of(scan.staircase);
    for (size_t v = 0; v < t->partitions().size(); ++v) {
        Int g = kron_from_table(*t, di, di, static_cast<int>(v), cls);
        if (g == 0) scan.vanishing.push_back(t->partitions()[v]);
        if (t->partitions()[v] == scan.staircase) scan.diagonal_positive = (g >= 1);
    }
    return scan;
}

}  // namespace symco
