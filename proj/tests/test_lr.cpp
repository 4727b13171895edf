#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "symco/characters.hpp"
#include "symco/dimensions.hpp"
#include "symco/lr.hpp"
#include "symco/partition.hpp"
#include "symco/skew.hpp"

using namespace symco;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

// Independent oracle: c^la_{mu,nu} as the restriction multiplicity
//   sum over (alpha |- k, beta |- n-k) of
//     chi^la(alpha u beta) chi^mu(alpha) chi^nu(beta) / (z_alpha z_beta),
// computed with exact rationals from the character tables.
Int lr_character_oracle(const Partition& la, const Partition& mu, const Partition& nu) {
    int n = static_cast<int>(la.size());
    int k = static_cast<int>(mu.size());
    Rat acc = 0;
    for (const auto& alpha : enumerate_partitions(k)) {
        for (const auto& beta : enumerate_partitions(n - k)) {
            Int prod = character_value(la, multiset_union(alpha, beta)) *
                       character_value(mu, alpha) * character_value(nu, beta);
            Rat term(prod, centralizer_order(alpha) * centralizer_order(beta));
            term.canonicalize();
            acc += term;
        }
    }
    REQUIRE(acc.get_den() == 1);
    return Int(acc.get_num());
}

Partition bump_first_row(const Partition& p) {
    std::vector<int> parts = p.parts();
    if (parts.empty())
        parts.push_back(1);
    else
        parts[0]++;
    return Partition(parts);
}

}  // namespace

TEST_CASE("point coefficients") {
    CHECK(lr_coefficient(P("2"), P("1"), P("1")) == 1);
    CHECK(lr_coefficient(P("3,2,1"), P("2,1"), P("2,1")) == 2);
    CHECK(lr_coefficient(P("2,2"), P("2"), P("1,1")) == 0);
    CHECK_THROWS_AS(lr_coefficient(P("3"), P("1"), P("1")), std::invalid_argument);
    CHECK(lr_coefficient(P("[]"), P("[]"), P("[]")) == 1);
}

TEST_CASE("tableau rule matches the character-restriction oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k))
                        CHECK(lr_coefficient(la, mu, nu) ==
                              lr_character_oracle(la, mu, nu));
}

TEST_CASE("expansions") {
    LRExpansion e1 = lr_expand(P("2,2"), P("1"));
    REQUIRE(e1.coeffs.size() == 1);
    CHECK(e1.coeffs.at(P("2,1")) == 1);

    LRExpansion e2 = lr_expand(P("3,1"), P("2"));
    REQUIRE(e2.coeffs.size() == 2);
    CHECK(e2.coeffs.at(P("2")) == 1);
    CHECK(e2.coeffs.at(P("1,1")) == 1);

    LRExpansion e3 = lr_expand(P("3,2"), P("3,2"));
    REQUIRE(e3.coeffs.size() == 1);
    CHECK(e3.coeffs.at(P("[]")) == 1);

    CHECK(lr_expand(P("2"), P("1,1")).coeffs.empty());

    // Expansion consistency: sum of c f^nu is the skew SYT count, and every
    // content fits inside lambda.
    for (int n = 1; n <= 7; ++n)
        for (const auto& la : enumerate_partitions(n))
            for_each_subpartition(la, [&](const Partition& mu) {
                LRExpansion ex = lr_expand(la, mu);
                for (const auto& [nu, c] : ex.coeffs) {
                    CHECK(c > 0);
                    CHECK(nu.size() == la.size() - mu.size());
                    CHECK(nu.part(1) <= la.part(1));
                    CHECK(nu.rows() <= la.rows());
                }
            });
}

TEST_CASE("hive backend agrees everywhere small") {
    CHECK(lr_coefficient_hive(P("2"), P("1"), P("1")) == 1);
    CHECK(lr_coefficient_hive(P("3,2,1"), P("2,1"), P("2,1")) == 2);
    CHECK(lr_coefficient_hive(P("4,2"), P("2,1"), P("2,1")) == 1);
    for (int n = 1; n <= 7; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k))
                        CHECK(lr_coefficient_hive(la, mu, nu) ==
                              lr_coefficient(la, mu, nu));
}

TEST_CASE("series coefficients") {
    CHECK(hw_coefficient(0, 0) == 1);
    CHECK(hw_coefficient(1, 1) == 2);
    CHECK(hw_coefficient(2, 2) == 10);

    CHECK(bicolored_count(0) == 1);
    CHECK(bicolored_count(1) == 2);
    CHECK(bicolored_count(2) == 6);

    // p2(n) ~ K 2^n with K about 3.4627466195.
    for (int n = 25; n <= 40; ++n) {
        double ratio = std::exp(log_int(bicolored_count(n)) - n * std::log(2.0));
        CHECK(ratio >= 3.40);
        CHECK(ratio <= 3.47);
    }
}

TEST_CASE("harris-willenbring equals enumerated squared sums") {
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            Int total = 0;
            for (const auto& la : enumerate_partitions(n))
                for_each_subpartition_of_size(la, k, [&](const Partition& mu) {
                    LRExpansion ex = lr_expand(la, mu);
                    for (const auto& [nu, c] : ex.coeffs) total += c * c;
                });
            CHECK(hw_coefficient(k, n - k) == total);
        }
}

TEST_CASE("refined maxima") {
    MaxRecord one_row = refined_max_lr(P("6"));
    CHECK(one_row.value == 1);

    MaxRecord stair = refined_max_lr(P("3,2,1"));
    CHECK(stair.value == 2);
    bool found = false;
    for (const auto& w : stair.witnesses)
        if (w[0].str() == "2,1" && w[1].str() == "2,1") found = true;
    CHECK(found);
}

TEST_CASE("hook content bound") {
    CHECK(hook_content_bound(P("1"), 1) == 2);
    CHECK(hook_content_bound(P("2,1"), 2) == 10);
    CHECK(hook_content_bound(P("2,2"), 2) == 20);
    CHECK_THROWS_AS(hook_content_bound(P("2,2"), 1), std::invalid_argument);
}

TEST_CASE("tree certificates") {
    TreeCertificate t1 = tree_certificate(P("2,2"), P("2"), P("2"));
    CHECK(t1.product == 1);
    CHECK(dim_irrep(P("2,2")) >= t1.product);

    TreeCertificate t2 = tree_certificate(P("2"), P("1"), P("1"));
    CHECK(t2.product == 1);

    TreeCertificate t3 = tree_certificate(P("3,2,1"), P("2,1"), P("2,1"));
    CHECK(t3.product >= 2);
    CHECK(t3.product <= 16);

    CHECK_THROWS_AS(tree_certificate(P("2,2"), P("2"), P("1,1")),
                    std::invalid_argument);
}

TEST_CASE("skew cauchy squares") {
    SkewCauchyReport r1 = verify_skew_cauchy_square(P("1"), P("1"));
    CHECK(r1.lhs == 2);
    CHECK(r1.rhs == 2);
    CHECK(r1.ok);

    SkewCauchyReport r2 = verify_skew_cauchy_square(P("2"), P("2"));
    CHECK(r2.lhs == 3);
    CHECK(r2.ok);

    SkewCauchyReport r3 = verify_skew_cauchy_square(P("[]"), P("3,1"));
    CHECK(r3.lhs == 1);
    CHECK(r3.ok);

    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (const auto& mu : enumerate_partitions(a))
                for (const auto& nu : enumerate_partitions(b))
                    CHECK(verify_skew_cauchy_square(mu, nu).ok);
}

TEST_CASE("lpp modularity") {
    CHECK(verify_lpp(P("3,1"), P("2"), P("1,1")));
    CHECK(verify_lpp(P("3,2,1"), P("2,1"), P("2,1")));
    CHECK(verify_lpp(P("4,2"), P("3"), P("2,1")));
    for (int n = 2; n <= 8; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k))
                        CHECK(verify_lpp(la, mu, nu));
}

TEST_CASE("row-count vanishing") {
    CHECK(lr_vanishing_rows(P("1,1,1,1"), P("2"), P("2")));
    CHECK(lr_coefficient(P("1,1,1,1"), P("2"), P("2")) == 0);
    CHECK_FALSE(lr_vanishing_rows(P("2,2"), P("2"), P("2")));
    CHECK_FALSE(lr_vanishing_rows(P("1,1"), P("1"), P("1")));
    for (int n = 2; n <= 8; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 1; k < n; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k))
                        if (lr_vanishing_rows(la, mu, nu))
                            CHECK(lr_coefficient(la, mu, nu) == 0);
}

TEST_CASE("monotone embedding in the first row") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 0; k <= n; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k))
                        CHECK(lr_coefficient(la, mu, nu) <=
                              lr_coefficient(bump_first_row(la), mu, bump_first_row(nu)));
}

TEST_CASE("coefficient below the skew count over the complement") {
    // c^la_{mu,nu} f^mu <= f^{la/nu} whenever nu fits inside la.
    for (int n = 1; n <= 9; ++n)
        for (const auto& la : enumerate_partitions(n))
            for_each_subpartition(la, [&](const Partition& nu) {
                Int skew = skew_syt_count(SkewShape(la, nu));
                LRExpansion ex = lr_expand(la, nu);
                for (const auto& [mu, c] : ex.coeffs)
                    CHECK(c * dim_irrep(mu) <= skew);
            });
}

TEST_CASE("conjugation and commutativity") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int k = 0; k <= n / 2; ++k)
                for (const auto& mu : enumerate_partitions(k))
                    for (const auto& nu : enumerate_partitions(n - k)) {
                        Int c = lr_coefficient(la, mu, nu);
                        CHECK(c == lr_coefficient(la, nu, mu));
                        CHECK(c == lr_coefficient(la.conjugate(), mu.conjugate(),
                                                  nu.conjugate()));
                    }
}

TEST_CASE("identity reports") {
    LrIdentityReport r21 = verify_lr_identities(2, 1);
    CHECK(r21.ok);
    CHECK(r21.sum_sq_total == 2);

    LrIdentityReport r42 = verify_lr_identities(4, 2);
    CHECK(r42.ok);
    CHECK(r42.sum_sq_total == 10);
    CHECK(r42.binom == 6);
    CHECK(r42.product_form == 10);
    CHECK(r42.centralizer_form == 10);

    LrIdentityReport r50 = verify_lr_identities(5, 0);
    CHECK(r50.ok);
    CHECK(r50.sum_sq_total == partition_count(5));

    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(verify_lr_identities(n, k).ok);
}
