#pragma once

// Littlewood-Richardson coefficients by two independent backends (the LR
// tableau rule and Knutson-Tao hive counting), one-pass expansions, the
// Harris-Willenbring series, and the identity/bound verifiers built on them.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"
#include "symco/report.hpp"

namespace symco {

// All nu with c^lambda_{mu,nu} > 0, from one enumeration of LR tableaux of
// lambda/mu grouped by content.
struct LRExpansion {
    Partition lambda;
    Partition mu;
    std::map<Partition, Int> coeffs;
};

// c^lambda_{mu,nu}: LR skew semistandard tableaux of shape lambda/mu with
// content nu and lattice reading word.  |mu| + |nu| must equal |lambda|.
Int lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu);

// Same value as a lattice-point count of the hive polytope with boundary
// (lambda, mu, nu); independent of the tableau backend.
Int lr_coefficient_hive(const Partition& la, const Partition& mu, const Partition& nu);

// Empty expansion (not an error) when mu is not contained in lambda.
LRExpansion lr_expand(const Partition& la, const Partition& mu);

// [q^k t^m] prod_i 1/(1 - q^i - t^i); equals sum of squared LR coefficients
// over (lambda |- k+m, mu |- k, nu |- m).
Int hw_coefficient(int k, int m);

// Bicolored partition count p2(n): coefficients of prod_i 1/(1 - 2 t^i).
Int bicolored_count(int n);

// C(lambda) = max over all splits k and (mu |- k, nu |- n-k) of c^lambda_{mu,nu}.
MaxRecord refined_max_lr(const Partition& la);

// prod over cells of (2l + j - i)/(l + j - i); requires l >= rows(lambda).
// When |lambda| is small enough to scan, also asserts C(lambda)^2 <= bound.
Rat hook_content_bound(const Partition& la, int l);

struct TreeCertificate {
    std::string description;
    Int product;
};

// Greedy full binary certificate tree: root children (mu, nu), deeper nodes
// split to maximize the LR coefficient; the product of node coefficients is
// a lower-bound certificate for f^lambda.
TreeCertificate tree_certificate(const Partition& la, const Partition& mu,
                                 const Partition& nu);

struct SkewCauchyReport {
    Int lhs;  // sum over lambda of (c^lambda_{mu,nu})^2
    Int rhs;  // quadruple LR sum from the skew Cauchy identity
    bool ok;
};

SkewCauchyReport verify_skew_cauchy_square(const Partition& mu, const Partition& nu);

// c^lambda_{mu,nu} <= c^lambda_{meet,join}.
bool verify_lpp(const Partition& la, const Partition& mu, const Partition& nu);

// Sufficient vanishing test: rows(lambda) > rows(mu) + rows(nu).
bool lr_vanishing_rows(const Partition& la, const Partition& mu, const Partition& nu);

struct LrIdentityReport {
    int n = 0, k = 0;
    Int sum_sq_total;       // sum of c^2 over all triples at this (n, k)
    Int binom;              // C(n, k)
    Int product_form;       // sum over (alpha, beta) of prod binom(m_i+m'_i, m_i)
    Rat centralizer_form;   // sum over (alpha, beta) of z_{alpha u beta}/(z_alpha z_beta)
    bool ok = true;
    std::string failure;    // names the witness on the first violated identity
};

// Verifies both expansion identities, the squared-sum closed forms, the
// per-slice upper bounds and the sandwich, all by full enumeration.
LrIdentityReport verify_lr_identities(int n, int k);

}  // namespace symco
