#pragma once

// Kronecker coefficients g(lambda,mu,nu) from exact character tables, the
// squared-sum identity, refined and global maxima, constructive searches,
// concentration fractions, and the Regev/Dvir vanishing predicates.

#include <utility>
#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"
#include "symco/report.hpp"

namespace symco {

// g(lambda,mu,nu) = sum over classes alpha of chi chi chi / z_alpha, computed
// exactly; integrality and nonnegativity are asserted.
Int kronecker(const Partition& la, const Partition& mu, const Partition& nu);

struct KronSquares {
    Int z_sum;      // A(n) = sum over alpha of z_alpha
    bool verified;  // brute-force sum of g^2 compared when n is small enough
};

// The z-side is cheap for large n; the brute-force comparison runs for
// n <= brute_cap and throws on mismatch.
KronSquares kron_sum_squares(int n, int brute_cap = 8);

// K(lambda,mu) = max over nu of g, all attaining nu recorded.
MaxRecord refined_max_kron(const Partition& la, const Partition& mu);

// K(n) over all triples; witnesses are full (lambda,mu,nu) tuples.  The
// p(n)^3-shaped scan is capped (default 12).
MaxRecord max_kron(int n, unsigned threads = 1, int brute_cap = 12);

// sqrt(n!)/p(n)^{3/2} <= K(n) <= D(n) and D(n)^2/sqrt(p(n) n!) <= K(n).
BoundReport kron_bounds_report(int n);

// f^la f^mu / sqrt(p(n) n!) <= K(la,mu) <= min(f^la, f^mu), plus the quartic
// inequality A(la,mu) n! >= (f^la f^mu)^2, all decided exactly.
BoundReport refined_kron_bounds(const Partition& la, const Partition& mu);

// The lambda maximizing g(lambda,mu,nu) f^lambda (ties to the smaller
// lambda), with the guarantees of the constructive existence theorem checked.
std::pair<Partition, Int> find_large_kron(const Partition& mu, const Partition& nu);

// Fraction of f^la f^mu captured by nu with f^nu above the Plancherel-style
// threshold sqrt(n!) e^{-beta sqrt(n)}; exact rational.
Rat concentration_fraction(const Partition& la, const Partition& mu, double beta);

// (Regev: rows(la) > mu_1 nu_1, Dvir: rows(la) > |meet(mu,nu)|); each is a
// sufficient condition for g = 0.
std::pair<bool, bool> vanishing_predicates(const Partition& la, const Partition& mu,
                                           const Partition& nu);

struct SaxlScan {
    int k = 0;
    Partition staircase;
    std::vector<Partition> vanishing;  // nu with g(delta,delta,nu) = 0
    bool diagonal_positive = false;    // g(delta,delta,delta) >= 1
};

// Scans all nu for the staircase tensor square; empty `vanishing` means the
// Saxl property holds at this size.
SaxlScan saxl_scan(int k);

}  // namespace symco
