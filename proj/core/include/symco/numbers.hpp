#pragma once

// Exact arithmetic aliases and small numeric helpers shared by all modules.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace symco {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an identity or bound that must hold exactly fails; carries a
// witness description so the CLI can name the offending tuple.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request exceeds a configured size cap.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

Int factorial(long n);
Int binomial(long n, long k);

// Natural log of a positive big integer, accurate to double precision.
inline double log_int(const Int& v) {
    long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_rat(const Rat& v) {
    return log_int(Int(v.get_num())) - log_int(Int(v.get_den()));
}

inline double log_factorial(long n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Relative tolerance used for every log-domain bound comparison.
inline constexpr double kLogTolerance = 1e-9;

// a <= b up to relative log-domain tolerance.
inline bool log_leq(double a, double b) {
    return a <= b + kLogTolerance * (1.0 + std::fabs(a) + std::fabs(b));
}

}  // namespace symco
