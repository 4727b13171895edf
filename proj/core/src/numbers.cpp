#include "symco/numbers.hpp"

#include <mutex>
#include <vector>

namespace symco {

namespace {
std::mutex fact_mutex;
std::vector<Int> fact_memo = {Int(1)};
}  // namespace

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    std::lock_guard<std::mutex> lock(fact_mutex);
    while (static_cast<long>(fact_memo.size()) <= n) {
        fact_memo.push_back(fact_memo.back() * static_cast<long>(fact_memo.size()));
    }
    return fact_memo[n];
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace symco
