#include "symco/partition.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <numeric>

namespace symco {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad partition token: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    text = trim(text);
    if (text.empty() || text == "[]") return Partition();
    std::vector<int> parts;
    while (!text.empty()) {
        size_t comma = text.find(',');
        std::string_view tok = trim(text.substr(0, comma));
        text = (comma == std::string_view::npos) ? std::string_view() : text.substr(comma + 1);
        if (tok.empty()) throw std::invalid_argument("empty partition token");
        size_t caret = tok.find('^');
        int value, mult = 1;
        if (caret == std::string_view::npos) {
            value = parse_int(tok);
        } else {
            value = parse_int(trim(tok.substr(0, caret)));
            mult = parse_int(trim(tok.substr(caret + 1)));
            if (mult < 1) throw std::invalid_argument("partition exponent must be >= 1");
        }
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    if (parts_.empty()) return "[]";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) c[j]++;
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

Partition meet(const Partition& a, const Partition& b) {
    int r = std::min(a.rows(), b.rows());
    std::vector<int> m;
    for (int i = 1; i <= r; ++i) m.push_back(std::min(a.part(i), b.part(i)));
    while (!m.empty() && m.back() == 0) m.pop_back();
    return Partition(std::move(m));
}

Partition join(const Partition& a, const Partition& b) {
    int r = std::max(a.rows(), b.rows());
    std::vector<int> m;
    for (int i = 1; i <= r; ++i) m.push_back(std::max(a.part(i), b.part(i)));
    return Partition(std::move(m));
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> m = a.parts();
    m.insert(m.end(), b.parts().begin(), b.parts().end());
    std::sort(m.rbegin(), m.rend());
    return Partition(std::move(m));
}

Partition hat_transform(const Partition& la) {
    std::vector<int> m(la.parts().begin() + std::min<size_t>(2, la.parts().size()),
                       la.parts().end());
    m.insert(m.end(), static_cast<size_t>(la.part(1) + la.part(2)), 1);
    std::sort(m.rbegin(), m.rend());
    return Partition(std::move(m));
}

Int centralizer_order(const Partition& alpha) {
    Int z = 1;
    const auto& p = alpha.parts();
    for (size_t i = 0; i < p.size();) {
        size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        long mult = static_cast<long>(j - i);
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p[i]),
                      static_cast<unsigned long>(mult));
        z *= pw * factorial(mult);
        i = j;
    }
    return z;
}

Int conjugacy_class_size(const Partition& alpha) {
    Int q = factorial(alpha.size());
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), centralizer_order(alpha).get_mpz_t());
    return q;
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(prefix));
        return;
    }
    for (int p = std::min(maxpart, remaining); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(n, n, prefix, out);
    return out;
}

namespace {
std::mutex pcount_mutex;
std::vector<Int> pcount_memo = {Int(1)};
}  // namespace

Int partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: n < 0");
    std::lock_guard<std::mutex> lock(pcount_mutex);
    while (static_cast<int>(pcount_memo.size()) <= n) {
        int m = static_cast<int>(pcount_memo.size());
        Int acc = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) acc += sign * pcount_memo[m - g1];
            if (g2 <= m) acc += sign * pcount_memo[m - g2];
        }
        pcount_memo.push_back(acc);
    }
    return pcount_memo[n];
}

namespace {

void gen_sub(const Partition& outer, int row, int prev, long long want,
             std::vector<int>& prefix,
             const std::function<void(const Partition&)>& fn) {
    // want < 0 means "any size"; otherwise the remaining cells to place.
    if (want == 0 || row > outer.rows()) {
        if (want <= 0) {
            auto p = prefix;
            while (!p.empty() && p.back() == 0) p.pop_back();
            fn(Partition(p));
        }
        return;
    }
    int hi = std::min(outer.part(row), prev);
    if (want >= 0) {
        // Feasibility: even filling all later rows at their caps must reach want.
        long long cap = 0;
        for (int r = row; r <= outer.rows(); ++r) cap += std::min(outer.part(r), prev);
        if (cap < want) return;
        hi = static_cast<int>(std::min<long long>(hi, want));
    }
    for (int v = hi; v >= 0; --v) {
        prefix.push_back(v);
        if (v == 0) {
            gen_sub(outer, outer.rows() + 1, v, want, prefix, fn);
        } else {
            gen_sub(outer, row + 1, v, want < 0 ? want : want - v, prefix, fn);
        }
        prefix.pop_back();
        if (v == 0) break;
    }
}

}  // namespace

void for_each_subpartition(const Partition& outer,
                           const std::function<void(const Partition&)>& fn) {
    std::vector<int> prefix;
    gen_sub(outer, 1, outer.part(1), -1, prefix, fn);
}

void for_each_subpartition_of_size(const Partition& outer, long long k,
                                   const std::function<void(const Partition&)>& fn) {
    if (k < 0 || k > outer.size()) return;
    std::vector<int> prefix;
    gen_sub(outer, 1, outer.part(1), k, prefix, fn);
}

}  // namespace symco
