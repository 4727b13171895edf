#pragma once

// Extremal-value records and structured bound reports.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"

namespace symco {

// An attaining argument tuple, e.g. (lambda) for D(n) or (lambda,mu,nu) for
// C(n,k).  Compared componentwise, ascending lexicographic per partition.
using Witness = std::vector<Partition>;

inline bool witness_less(const Witness& a, const Witness& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Maximal value plus all attaining tuples, lexicographically smallest first,
// capped at kMaxWitnesses; attain_count always counts every tuple.
struct MaxRecord {
    static constexpr size_t kMaxWitnesses = 64;

    Int value = 0;
    std::vector<Witness> witnesses;
    unsigned long long attain_count = 0;

    void offer(const Int& v, Witness w) {
        if (attain_count == 0 || v > value) {
            value = v;
            witnesses.assign(1, std::move(w));
            attain_count = 1;
        } else if (v == value) {
            ++attain_count;
            witnesses.push_back(std::move(w));
            if (witnesses.size() > 4 * kMaxWitnesses) trim();
        }
    }

    // Merge another record computed over a disjoint slice of the search space.
    void merge(const MaxRecord& o) {
        if (o.attain_count == 0) return;
        if (attain_count == 0 || o.value > value) {
            *this = o;
        } else if (o.value == value) {
            attain_count += o.attain_count;
            witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
            if (witnesses.size() > 4 * kMaxWitnesses) trim();
        }
    }

    void finalize() { trim(); }

    bool has_witness(const Witness& w) const {
        return std::find(witnesses.begin(), witnesses.end(), w) != witnesses.end();
    }

private:
    void trim() {
        std::sort(witnesses.begin(), witnesses.end(), witness_less);
        witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
        if (witnesses.size() > kMaxWitnesses) witnesses.resize(kMaxWitnesses);
    }
};

// One evaluated inequality, in log domain for display; `exactly` marks lines
// that were additionally decided by exact integer/rational comparison.
struct BoundLine {
    std::string name;
    double log_lower;
    double log_value;
    double log_upper;
    bool ok = false;
    bool exactly = false;
};

struct BoundReport {
    std::string subject;
    std::optional<Int> exact_value;
    std::vector<BoundLine> lines;
    std::vector<Witness> witnesses;
    bool pass = true;

    void add(BoundLine line) {
        pass = pass && line.ok;
        lines.push_back(std::move(line));
    }
};

}  // namespace symco
