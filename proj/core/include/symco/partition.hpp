#pragma once

// Integer partitions: the index type for everything in this library.
//
// Text syntax (CLI and all serialized output): comma-separated parts with
// optional exponents, e.g. "4^2,1^3" parses to 4,4,1,1,1; "[]" is the empty
// partition.  Canonical enumeration order is descending lexicographic on part
// sequences; tie-breaks ("lexicographically smallest") use ascending
// lexicographic comparison, which is what operator< implements.

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symco/numbers.hpp"

namespace symco {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    long long size() const { return size_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access; rows beyond the last have length 0.
    int part(int i) const {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const;

    // true iff inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    std::string str() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Ascending lexicographic on part sequences (the witness tie-break order).
    bool operator<(const Partition& o) const {
        return parts_ < o.parts_;
    }

private:
    std::vector<int> parts_;
    long long size_ = 0;
};

// Pointwise min / max, shorter argument padded with zeros.
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);

// Sorted concatenation of parts (multiplicities add).
Partition multiset_union(const Partition& a, const Partition& b);

// (lambda_3, lambda_4, ...) joined with lambda_1+lambda_2 unit parts.
Partition hat_transform(const Partition& la);

// z_alpha = prod_i i^{m_i} m_i!, the centralizer order of cycle type alpha.
Int centralizer_order(const Partition& alpha);

// |alpha|! / z_alpha.
Int conjugacy_class_size(const Partition& alpha);

// All partitions of n in descending lexicographic order ([n] first).
std::vector<Partition> enumerate_partitions(int n);

// p(n) by the pentagonal-number recurrence; memoized, thread-safe.
Int partition_count(int n);

// Visit every mu contained in outer (all sizes 0..|outer|), or of one size.
void for_each_subpartition(const Partition& outer,
                           const std::function<void(const Partition&)>& fn);
void for_each_subpartition_of_size(const Partition& outer, long long k,
                                   const std::function<void(const Partition&)>& fn);

}  // namespace symco
