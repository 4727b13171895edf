#pragma once

// Exact irreducible character values of S_n via the Murnaghan-Nakayama
// border-strip recursion, memoized and assembled into full per-n tables.
//
// Tables are built once per process (concurrent requests share the build),
// and can be cached on disk: one file per n, line-oriented,
//   CHARTABLE v1 n=<n>
//   <lambda-text>\t<alpha-text>\t<value>
// with rows/columns in canonical partition order.  Values are exact decimals,
// bit-exact across platforms.

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "symco/numbers.hpp"
#include "symco/partition.hpp"

namespace symco {

class CharTable {
public:
    CharTable(int n, std::vector<Partition> parts, std::vector<std::vector<long long>> chi);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    int index_of(const Partition& p) const;

    // chi^lambda(alpha) by table index (rows lambda, columns alpha).
    long long at(int lambda_idx, int alpha_idx) const { return chi_[lambda_idx][alpha_idx]; }
    Int value(const Partition& la, const Partition& alpha) const;

    // Dimension column chi^lambda(1^n).
    long long dim(int lambda_idx) const { return chi_[lambda_idx].back(); }

    void save(const std::string& path) const;
    static std::shared_ptr<const CharTable> load(const std::string& path, int expect_n);

private:
    int n_;
    std::vector<Partition> parts_;
    std::vector<std::vector<long long>> chi_;
    std::unordered_map<std::string, int> index_;
};

// Single character value chi^lambda(alpha); |lambda| must equal |alpha|.
Int character_value(const Partition& la, const Partition& alpha);

// Full table for S_n, computed once per process and shared; loaded from the
// cache directory when present and version-compatible.  n above the cap is a
// resource-limit error.
std::shared_ptr<const CharTable> character_table(int n, unsigned threads = 0);

int character_cap();
void set_character_cap(int cap);

// Cache directory: taken from $SYMCO_CACHE_DIR at startup, overridable here;
// empty string disables disk caching.
std::string character_cache_dir();
void set_character_cache_dir(const std::string& dir);

}  // namespace symco
