#include "symco/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>

#include "symco/parallel.hpp"

namespace symco {

namespace {

// Beta-number form of a shape: strictly decreasing b_i = la_i + (L - i) over L
// slots.  Removing a border strip of length s is replacing some b by b - s
// when b - s is >= 0 and not already a beta number; the strip's height parity
// is the number of beta values jumped over.
struct StripMove {
    std::vector<int> next_shape;
    int sign;
};

void strip_removals(const std::vector<int>& shape, int s, std::vector<StripMove>& out) {
    out.clear();
    int rows = static_cast<int>(shape.size());
    std::vector<int> beta(rows);
    for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);
    for (int i = 0; i < rows; ++i) {
        int target = beta[i] - s;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < rows; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> next(rows);
        for (int j = 0; j < rows; ++j) next[j] = nb[j] - (rows - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        out.push_back({std::move(next), (jumped % 2) ? -1 : 1});
    }
}

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

}  // namespace

CharTable::CharTable(int n, std::vector<Partition> parts,
                     std::vector<std::vector<long long>> chi)
    : n_(n), parts_(std::move(parts)), chi_(std::move(chi)) {
    for (size_t i = 0; i < parts_.size(); ++i) index_[parts_[i].str()] = static_cast<int>(i);
}

int CharTable::index_of(const Partition& p) const {
    auto it = index_.find(p.str());
    if (it == index_.end())
        throw std::invalid_argument("partition " + p.str() + " is not a partition of " +
                                    std::to_string(n_));
    return it->second;
}

Int CharTable::value(const Partition& la, const Partition& alpha) const {
    return Int(static_cast<long>(chi_[index_of(la)][index_of(alpha)]));
}

Int character_value(const Partition& la, const Partition& alpha) {
    if (la.size() != alpha.size())
        throw std::invalid_argument("character_value: |lambda| != |alpha|");
    if (la.empty()) return 1;
    // One memo per depth, keyed by remaining shape.
    std::vector<std::unordered_map<std::vector<int>, Int, VecHash>> memos(alpha.rows() + 1);
    std::function<Int(const std::vector<int>&, size_t)> rec =
        [&](const std::vector<int>& shape, size_t depth) -> Int {
        if (shape.empty()) return 1;
        auto& m = memos[depth];
        auto it = m.find(shape);
        if (it != m.end()) return it->second;
        Int acc = 0;
        std::vector<StripMove> moves;
        strip_removals(shape, alpha.parts()[depth], moves);
        for (auto& mv : moves) {
            Int sub = rec(mv.next_shape, depth + 1);
            acc += (mv.sign > 0) ? sub : -sub;
        }
        m.emplace(shape, acc);
        return acc;
    };
    return rec(la.parts(), 0);
}

namespace {

std::mutex config_mutex;
int char_cap = 20;
bool cache_dir_initialized = false;
std::string cache_dir_value;

std::vector<std::vector<long long>> compute_table(int n, const std::vector<Partition>& parts,
                                                  unsigned threads) {
    std::vector<std::vector<long long>> chi(parts.size(),
                                            std::vector<long long>(parts.size()));
    // Columns (classes) are independent; each gets its own per-depth memos.
    parallel_for(parts.size(), threads, [&](size_t a) {
        const auto& alpha = parts[a];
        std::vector<std::unordered_map<std::vector<int>, long long, VecHash>> memos(
            alpha.rows() + 1);
        std::function<long long(const std::vector<int>&, size_t)> rec =
            [&](const std::vector<int>& shape, size_t depth) -> long long {
            if (shape.empty()) return 1;
            auto& m = memos[depth];
            auto it = m.find(shape);
            if (it != m.end()) return it->second;
            long long acc = 0;
            std::vector<StripMove> moves;
            strip_removals(shape, alpha.parts()[depth], moves);
            for (auto& mv : moves) acc += mv.sign * rec(mv.next_shape, depth + 1);
            m.emplace(shape, acc);
            return acc;
        };
        for (size_t l = 0; l < parts.size(); ++l) chi[l][a] = rec(parts[l].parts(), 0);
    });
    return chi;
}

std::string cache_path(const std::string& dir, int n) {
    return dir + "/chartable_n" + std::to_string(n) + ".tsv";
}

}  // namespace

int character_cap() {
    std::lock_guard<std::mutex> lock(config_mutex);
    return char_cap;
}

void set_character_cap(int cap) {
    if (cap < 1 || cap > 30)
        throw std::invalid_argument("character cap must be between 1 and 30");
    std::lock_guard<std::mutex> lock(config_mutex);
    char_cap = cap;
}

std::string character_cache_dir() {
    std::lock_guard<std::mutex> lock(config_mutex);
    if (!cache_dir_initialized) {
        const char* env = std::getenv("SYMCO_CACHE_DIR");
        cache_dir_value = env ? env : "";
        cache_dir_initialized = true;
    }
    return cache_dir_value;
}

void set_character_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(config_mutex);
    cache_dir_initialized = true;
    cache_dir_value = dir;
}

void CharTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write character cache: " + path);
    out << "CHARTABLE v1 n=" << n_ << "\n";
    for (size_t l = 0; l < parts_.size(); ++l)
        for (size_t a = 0; a < parts_.size(); ++a)
            out << parts_[l].str() << '\t' << parts_[a].str() << '\t' << chi_[l][a] << "\n";
}

std::shared_ptr<const CharTable> CharTable::load(const std::string& path, int expect_n) {
    std::ifstream in(path);
    if (!in) return nullptr;
    std::string header;
    if (!std::getline(in, header)) return nullptr;
    if (header != "CHARTABLE v1 n=" + std::to_string(expect_n)) return nullptr;
    auto parts = enumerate_partitions(expect_n);
    std::vector<std::vector<long long>> chi(parts.size(),
                                            std::vector<long long>(parts.size()));
    std::string line;
    for (size_t l = 0; l < parts.size(); ++l) {
        for (size_t a = 0; a < parts.size(); ++a) {
            if (!std::getline(in, line)) return nullptr;
            size_t t1 = line.find('\t');
            size_t t2 = (t1 == std::string::npos) ? std::string::npos : line.find('\t', t1 + 1);
            if (t2 == std::string::npos) return nullptr;
            if (line.compare(0, t1, parts[l].str()) != 0) return nullptr;
            if (line.compare(t1 + 1, t2 - t1 - 1, parts[a].str()) != 0) return nullptr;
            chi[l][a] = std::stoll(line.substr(t2 + 1));
        }
    }
    return std::make_shared<CharTable>(expect_n, std::move(parts), std::move(chi));
}

namespace {

std::mutex registry_mutex;
std::map<int, std::shared_future<std::shared_ptr<const CharTable>>> registry;

}  // namespace

std::shared_ptr<const CharTable> character_table(int n, unsigned threads) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    if (n > character_cap())
        throw resource_limit_error("character_table: n=" + std::to_string(n) +
                                   " exceeds cap " + std::to_string(character_cap()));
    if (threads == 0) threads = default_threads();

    std::shared_future<std::shared_ptr<const CharTable>> fut;
    std::promise<std::shared_ptr<const CharTable>> prom;
    bool builder = false;
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry.find(n);
        if (it == registry.end()) {
            fut = prom.get_future().share();
            registry.emplace(n, fut);
            builder = true;
        } else {
            fut = it->second;
        }
    }
    if (!builder) return fut.get();

    try {
        std::shared_ptr<const CharTable> table;
        std::string dir = character_cache_dir();
        if (!dir.empty()) table = CharTable::load(cache_path(dir, n), n);
        if (!table) {
            auto parts = enumerate_partitions(n);
            auto chi = compute_table(n, parts, threads);
            table = std::make_shared<CharTable>(n, std::move(parts), std::move(chi));
            if (!dir.empty()) {
                std::error_code ec;
                std::filesystem::create_directories(dir, ec);
                try {
                    table->save(cache_path(dir, n));
                } catch (const std::exception&) {
                    // Cache writes are best-effort.
                }
            }
        }
        prom.set_value(table);
        return table;
    } catch (...) {
        prom.set_exception(std::current_exception());
        {
            std::lock_guard<std::mutex> lock(registry_mutex);
            registry.erase(n);
        }
        throw;
    }
}

}  // namespace symco
