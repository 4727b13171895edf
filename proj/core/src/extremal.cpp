#include "symco/extremal.hpp"

#include <chrono>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <mutex>

#include "symco/dimensions.hpp"
#include "symco/lr.hpp"
#include "symco/parallel.hpp"
#include "symco/skew.hpp"

namespace symco {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    bool active = false;

    void check() const {
        if (active && Clock::now() > at)
            throw resource_limit_error("time budget exceeded");
    }
};

Deadline make_deadline(double seconds) {
    Deadline d;
    if (seconds > 0) {
        d.active = true;
        d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds));
    }
    return d;
}

std::vector<MaxRecord> compute_cnk_row(int n, unsigned threads, const Deadline& deadline) {
    auto lambdas = enumerate_partitions(n);
    std::vector<std::vector<MaxRecord>> partial(lambdas.size());
    parallel_for(lambdas.size(), threads, [&](size_t i) {
        deadline.check();
        auto& local = partial[i];
        local.assign(n + 1, MaxRecord{});
        const Partition& la = lambdas[i];
        for_each_subpartition(la, [&](const Partition& mu) {
            LRExpansion ex = lr_expand(la, mu);
            int k = static_cast<int>(mu.size());
            for (const auto& [nu, c] : ex.coeffs) local[k].offer(c, {la, mu, nu});
        });
    });
    std::vector<MaxRecord> row(n + 1);
    for (auto& local : partial)
        for (int k = 0; k <= n; ++k) row[k].merge(local[k]);
    for (auto& rec : row) rec.finalize();
    return row;
}

std::mutex row_mutex;
std::map<int, std::shared_future<std::shared_ptr<const std::vector<MaxRecord>>>> row_cache;

std::shared_ptr<const std::vector<MaxRecord>> cnk_row_ptr(int n, const TableOptions& opts) {
    if (n < 0) throw std::invalid_argument("cnk row: n < 0");
    int cap = opts.stretch ? kCnkStretchCap : kCnkTableCap;
    if (n > cap)
        throw resource_limit_error(
            "C(n,k) row " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
            (opts.stretch ? "" : " (pass the stretch flag for rows up to 23)"));

    std::shared_future<std::shared_ptr<const std::vector<MaxRecord>>> fut;
    std::promise<std::shared_ptr<const std::vector<MaxRecord>>> prom;
    bool builder = false;
    {
        std::lock_guard<std::mutex> lock(row_mutex);
        auto it = row_cache.find(n);
        if (it == row_cache.end()) {
            fut = prom.get_future().share();
            row_cache.emplace(n, fut);
            builder = true;
        } else {
            fut = it->second;
        }
    }
    if (!builder) return fut.get();
    try {
        auto row = std::make_shared<const std::vector<MaxRecord>>(
            compute_cnk_row(n, opts.threads ? opts.threads : default_threads(),
                            make_deadline(opts.time_budget_seconds)));
        prom.set_value(row);
        return row;
    } catch (...) {
        prom.set_exception(std::current_exception());
        std::lock_guard<std::mutex> lock(row_mutex);
        row_cache.erase(n);
        throw;
    }
}

}  // namespace

const std::vector<MaxRecord>& cnk_row(int n, const TableOptions& opts) {
    static std::mutex keep_mutex;
    static std::map<int, std::shared_ptr<const std::vector<MaxRecord>>> keep;
    auto ptr = cnk_row_ptr(n, opts);
    std::lock_guard<std::mutex> lock(keep_mutex);
    auto& slot = keep[n];
    if (!slot) slot = ptr;
    return *slot;
}

CnkTable table_cnk(int n_max, const TableOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("table_cnk: n_max < 0");
    int cap = opts.stretch ? kCnkStretchCap : kCnkTableCap;
    if (n_max > cap)
        throw resource_limit_error("table_cnk: n_max " + std::to_string(n_max) +
                                   " exceeds cap " + std::to_string(cap));
    CnkTable t;
    t.n_max = n_max;
    t.entries.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) t.entries[n] = cnk_row(n, opts);
    return t;
}

Int cnk_single(int n, int k, unsigned threads) {
    if (k < 0 || k > n) throw std::invalid_argument("cnk_single: need 0 <= k <= n");
    if (n > 30) throw resource_limit_error("cnk_single: n exceeds 30");
    static std::mutex single_mutex;
    static std::map<std::pair<int, int>, Int> single_cache;
    {
        std::lock_guard<std::mutex> lock(single_mutex);
        auto it = single_cache.find({n, k});
        if (it != single_cache.end()) return it->second;
    }
    auto lambdas = enumerate_partitions(n);
    std::vector<Int> best(lambdas.size(), 0);
    parallel_for(lambdas.size(), threads ? threads : default_threads(), [&](size_t i) {
        for_each_subpartition_of_size(lambdas[i], k, [&](const Partition& mu) {
            LRExpansion ex = lr_expand(lambdas[i], mu);
            for (const auto& [nu, c] : ex.coeffs)
                if (c > best[i]) best[i] = c;
        });
    });
    Int value = 0;
    for (const auto& b : best) value = std::max(value, b);
    std::lock_guard<std::mutex> lock(single_mutex);
    single_cache.emplace(std::make_pair(n, k), value);
    return value;
}

MaxRecord max_lr(int n, const TableOptions& opts) {
    const auto& row = cnk_row(n, opts);
    MaxRecord rec;
    for (const auto& cell : row) rec.merge(cell);
    rec.finalize();
    return rec;
}

MaxRecord max_lr_rows(int n, int l, const TableOptions& opts) {
    if (l < 1 || l > n) throw std::invalid_argument("max_lr_rows: need 1 <= l <= n");
    int cap = opts.stretch ? kCnkStretchCap : kCnkTableCap;
    if (n > cap) throw resource_limit_error("max_lr_rows: n exceeds cap");
    auto lambdas = enumerate_partitions(n);
    MaxRecord rec;
    for (const auto& la : lambdas) {
        if (la.rows() != l) continue;
        for_each_subpartition(la, [&](const Partition& mu) {
            LRExpansion ex = lr_expand(la, mu);
            for (const auto& [nu, c] : ex.coeffs) rec.offer(c, {la, mu, nu});
        });
    }
    rec.finalize();
    // Upper bounds from the hive dimension count and the hook-content route.
    double log_c = (rec.attain_count == 0) ? 0.0 : log_int(rec.value);
    double bound1 = 0.5 * l * l * std::log(n + 1.0);
    if (!log_leq(log_c, bound1))
        throw verification_error("C_l(n) exceeds (n+1)^(l^2/2) at n=" + std::to_string(n));
    for (const auto& w : rec.witnesses) {
        double bound2 = 0.5 * l * l * std::log(static_cast<double>(w[0].part(1) + l));
        if (!log_leq(log_c, bound2))
            throw verification_error("C_l(n) exceeds (m+l)^(l^2/2) at lambda=" + w[0].str());
    }
    return rec;
}

std::pair<int, Rat> zeta_rho(int n, const TableOptions& opts) {
    const auto& row = cnk_row(n, opts);
    Int cn = 0;
    for (const auto& cell : row) cn = std::max(cn, cell.value);
    int zeta = 0;
    for (int k = 0; k <= n; ++k)
        if (row[k].value == cn) {
            zeta = k;
            break;
        }
    Rat rho(n - 2 * static_cast<long>(zeta), 2);
    rho.canonicalize();
    return {zeta, rho};
}

std::pair<int, bool> stabilization_index(int k, const TableOptions& opts) {
    if (k < 0 || k > 6) throw resource_limit_error("stabilization_index: k cap is 6");
    long long target_n = static_cast<long long>(k + 1) * k / 2;
    int scan_max = std::max<int>(kCnkTableCap, static_cast<int>(target_n));
    if (scan_max > kCnkTableCap && !opts.stretch)
        throw resource_limit_error("stabilization_index: k=" + std::to_string(k) +
                                   " scans past row 18; pass the stretch flag");
    Int dk = (k == 0) ? Int(1) : max_dim(k).value;
    int n0 = -1;
    for (int n = std::max(k, 0); n <= scan_max; ++n) {
        const auto& row = cnk_row(n, opts);
        if (row[k].value == dk) {
            if (n0 < 0) n0 = n;
        } else {
            n0 = -1;
        }
    }
    if (n0 < 0 || n0 > target_n)
        throw verification_error("stabilization: C(n,k) never settles at D(k) by binom(k+1,2)");
    return {n0, n0 == target_n};
}

Partition verify_stabilization_witness(int k, int n) {
    if (k < 1) throw std::invalid_argument("verify_stabilization_witness: k must be >= 1");
    long long base = static_cast<long long>(k + 1) * k / 2;
    if (n < base)
        throw std::invalid_argument("verify_stabilization_witness: n below binom(k+1,2)");
    int r = static_cast<int>(n - base);
    std::vector<int> lam, nu;
    for (int p = k; p >= 1; --p) lam.push_back(p);
    lam[0] += r;
    for (int p = k - 1; p >= 1; --p) nu.push_back(p);
    if (nu.empty()) {
        if (r > 0) nu.push_back(r);
    } else {
        nu[0] += r;
    }
    Partition lambda(lam), inner(nu);

    // lambda/inner is a disjoint union of k cells, so the expansion must be
    // the full regular representation of S_k: c = f^mu for every mu |- k.
    LRExpansion ex = lr_expand(lambda, inner);
    Partition best_mu;
    Int best_f = -1;
    for (const auto& mu : enumerate_partitions(k)) {
        Int f = dim_irrep(mu);
        auto it = ex.coeffs.find(mu);
        Int c = (it == ex.coeffs.end()) ? Int(0) : it->second;
        if (c != f)
            throw verification_error("stabilization witness: c != f^mu at mu=" + mu.str());
        if (f > best_f) {
            best_f = f;
            best_mu = mu;
        }
    }
    return best_mu;
}

ContainmentReport containment_scan(int n, const TableOptions& opts) {
    ContainmentReport rep;
    rep.n = n;
    const auto& row = cnk_row(n, opts);
    for (const auto& cell : row) rep.c_n = std::max(rep.c_n, cell.value);

    for (const auto& la : enumerate_partitions(n)) {
        for_each_subpartition(la, [&](const Partition& mu) {
            LRExpansion ex = lr_expand(la, mu);
            for (const auto& [nu, c] : ex.coeffs) {
                if (c != rep.c_n) continue;
                ++rep.maximizer_count;
                bool nested = mu.contains(nu) || nu.contains(mu);
                if (nested) rep.flag_exists = true;
                if (!nested) {
                    rep.all_nested = false;
                    if (rep.violations.size() < 8) rep.violations.push_back({la, mu, nu});
                }
            }
        });
    }
    if (!rep.flag_exists)
        throw verification_error("containment: no nested maximizer pair at n=" +
                                 std::to_string(n));
    return rep;
}

MonotonicityReport monotonicity_scan(int n_max, const TableOptions& opts) {
    MonotonicityReport rep;
    rep.n_max = n_max;
    auto fail = [&](const std::string& msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.failure = msg;
        }
    };
    Int prev_cn = 0;
    for (int n = 1; n <= n_max; ++n) {
        const auto& row = cnk_row(n, opts);
        Int cn = 0;
        for (const auto& cell : row) cn = std::max(cn, cell.value);
        if (n > 1 && prev_cn > cn) fail("C(n) decreases at n=" + std::to_string(n));
        prev_cn = cn;
        if (n < n_max) {
            const auto& next = cnk_row(n + 1, opts);
            for (int k = 0; k <= n; ++k)
                if (row[k].value > next[k].value)
                    fail("C(n,k) decreases at n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
        }
        for (int k = 1; k < n; ++k)
            if (row[k - 1].value > row[k].value && row[k].value < row[k + 1].value)
                rep.dips.emplace_back(n, k);
    }
    if (!rep.ok) throw verification_error(rep.failure);
    return rep;
}

std::pair<Partition, Int> find_large_lr_from_mu_nu(const Partition& mu, const Partition& nu) {
    int n = static_cast<int>(mu.size() + nu.size());
    int k = static_cast<int>(mu.size());
    auto lambdas = enumerate_partitions(n);
    Int best_score = -1, best_c = 0;
    Partition best;
    // Ascending order so ties keep the lexicographically smaller lambda.
    for (size_t r = lambdas.size(); r-- > 0;) {
        const Partition& la = lambdas[r];
        Int c = lr_coefficient(la, mu, nu);
        if (c == 0) continue;
        Int score = c * dim_irrep(la);
        if (score > best_score) {
            best_score = score;
            best_c = c;
            best = la;
        }
    }
    if (best_score < 0)
        throw verification_error("find_large_lr_from_mu_nu: empty expansion");

    double log_a = std::max(
        {0.0, 0.5 * log_factorial(k) - log_int(dim_irrep(mu)),
         0.5 * log_factorial(n - k) - log_int(dim_irrep(nu))});
    double log_p = log_int(partition_count(n));
    double need_f = 0.5 * log_factorial(n) - 2 * log_a - log_p;
    double need_c = 0.5 * log_int(binomial(n, k)) - 2 * log_a - log_p;
    if (!log_leq(need_f, log_int(dim_irrep(best))))
        throw verification_error("find_large_lr_from_mu_nu: dimension guarantee fails");
    if (!log_leq(need_c, log_int(best_c)))
        throw verification_error("find_large_lr_from_mu_nu: coefficient guarantee fails");
    return {best, best_c};
}

std::pair<std::pair<Partition, Partition>, Int> find_large_lr_from_lambda(
    const Partition& la, int k) {
    int n = static_cast<int>(la.size());
    if (k < 0 || k > n) throw std::invalid_argument("find_large_lr_from_lambda: bad k");
    Int best_score = -1, best_c = 0;
    std::pair<Partition, Partition> best;
    for_each_subpartition_of_size(la, k, [&](const Partition& mu) {
        LRExpansion ex = lr_expand(la, mu);
        Int fmu = dim_irrep(mu);
        for (const auto& [nu, c] : ex.coeffs) {
            Int score = c * fmu * dim_irrep(nu);
            std::pair<Partition, Partition> cand{mu, nu};
            if (score > best_score ||
                (score == best_score && (cand.first < best.first ||
                                         (cand.first == best.first &&
                                          cand.second < best.second)))) {
                best_score = score;
                best_c = c;
                best = cand;
            }
        }
    });
    if (best_score < 0)
        throw verification_error("find_large_lr_from_lambda: empty expansion");

    double log_a =
        std::max(0.0, 0.5 * log_factorial(n) - log_int(dim_irrep(la)));
    double log_pp = log_int(partition_count(k)) + log_int(partition_count(n - k));
    if (!log_leq(0.5 * log_factorial(k) - log_a - log_pp,
                 log_int(dim_irrep(best.first))))
        throw verification_error("find_large_lr_from_lambda: f^mu guarantee fails");
    if (!log_leq(0.5 * log_factorial(n - k) - log_a - log_pp,
                 log_int(dim_irrep(best.second))))
        throw verification_error("find_large_lr_from_lambda: f^nu guarantee fails");
    if (!log_leq(0.5 * log_int(binomial(n, k)) - log_a - log_pp, log_int(best_c)))
        throw verification_error("find_large_lr_from_lambda: coefficient guarantee fails");
    return {best, best_score};
}

MaxRecord max_skew_syt(int m, int n, const TableOptions& opts) {
    if (m < 0 || m > n) throw std::invalid_argument("max_skew_syt: need 0 <= m <= n");
    int cap = opts.stretch ? 30 : 25;
    if (n > cap) throw resource_limit_error("max_skew_syt: n exceeds cap");
    auto lambdas = enumerate_partitions(n);
    std::vector<MaxRecord> partial(lambdas.size());
    parallel_for(lambdas.size(), opts.threads ? opts.threads : 1, [&](size_t i) {
        for_each_subpartition_of_size(lambdas[i], m, [&](const Partition& mu) {
            partial[i].offer(skew_syt_count(SkewShape(lambdas[i], mu)), {lambdas[i], mu});
        });
    });
    MaxRecord rec;
    for (auto& p : partial) rec.merge(p);
    rec.finalize();

    if (m >= 1) {
        double log_f = log_int(rec.value);
        double lower = 0.5 * (log_factorial(n - 1) - log_factorial(m - 1)) -
                       0.5 * (log_int(partition_count(m)) + log_int(partition_count(n)));
        double upper = 0.5 * (log_factorial(n) - log_factorial(m)) +
                       0.5 * log_int(partition_count(m));
        if (!log_leq(lower, log_f) || !log_leq(log_f, upper))
            throw verification_error("F(m,n) sandwich fails at (m,n)=(" +
                                     std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return rec;
}

BoundReport lr_bounds_report(int n, int k, const TableOptions& opts) {
    if (k < 0 || k > n) throw std::invalid_argument("lr_bounds_report: need 0 <= k <= n");
    Int exact;
    int cap = opts.stretch ? kCnkStretchCap : kCnkTableCap;
    if (n <= cap)
        exact = cnk_row(n, opts)[k].value;
    else
        exact = cnk_single(n, k, opts.threads);

    double log_c = log_int(exact);
    double log_binom = log_int(binomial(n, k));
    double log_ppp = log_int(partition_count(k)) + log_int(partition_count(n - k)) +
                     log_int(partition_count(n));

    BoundReport rep;
    rep.subject = "C(" + std::to_string(n) + "," + std::to_string(k) + ")";
    rep.exact_value = exact;

    double lower = 0.5 * log_binom - 0.5 * log_ppp;
    rep.add({"binom^(1/2)/sqrt(p(k)p(n-k)p(n)) <= C(n,k)", lower, log_c,
             std::numeric_limits<double>::infinity(), log_leq(lower, log_c), false});
    rep.add({"C(n,k) <= binom^(1/2)", -std::numeric_limits<double>::infinity(), log_c,
             0.5 * log_binom, exact * exact <= binomial(n, k), true});
    if (k <= 16) {
        Int dk = (k == 0) ? Int(1) : max_dim(k).value;
        rep.add({"C(n,k) <= D(k)", -std::numeric_limits<double>::infinity(), log_c,
                 log_int(dk), exact <= dk, true});
        rep.add({"D(k) <= sqrt(k!)", -std::numeric_limits<double>::infinity(), log_int(dk),
                 0.5 * log_factorial(k), log_leq(log_int(dk), 0.5 * log_factorial(k)),
                 false});
    }
    return rep;
}

std::string cnk_table_csv(const CnkTable& table) {
    auto field = [](const std::string& s) {
        return (s.find(',') == std::string::npos) ? s : "\"" + s + "\"";
    };
    std::string out = "n,k,C,lambda,mu,nu\n";
    for (int n = 0; n <= table.n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const MaxRecord& rec = table.at(n, k);
            out += std::to_string(n) + "," + std::to_string(k) + "," +
                   rec.value.get_str();
            if (!rec.witnesses.empty()) {
                const Witness& w = rec.witnesses.front();
                out += "," + field(w[0].str()) + "," + field(w[1].str()) + "," +
                       field(w[2].str());
            } else {
                out += ",,,";
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace symco
