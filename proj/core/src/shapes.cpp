#include "symco/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace symco {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;

}  // namespace

Constants constants() {
    Constants c;
    c.c1 = kPi / std::sqrt(6.0);
    c.c2 = (kPi - 2.0) / (kPi * kPi);
    c.d = kPi * (1.0 + kSqrt2) / std::sqrt(6.0);
    double k = 1.0;
    for (int i = 1; i < 64; ++i) k /= 1.0 - std::pow(2.0, -i);
    c.K = k;
    return c;
}

double vkls_phi(double x) {
    if (x < -kSqrt2 - 1e-12 || x > kSqrt2 + 1e-12)
        throw std::invalid_argument("vkls_phi: x outside [-sqrt(2), sqrt(2)]");
    x = std::clamp(x, -kSqrt2, kSqrt2);
    double s = std::clamp(x / kSqrt2, -1.0, 1.0);
    return (2.0 / kPi) * (x * std::asin(s) + std::sqrt(std::max(0.0, 2.0 - x * x)));
}

double vkls_psi(double u) {
    if (u < -1e-12 || u > 2.0 + 1e-12)
        throw std::invalid_argument("vkls_psi: u outside [0, 2]");
    u = std::clamp(u, 0.0, 2.0);
    // u(x) = (phi(x) + x)/sqrt(2) increases from 0 to 2 on [-sqrt(2), sqrt(2)].
    double lo = -kSqrt2, hi = kSqrt2;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((vkls_phi(mid) + mid) / kSqrt2 < u)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15) break;
    }
    double x = 0.5 * (lo + hi);
    return (vkls_phi(x) - x) / kSqrt2;
}

Partition vkls_partition(long long n) {
    if (n < 1) throw std::invalid_argument("vkls_partition: n must be >= 1");
    double s = std::sqrt(static_cast<double>(n));
    std::vector<int> rows;
    // Midpoint sampling of the profile, rounded to integers.
    for (long long i = 1;; ++i) {
        double u = (static_cast<double>(i) - 0.5) / s;
        if (u >= 2.0) break;
        long long len = std::llround(s * vkls_psi(u));
        if (len <= 0) break;
        rows.push_back(static_cast<int>(len));
    }
    if (rows.empty()) rows.push_back(1);
    for (size_t i = 1; i < rows.size(); ++i) rows[i] = std::min(rows[i], rows[i - 1]);

    long long total = 0;
    for (int r : rows) total += r;

    auto target = [&](size_t i) { return s * vkls_psi((static_cast<double>(i) + 0.5) / s); };

    while (total != n) {
        if (total < n) {
            // Add a cell where the profile is furthest below target; appending
            // a new unit row competes as position rows.size().
            size_t best = rows.size();
            double best_gap = target(rows.size()) - 0.0;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i > 0 && rows[i] >= rows[i - 1]) continue;
                double gap = target(i) - rows[i];
                if (gap > best_gap + 1e-12) {
                    best_gap = gap;
                    best = i;
                }
            }
            if (best == rows.size())
                rows.push_back(1);
            else
                rows[best]++;
            ++total;
        } else {
            size_t best = rows.size();
            double best_gap = -1e300;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i + 1 < rows.size() && rows[i] <= rows[i + 1]) continue;
                double gap = rows[i] - target(i);
                if (gap > best_gap + 1e-12) {
                    best_gap = gap;
                    best = i;
                }
            }
            if (best == rows.size()) best = rows.size() - 1;
            rows[best]--;
            if (rows[best] == 0) rows.pop_back();
            --total;
        }
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(rows);
}

double vkls_distance(const Partition& la) {
    if (la.size() == 0) return vkls_phi(0.0);
    double s = std::sqrt(static_cast<double>(la.size()));
    // Outer corners (la_i, i) in (column, row) coordinates give the rotated
    // profile as an upper envelope of unit-slope tents over |x|.
    std::vector<std::pair<double, double>> corners;
    for (int i = 1; i <= la.rows(); ++i) {
        double a = la.part(i) / s, b = static_cast<double>(i) / s;
        corners.emplace_back((a - b) / kSqrt2, (a + b) / kSqrt2);
    }
    auto profile = [&](double x) {
        double v = std::fabs(x);
        for (auto [cx, cy] : corners) v = std::max(v, cy - std::fabs(x - cx));
        return v;
    };
    auto curve = [&](double x) {
        if (x <= -kSqrt2 || x >= kSqrt2) return std::fabs(x);
        return vkls_phi(x);
    };
    double span = 0.0;
    for (auto [cx, cy] : corners) span = std::max({span, std::fabs(cx), cy});
    span = std::max(span, kSqrt2) + 0.5;
    const int grid = 4001;
    double worst = 0.0;
    for (int g = 0; g < grid; ++g) {
        double x = -span + 2 * span * g / (grid - 1);
        worst = std::max(worst, std::fabs(profile(x) - curve(x)));
    }
    return worst;
}

double hook_integral_partition(const Partition& la) {
    if (la.size() < 1) throw std::invalid_argument("hook_integral_partition: empty shape");
    Partition conj = la.conjugate();
    double n = static_cast<double>(la.size());
    double half_log_n = 0.5 * std::log(n);
    double acc = 0.0;
    for (int i = 1; i <= la.rows(); ++i)
        for (int j = 1; j <= la.part(i); ++j) {
            int h = la.part(i) + conj.part(j) - i - j + 1;
            acc += std::log(static_cast<double>(h)) - half_log_n;
        }
    return -acc / n;
}

CurveFn vkls_curve() {
    return CurveFn{0.0, 2.0, [](double u) { return vkls_psi(u); }};
}

CurveFn zero_curve(double hi) {
    return CurveFn{0.0, hi, [](double) { return 0.0; }};
}

double hook_integral_curve(const CurveFn& omega, const CurveFn& inner, int grid) {
    if (grid < 8) throw std::invalid_argument("hook_integral_curve: grid too small");
    double xmax = omega.hi;
    // Sampled monotone tables make both the profile and its inverse cheap.
    int samples = std::max(4 * grid, 4096);
    std::vector<double> w(samples + 1), p(samples + 1);
    for (int i = 0; i <= samples; ++i) {
        double x = xmax * i / samples;
        w[i] = omega.eval(std::min(x, omega.hi));
        p[i] = (x <= inner.hi) ? inner.eval(x) : 0.0;
    }
    double ymax = w[0];
    auto eval_at = [&](const std::vector<double>& tab, double x) {
        double t = std::clamp(x / xmax, 0.0, 1.0) * samples;
        int i = std::min(static_cast<int>(t), samples - 1);
        double frac = t - i;
        return tab[i] * (1 - frac) + tab[i + 1] * frac;
    };
    // sup{x : omega(x) >= y} for the arm of the continuum hook.
    auto inv = [&](double y) {
        int lo = 0, hi = samples;  // w is non-increasing
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            if (w[mid] >= y)
                lo = mid;
            else
                hi = mid - 1;
        }
        double x0 = xmax * lo / samples;
        if (lo == samples) return x0;
        double y0 = w[lo], y1 = w[lo + 1];
        if (y0 <= y1 + 1e-300) return x0;
        double frac = std::clamp((y0 - y) / (y0 - y1), 0.0, 1.0);
        return x0 + frac * xmax / samples;
    };

    double area = 0.0;
    for (int i = 0; i < samples; ++i)
        area += (w[i] - p[i] + w[i + 1] - p[i + 1]) * 0.5 * (xmax / samples);
    if (std::fabs(area - 1.0) > 1e-3)
        throw std::invalid_argument("hook_integral_curve: area between curves is not 1");

    double dx = xmax / grid, dy = ymax / grid;
    double acc = 0.0;
    for (int gx = 0; gx < grid; ++gx) {
        double x = (gx + 0.5) * dx;
        double top = eval_at(w, x), bot = eval_at(p, x);
        for (int gy = 0; gy < grid; ++gy) {
            double y = (gy + 0.5) * dy;
            if (y <= bot || y >= top) continue;
            double hook = (inv(y) - x) + (eval_at(w, x) - y);
            if (hook <= 0) continue;
            acc += std::log(hook);
        }
    }
    return -acc * dx * dy;
}

}  // namespace symco
