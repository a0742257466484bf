#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

// Independent one-way ANOVA oracle: textbook sums for F plus an adaptive
// Simpson quadrature of the beta density over the exact tail interval for
// the p-value. Kept deliberately naive so it shares no code path with the
// library.
namespace test_support {

struct OracleAnova {
    double f;
    double p;
    long df_between;
    long df_within;
};

template <typename Fn>
double adaptive_simpson(const Fn& fn, double a, double b, double whole, double eps,
                        int depth) {
    const double m = (a + b) / 2.0;
    const double left = (m - a) / 6.0 * (fn(a) + 4.0 * fn((a + m) / 2.0) + fn(m));
    const double right = (b - m) / 6.0 * (fn(m) + 4.0 * fn((m + b) / 2.0) + fn(b));
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(fn, a, m, left, eps / 2.0, depth - 1) +
           adaptive_simpson(fn, m, b, right, eps / 2.0, depth - 1);
}

// P(F > f0) equals the mass of Beta(d2/2, d1/2) below u0 = d2/(d2 + d1*f0),
// a finite interval, so no truncation of the infinite F tail is needed. A
// pilot sweep at absolute tolerance seeds a second sweep at relative
// tolerance so small p-values keep their digits.
inline double f_tail_mass(double f0, double d1, double d2) {
    if (f0 <= 0.0) return 1.0;
    if (std::isinf(f0)) return 0.0;
    if (d2 < 2.0) throw std::invalid_argument("oracle requires df_within >= 2");
    const double a = d2 / 2.0;
    const double b = d1 / 2.0;
    const double u0 = d2 / (d2 + d1 * f0);
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    const auto g = [a, b, log_beta](double u) {
        if (u <= 0.0) return a == 1.0 ? std::exp(-log_beta) : 0.0;
        return std::exp((a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u) - log_beta);
    };
    const int panels = 64;
    const auto sweep = [&](double eps_total) {
        double total = 0.0;
        for (int i = 0; i < panels; ++i) {
            const double lo = u0 * i / panels;
            const double hi = u0 * (i + 1) / panels;
            const double whole =
                (hi - lo) / 6.0 * (g(lo) + 4.0 * g((lo + hi) / 2.0) + g(hi));
            total += adaptive_simpson(g, lo, hi, whole, eps_total / panels, 48);
        }
        return total;
    };
    const double pilot = sweep(1e-14);
    return sweep(std::max(pilot, 1e-30) * 1e-13);
}

inline OracleAnova oracle_anova(const std::vector<std::vector<double>>& groups) {
    const std::size_t k = groups.size();
    if (k < 2) throw std::invalid_argument("need >= 2 groups");
    std::size_t n_total = 0;
    double grand_sum = 0.0;
    for (const auto& grp : groups) {
        if (grp.empty()) throw std::invalid_argument("empty group");
        n_total += grp.size();
        for (double v : grp) grand_sum += v;
    }
    const double grand_mean = grand_sum / static_cast<double>(n_total);

    double ssb = 0.0;
    double ssw = 0.0;
    for (const auto& grp : groups) {
        double mean = 0.0;
        for (double v : grp) mean += v;
        mean /= static_cast<double>(grp.size());
        ssb += static_cast<double>(grp.size()) * (mean - grand_mean) * (mean - grand_mean);
        for (double v : grp) ssw += (v - mean) * (v - mean);
    }
    OracleAnova out;
    out.df_between = static_cast<long>(k) - 1;
    out.df_within = static_cast<long>(n_total) - static_cast<long>(k);
    if (ssw == 0.0) {
        out.f = ssb == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        out.p = ssb == 0.0 ? 1.0 : 0.0;
        return out;
    }
    const double msb = ssb / static_cast<double>(out.df_between);
    const double msw = ssw / static_cast<double>(out.df_within);
    out.f = msb / msw;
    out.p = f_tail_mass(out.f, static_cast<double>(out.df_between),
                        static_cast<double>(out.df_within));
    return out;
}

} // namespace test_support
