#include "pathmean/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pathmean {

namespace {

double pairwise_sum_impl(const double* xs, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += xs[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}

// c(alpha) of the Kolmogorov distribution: sqrt(-ln(alpha/2)/2).
double ks_c(double alpha) { return std::sqrt(-0.5 * std::log(alpha / 2.0)); }

} // namespace

double pairwise_sum(std::span<const double> xs) {
    return pairwise_sum_impl(xs.data(), xs.size());
}

MeanStats mean_and_std_error(std::span<const double> xs) {
    MeanStats out;
    const std::size_t n = xs.size();
    if (n == 0) return out;
    out.mean = pairwise_sum(xs) / static_cast<double>(n);
    if (n < 2) return out;
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = xs[i] - out.mean;
        sq[i] = d * d;
    }
    const double ssq = pairwise_sum(sq);
    out.std_error = std::sqrt(ssq / (static_cast<double>(n) * static_cast<double>(n - 1)));
    return out;
}

double ks_statistic(std::span<const double> sample,
                    const std::function<double(double)>& cdf) {
    std::vector<double> xs(sample.begin(), sample.end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

double ks_statistic_two_sample(std::span<const double> a, std::span<const double> b) {
    std::vector<double> xs(a.begin(), a.end());
    std::vector<double> ys(b.begin(), b.end());
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    const double inv_m = 1.0 / static_cast<double>(xs.size());
    const double inv_n = 1.0 / static_cast<double>(ys.size());
    std::size_t i = 0, j = 0;
    double fa = 0.0, fb = 0.0, d = 0.0;
    while (i < xs.size() && j < ys.size()) {
        if (xs[i] <= ys[j]) {
            fa = static_cast<double>(++i) * inv_m;
        } else {
            fb = static_cast<double>(++j) * inv_n;
        }
        d = std::max(d, std::abs(fa - fb));
    }
    return d;
}

double ks_critical(std::size_t n, double alpha) {
    return ks_c(alpha) / std::sqrt(static_cast<double>(n));
}

double ks_critical_two_sample(std::size_t m, std::size_t n, double alpha) {
    const double mm = static_cast<double>(m);
    const double nn = static_cast<double>(n);
    return ks_c(alpha) * std::sqrt((mm + nn) / (mm * nn));
}

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n != ys.size() || n < 3) {
        throw std::invalid_argument("fit_line: need >= 3 (x, y) pairs");
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - fit.intercept - fit.slope * xs[i];
        rss += r * r;
    }
    fit.slope_std_error = std::sqrt(rss / (static_cast<double>(n - 2) * sxx));
    return fit;
}

} // namespace pathmean
