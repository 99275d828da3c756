#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pathmean {

/// Pairwise (cascade) sum; deterministic for a fixed element order.
double pairwise_sum(std::span<const double> xs);

struct MeanStats {
    double mean = 0.0;
    double std_error = 0.0; ///< sample sd / sqrt(M); 0 when all values equal
};

/// Mean and standard error of xs via deterministic pairwise reduction.
MeanStats mean_and_std_error(std::span<const double> xs);

/// Kolmogorov-Smirnov statistic of a sample against an analytic CDF.
/// The sample is copied and sorted internally.
double ks_statistic(std::span<const double> sample,
                    const std::function<double(double)>& cdf);

/// Two-sample KS statistic.
double ks_statistic_two_sample(std::span<const double> a, std::span<const double> b);

/// One-sample KS critical value at significance alpha (asymptotic c(alpha)/sqrt(M)).
double ks_critical(std::size_t n, double alpha);

/// Two-sample KS critical value: c(alpha) * sqrt((m+n)/(m*n)).
double ks_critical_two_sample(std::size_t m, std::size_t n, double alpha);

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_std_error = 0.0;
};

/// Ordinary least squares y = a + b x. Requires xs.size() == ys.size() >= 3.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

} // namespace pathmean
