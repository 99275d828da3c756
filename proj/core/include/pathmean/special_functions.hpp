#pragma once

namespace pathmean {

/// log Beta(a, b)
double lbeta(double a, double b);

/// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
/// Continued-fraction evaluation, relative error <= 1e-12.
double betainc_reg(double a, double b, double x);

/// CDF of one coordinate of a uniform sample from the unit ball in R^n:
/// P(x_1 <= t), density proportional to (1 - t^2)^((n-1)/2) on [-1, 1].
double ball_marginal_cdf(int n, double t);

} // namespace pathmean
