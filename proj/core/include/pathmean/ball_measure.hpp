#pragma once

#include <Eigen/Dense>

#include <map>
#include <optional>

#include "pathmean/path_space.hpp"
#include "pathmean/rng.hpp"

namespace pathmean {

/// Radius sequence R_N. The lemmas need R_N = omega(N^{1/2}) and
/// o(N / log N); within power laws that is the window alpha in (1/2, 1).
class RadiusSchedule {
public:
    static RadiusSchedule power_law(double c, double alpha);
    static RadiusSchedule table(std::map<int, double> values);

    double radius(int N) const;
    bool is_power_law() const { return kind_ == Kind::PowerLaw; }
    double alpha() const { return alpha_; }
    double c() const { return c_; }

    /// True when a power-law exponent lies in the valid window (1/2, 1).
    bool in_valid_window() const;

private:
    enum class Kind { PowerLaw, Table };
    Kind kind_ = Kind::PowerLaw;
    double c_ = 1.0;
    double alpha_ = 0.75;
    std::map<int, double> table_;
};

enum class BallLaw { UniformBall, Gaussian };

/// The ball R_N B_N carrying nu_N. R is the L^2-norm radius: samples f
/// satisfy ||f||_2 <= R (uniform law). The Gaussian variant has standard
/// deviation R per L^2 coordinate.
struct BallSpec {
    ContextPtr ctx;
    int N = 1;
    double R = 1.0;
    BallLaw law = BallLaw::UniformBall;

    int dim() const { return N * ctx->algebra_dim(); }

    static BallSpec make(ContextPtr ctx, int N, const RadiusSchedule& sched,
                         BallLaw law = BallLaw::UniformBall);
};

/// Uniform point in the unit ball of R^n (Gaussian direction, radius U^{1/n}).
void sample_unit_ball(int n, Rng& rng, Eigen::VectorXd& out);

/// One nu_N sample as a StepPath with N blocks.
StepPath sample_nu(const BallSpec& spec, Rng& rng);

/// Same, writing block coordinates into a preallocated vector of size N*d.
void sample_nu_into(const BallSpec& spec, Rng& rng, Eigen::VectorXd& coords);

/// lambda^n((B_n + s e_1) \ B_n) / lambda^n(B_n) for unit balls at center
/// distance s >= 0; evaluated through the regularized incomplete beta
/// function (two spherical caps). s >= 2 gives 1.
double shifted_ball_overlap_exact(int n, double s);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
};

/// Monte Carlo cross-check: fraction of M uniform B_n samples x with
/// ||x - s e_1|| > 1, with binomial standard error.
McEstimate shifted_ball_overlap_mc(int n, double s, int M, Rng& rng);

/// P(|<x, e_1>| > eps) for x uniform in B_n, via the incomplete-beta marginal.
double levy_tail_exact(int n, double eps);

McEstimate levy_tail_mc(int n, double eps, int M, Rng& rng);

/// Empirical nu_N-measure of A_N = { f : max_i ||f_i|| <= threshold } over
/// M samples. The default threshold is R log N, the concentration scale of
/// the block maxima (zero at N = 1 since log 1 = 0).
double block_max_stat(const BallSpec& spec, int M, Rng& rng,
                      std::optional<double> threshold = std::nullopt);

/// Gaussian-direction step path scaled to an exact L^2 norm; the stock
/// generator for probes and translates in experiments.
StepPath random_step_path(ContextPtr ctx, int N, double l2_norm, Rng& rng);

} // namespace pathmean
