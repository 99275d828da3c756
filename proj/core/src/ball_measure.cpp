#include "pathmean/ball_measure.hpp"

#include <cmath>

#include "pathmean/errors.hpp"
#include "pathmean/special_functions.hpp"

namespace pathmean {

RadiusSchedule RadiusSchedule::power_law(double c, double alpha) {
    if (!(c > 0.0)) throw ArgumentError("RadiusSchedule: c must be positive");
    RadiusSchedule s;
    s.kind_ = Kind::PowerLaw;
    s.c_ = c;
    s.alpha_ = alpha;
    return s;
}

RadiusSchedule RadiusSchedule::table(std::map<int, double> values) {
    if (values.empty()) throw ArgumentError("RadiusSchedule: empty table");
    for (const auto& [n, r] : values) {
        if (!(r > 0.0)) throw ArgumentError("RadiusSchedule: radii must be positive");
    }
    RadiusSchedule s;
    s.kind_ = Kind::Table;
    s.table_ = std::move(values);
    return s;
}

double RadiusSchedule::radius(int N) const {
    if (N < 1) throw ArgumentError("RadiusSchedule: N must be >= 1");
    if (kind_ == Kind::PowerLaw) {
        return c_ * std::pow(static_cast<double>(N), alpha_);
    }
    auto it = table_.find(N);
    if (it == table_.end()) throw ArgumentError("RadiusSchedule: N not in table");
    return it->second;
}

bool RadiusSchedule::in_valid_window() const {
    return kind_ == Kind::PowerLaw && alpha_ > 0.5 && alpha_ < 1.0;
}

BallSpec BallSpec::make(ContextPtr ctx, int N, const RadiusSchedule& sched, BallLaw law) {
    BallSpec spec;
    spec.ctx = std::move(ctx);
    spec.N = N;
    spec.R = sched.radius(N);
    spec.law = law;
    return spec;
}

void sample_unit_ball(int n, Rng& rng, Eigen::VectorXd& out) {
    out.resize(n);
    double n2;
    do {
        for (int i = 0; i < n; ++i) out[i] = rng.next_gaussian();
        n2 = out.squaredNorm();
    } while (n2 == 0.0);
    const double u = rng.next_double();
    const double radius = std::pow(u, 1.0 / static_cast<double>(n));
    out *= radius / std::sqrt(n2);
}

void sample_nu_into(const BallSpec& spec, Rng& rng, Eigen::VectorXd& coords) {
    const int n = spec.dim();
    // Block values carry a sqrt(N) factor relative to the L^2-orthonormal
    // coordinates of V_N, so that l2_norm(sample) <= R for the uniform law.
    const double scale = std::sqrt(static_cast<double>(spec.N)) * spec.R;
    if (spec.law == BallLaw::UniformBall) {
        sample_unit_ball(n, rng, coords);
        coords *= scale;
        return;
    }
    coords.resize(n);
    for (int i = 0; i < n; ++i) coords[i] = scale * rng.next_gaussian();
}

StepPath sample_nu(const BallSpec& spec, Rng& rng) {
    Eigen::VectorXd coords;
    sample_nu_into(spec, rng, coords);
    return StepPath(spec.ctx, std::move(coords));
}

double shifted_ball_overlap_exact(int n, double s) {
    if (n < 1) throw ArgumentError("shifted_ball_overlap_exact: n must be >= 1");
    if (s < 0.0) throw ArgumentError("shifted_ball_overlap_exact: s must be >= 0");
    if (s == 0.0) return 0.0;
    if (s >= 2.0) return 1.0;
    // Intersection = two caps of height 1 - s/2; each cap has normalized
    // volume (1/2) I_x((n+1)/2, 1/2) with x = 1 - s^2/4.
    const double x = 1.0 - 0.25 * s * s;
    return 1.0 - betainc_reg(0.5 * (n + 1), 0.5, x);
}

McEstimate shifted_ball_overlap_mc(int n, double s, int M, Rng& rng) {
    if (M < 100) throw ArgumentError("shifted_ball_overlap_mc: M must be >= 100");
    Eigen::VectorXd x;
    long hits = 0;
    for (int i = 0; i < M; ++i) {
        sample_unit_ball(n, rng, x);
        x[0] -= s;
        if (x.squaredNorm() > 1.0) ++hits;
    }
    McEstimate est;
    est.estimate = static_cast<double>(hits) / M;
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / M);
    return est;
}

double levy_tail_exact(int n, double eps) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw ArgumentError("levy_tail_exact: eps in [0, 1]");
    if (eps == 0.0) return 1.0;
    if (eps == 1.0) return 0.0;
    return 1.0 - betainc_reg(0.5, 0.5 * (n + 1), eps * eps);
}

McEstimate levy_tail_mc(int n, double eps, int M, Rng& rng) {
    if (M < 100) throw ArgumentError("levy_tail_mc: M must be >= 100");
    Eigen::VectorXd x;
    long hits = 0;
    for (int i = 0; i < M; ++i) {
        sample_unit_ball(n, rng, x);
        if (std::abs(x[0]) > eps) ++hits;
    }
    McEstimate est;
    est.estimate = static_cast<double>(hits) / M;
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / M);
    return est;
}

StepPath random_step_path(ContextPtr ctx, int N, double l2_norm, Rng& rng) {
    const int d = ctx->algebra_dim();
    Eigen::VectorXd data(static_cast<Eigen::Index>(N) * d);
    double n2;
    do {
        for (Eigen::Index i = 0; i < data.size(); ++i) data[i] = rng.next_gaussian();
        n2 = data.squaredNorm();
    } while (n2 == 0.0);
    data *= l2_norm * std::sqrt(static_cast<double>(N) / n2);
    return StepPath(std::move(ctx), std::move(data));
}

double block_max_stat(const BallSpec& spec, int M, Rng& rng,
                      std::optional<double> threshold) {
    if (spec.law != BallLaw::UniformBall) {
        throw ArgumentError("block_max_stat: defined for the uniform law");
    }
    const double thr = threshold.value_or(spec.R * std::log(static_cast<double>(spec.N)));
    const double thr2 = thr * thr;
    const int d = spec.ctx->algebra_dim();
    Eigen::VectorXd coords;
    long inside = 0;
    for (int s = 0; s < M; ++s) {
        sample_nu_into(spec, rng, coords);
        bool ok = true;
        for (int i = 0; i < spec.N && ok; ++i) {
            ok = coords.segment(i * d, d).squaredNorm() <= thr2;
        }
        if (ok) ++inside;
    }
    return static_cast<double>(inside) / M;
}

} // namespace pathmean
