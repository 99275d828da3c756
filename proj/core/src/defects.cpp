#include "pathmean/defects.hpp"

#include <chrono>
#include <numeric>
#include <vector>

#include "pathmean/detail/parallel.hpp"
#include "pathmean/errors.hpp"
#include "pathmean/stats.hpp"

namespace pathmean {

namespace {

using Clock = std::chrono::steady_clock;
using detail::fill_samples;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

DefectReport finish_report(std::string experiment, const BallSpec& spec,
                           const RadiusSchedule& sched, const EstimatorOptions& opts,
                           const std::vector<double>& diffs, Clock::time_point t0) {
    DefectReport rep;
    rep.experiment = std::move(experiment);
    rep.group = spec.ctx->family_name() + std::to_string(spec.ctx->family_n());
    rep.N = spec.N;
    rep.R = spec.R;
    rep.alpha = sched.is_power_law() ? sched.alpha() : 0.0;
    rep.M = opts.M;
    rep.seed = opts.seed;
    const MeanStats ms = mean_and_std_error(diffs);
    rep.estimate = ms.mean;
    rep.std_error = ms.std_error;
    rep.schedule_warning = sched.is_power_law() && !sched.in_valid_window();
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

/// Shared kernel for defects of the form F(a + <f, p>) - F(<f, q>):
/// every per-sample transform used by translation / rotation / star is an
/// affine functional of the sample in probe coordinates.
DefectReport linear_pullback_defect(std::string experiment, const BallSpec& spec,
                                    const RadiusSchedule& sched, const TestFunctional& F,
                                    const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                                    double a, const EstimatorOptions& opts) {
    const auto t0 = Clock::now();
    std::vector<double> diffs;
    fill_samples(
        opts.M, opts.seed, /*stream_a=*/0, opts.threads,
        [&](int, Rng& rng) {
            thread_local Eigen::VectorXd local;
            sample_nu_into(spec, rng, local);
            return F.eval_inner(a + p.dot(local)) - F.eval_inner(q.dot(local));
        },
        diffs);
    return finish_report(std::move(experiment), spec, sched, opts, diffs, t0);
}

/// Probe pulled back to V_N with the 1/N quadrature weight folded in:
/// <f, h> = q . f.data() for f in V_N.
Eigen::VectorXd probe_weights(const TestFunctional& F, int N, const LieContext& ctx) {
    const StepPath& h = F.probe();
    if (!(h.ctx() == ctx)) throw ContextMismatch("defect: probe context differs");
    const int L = std::lcm(N, h.blocks());
    const StepPath hN = project_to_grid(h.refined(L / h.blocks()), N);
    return hN.data() / static_cast<double>(N);
}

} // namespace

DefectReport translation_defect(const StepPath& g, const TestFunctional& F, int N,
                                const RadiusSchedule& sched, const EstimatorOptions& opts) {
    if (N % g.blocks() != 0) {
        throw ArgumentError("translation_defect: g does not refine into V_N");
    }
    const BallSpec spec = BallSpec::make(g.ctx_ptr(), N, sched);
    const Eigen::VectorXd q = probe_weights(F, N, g.ctx());
    const StepPath gN = g.refined(N / g.blocks());
    const double a = gN.data().dot(q); // <g, h>
    return linear_pullback_defect("translation", spec, sched, F, q, q, a, opts);
}

DefectReport rotation_defect(const GroupPath& r, const TestFunctional& F, int N,
                             const RadiusSchedule& sched, const EstimatorOptions& opts) {
    const int K = r.grid();
    if (K % N != 0) {
        throw ArgumentError("rotation_defect: r grid must be a multiple of N");
    }
    const LieContext& ctx = r.ctx();
    const int d = ctx.algebra_dim();
    const BallSpec spec = BallSpec::make(r.ctx_ptr(), N, sched);
    const Eigen::VectorXd q = probe_weights(F, N, ctx);

    // <Ad_r f, h> is again linear in the N-block sample: pull the adjoint
    // of each fine-grid conjugation back through the refined probe.
    const StepPath& h = F.probe();
    const int L = std::lcm(K, h.blocks());
    const StepPath hK = project_to_grid(h.refined(L / h.blocks()), K);
    Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N) * d);
    const int per_block = K / N;
    for (int j = 0; j < K; ++j) {
        const Eigen::MatrixXd A = ad_operator(ctx, r.node(j));
        const int i = j / per_block;
        p.segment(i * d, d) += A.transpose() * hK.block(j);
    }
    p /= static_cast<double>(K);
    return linear_pullback_defect("rotation", spec, sched, F, q, p, 0.0, opts);
}

DefectReport star_defect(const StepPath& g, const TestFunctional& F, int N,
                         const RadiusSchedule& sched, const EstimatorOptions& opts) {
    if (N % g.blocks() != 0) {
        throw ArgumentError("star_defect: g does not refine into V_N");
    }
    const LieContext& ctx = g.ctx();
    const int d = ctx.algebra_dim();
    const BallSpec spec = BallSpec::make(g.ctx_ptr(), N, sched);
    const Eigen::VectorXd q = probe_weights(F, N, ctx);
    const StepPath gN = g.refined(N / g.blocks());
    const double a = gN.data().dot(q);

    const std::vector<Eigen::MatrixXd> frames = midpoint_frames(gN);
    Eigen::VectorXd p(static_cast<Eigen::Index>(N) * d);
    for (int i = 0; i < N; ++i) {
        const Eigen::MatrixXd A = ad_operator(ctx, frames[static_cast<std::size_t>(i)]);
        p.segment(i * d, d) = A.transpose() * q.segment(i * d, d);
    }
    return linear_pullback_defect("star", spec, sched, F, q, p, a, opts);
}

GroupFunctional GroupFunctional::trace_cosine(Eigen::MatrixXd C) {
    return GroupFunctional(std::move(C));
}

GroupFunctional GroupFunctional::default_for(const LieContext& ctx) {
    const int m = ctx.matrix_size();
    Eigen::VectorXd diag(m);
    for (int i = 0; i < m; ++i) diag[i] = static_cast<double>(i + 1) / m;
    return GroupFunctional(Eigen::MatrixXd(diag.asDiagonal()));
}

DefectReport semidirect_defect(const GroupElement& k, const StepPath& g,
                               const GroupFunctional& F_K, const TestFunctional& F, int N,
                               const RadiusSchedule& sched, const EstimatorOptions& opts) {
    if (N % g.blocks() != 0) {
        throw ArgumentError("semidirect_defect: g does not refine into V_N");
    }
    const auto t0 = Clock::now();
    const LieContext& ctx = g.ctx();
    const int d = ctx.algebra_dim();
    const BallSpec spec = BallSpec::make(g.ctx_ptr(), N, sched);
    const Eigen::VectorXd q = probe_weights(F, N, ctx);
    const StepPath gN = g.refined(N / g.blocks());

    // Frames of Pexp g at block midpoints; conjugating g by x^{-1} conjugates
    // its product integral, so per sample only constant conjugations remain.
    const std::vector<Eigen::MatrixXd> frames = midpoint_frames(gN);
    std::vector<Eigen::MatrixXd> h_mats(static_cast<std::size_t>(N));
    std::vector<Eigen::MatrixXd> g_mats(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) {
        h_mats[static_cast<std::size_t>(i)] = ctx.to_matrix(q.segment(i * d, d));
        g_mats[static_cast<std::size_t>(i)] = ctx.to_matrix(gN.block(i));
    }

    std::vector<double> diffs;
    fill_samples(
        opts.M, opts.seed, /*stream_a=*/0, opts.threads,
        [&](int, Rng& rng) {
            const GroupElement x = haar_sample(ctx, rng);
            thread_local Eigen::VectorXd f;
            sample_nu_into(spec, rng, f);

            const double ip0 = q.dot(f); // <f, h>
            // ipT = <(Ad_{x^{-1}} g) * f, h>; the 1/N quadrature weight is
            // already folded into the h_mats.
            double ipT = 0.0;
            for (int i = 0; i < N; ++i) {
                const std::size_t ui = static_cast<std::size_t>(i);
                const Eigen::MatrixXd t = x.matrix * h_mats[ui] * x.matrix.transpose();
                // translation part: <Ad_{x^{-1}} g_i, h_i> = <g_i, Ad_x h_i>
                ipT += (g_mats[ui].array() * t.array()).sum();
                // rotation part: the * law conjugates f_i by x^{-1} P_i x
                const Eigen::MatrixXd back = x.matrix.transpose() *
                                             (frames[ui].transpose() * t * frames[ui]) *
                                             x.matrix;
                ipT += ctx.to_coords(back).dot(f.segment(i * d, d));
            }
            const double fk_kx = F_K(k.matrix * x.matrix);
            const double fk_x = F_K(x.matrix);
            return fk_kx * F.eval_inner(ipT) - fk_x * F.eval_inner(ip0);
        },
        diffs);
    return finish_report("semidirect", spec, sched, opts, diffs, t0);
}

} // namespace pathmean
