#include "pathmean/brownian.hpp"

#include <chrono>
#include <cmath>

#include "pathmean/detail/parallel.hpp"
#include "pathmean/errors.hpp"
#include "pathmean/stats.hpp"

namespace pathmean {

namespace {

constexpr int kRepairCheckStride = 256;

/// Walk the Brownian product, reporting each new node (k runs 1..K).
template <typename Visit>
void brownian_walk(const BrownianSpec& spec, Rng& rng, Visit&& visit) {
    const LieContext& ctx = *spec.ctx;
    const int d = ctx.algebra_dim();
    const double sigma = std::sqrt(spec.t / spec.steps);
    Eigen::VectorXd xi(d);
    Eigen::MatrixXd g =
        Eigen::MatrixXd::Identity(ctx.matrix_size(), ctx.matrix_size());
    for (int k = 1; k <= spec.steps; ++k) {
        for (int i = 0; i < d; ++i) xi[i] = sigma * rng.next_gaussian();
        g = exp_matrix(ctx.to_matrix(xi)) * g;
        if (k % kRepairCheckStride == 0 && ctx.membership_defect(g) > ctx.tol()) {
            g = ctx.project_to_group(g);
        }
        visit(k, g);
    }
}

} // namespace

GroupPath brownian_sample(const BrownianSpec& spec, Rng& rng) {
    if (!(spec.t > 0.0)) throw ArgumentError("brownian_sample: t must be positive");
    if (spec.steps < 2) throw ArgumentError("brownian_sample: need at least 2 steps");
    const LieContext& ctx = *spec.ctx;
    std::vector<Eigen::MatrixXd> nodes;
    nodes.reserve(static_cast<std::size_t>(spec.steps) + 1);
    nodes.push_back(Eigen::MatrixXd::Identity(ctx.matrix_size(), ctx.matrix_size()));
    brownian_walk(spec, rng, [&](int, const Eigen::MatrixXd& g) { nodes.push_back(g); });
    return GroupPath(spec.ctx, std::move(nodes), PathClass::BasedPath);
}

NodeObservable NodeObservable::trace_cosine(Eigen::MatrixXd C, double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) throw ArgumentError("NodeObservable: tau in [0, 1]");
    return NodeObservable(std::move(C), tau);
}

NodeObservable NodeObservable::default_for(const LieContext& ctx, double tau) {
    const int m = ctx.matrix_size();
    Eigen::VectorXd diag(m);
    for (int i = 0; i < m; ++i) diag[i] = static_cast<double>(i + 1) / m;
    return NodeObservable(Eigen::MatrixXd(diag.asDiagonal()), tau);
}

double NodeObservable::operator()(const GroupPath& x) const {
    const int k = static_cast<int>(std::lround(tau_ * x.grid()));
    return eval_node(x.node(k));
}

std::vector<DefectReport> brownian_defect(const GroupPath& g, const NodeObservable& obs,
                                          const std::vector<double>& t_list, int K,
                                          const EstimatorOptions& opts) {
    if (g.grid() != K) {
        throw ArgumentError("brownian_defect: g must be sampled on the Brownian grid");
    }
    const LieContext& ctx = g.ctx();
    const int node_index = static_cast<int>(std::lround(obs.tau() * K));
    const Eigen::MatrixXd g_inv_at_node = g.node(node_index).transpose();

    std::vector<DefectReport> reports;
    reports.reserve(t_list.size());
    for (std::size_t ti = 0; ti < t_list.size(); ++ti) {
        const auto t0 = std::chrono::steady_clock::now();
        const BrownianSpec spec(g.ctx_ptr(), t_list[ti], K);
        std::vector<double> diffs;
        detail::fill_samples(
            opts.M, opts.seed, /*stream_a=*/ti, opts.threads,
            [&](int, Rng& rng) {
                Eigen::MatrixXd at_node;
                brownian_walk(spec, rng, [&](int k, const Eigen::MatrixXd& node) {
                    if (k == node_index) at_node = node;
                });
                return obs.eval_node(g_inv_at_node * at_node) - obs.eval_node(at_node);
            },
            diffs);
        DefectReport rep;
        rep.experiment = "brownian";
        rep.group = ctx.family_name() + std::to_string(ctx.family_n());
        rep.N = K;
        rep.R = t_list[ti]; // diffusion time in the radius column
        rep.alpha = 0.0;
        rep.M = opts.M;
        rep.seed = opts.seed;
        const MeanStats ms = mean_and_std_error(diffs);
        rep.estimate = ms.mean;
        rep.std_error = ms.std_error;
        rep.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        reports.push_back(std::move(rep));
    }
    return reports;
}

} // namespace pathmean
