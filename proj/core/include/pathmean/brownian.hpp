#pragma once

#include <vector>

#include "pathmean/defects.hpp"

namespace pathmean {

/// Euler-Maruyama product-integral lift of scaled white noise:
/// g_{k+1} = exp(sqrt(t / K) xi_k) g_k with xi_k standard Gaussian in the
/// algebra coordinates.
struct BrownianSpec {
    ContextPtr ctx;
    double t = 1.0; ///< diffusion time
    int steps = 2;  ///< K

    BrownianSpec(ContextPtr c, double time, int K) : ctx(std::move(c)), t(time), steps(K) {}
};

GroupPath brownian_sample(const BrownianSpec& spec, Rng& rng);

/// Bounded observable of a single node evaluation: x -> cos(tr(C x(tau))).
class NodeObservable {
public:
    static NodeObservable trace_cosine(Eigen::MatrixXd C, double tau = 1.0);
    static NodeObservable default_for(const LieContext& ctx, double tau = 1.0);

    double operator()(const GroupPath& x) const;
    double eval_node(const Eigen::MatrixXd& node) const {
        return std::cos((C_.array() * node.transpose().array()).sum());
    }
    double tau() const { return tau_; }
    double bound() const { return 1.0; }

private:
    NodeObservable(Eigen::MatrixXd C, double tau) : C_(std::move(C)), tau_(tau) {}
    Eigen::MatrixXd C_;
    double tau_;
};

/// For each diffusion time t: paired mean of obs(g^{-1} x) - obs(x) over M
/// Brownian samples x (pointwise group product). g must be sampled on grid K.
std::vector<DefectReport> brownian_defect(const GroupPath& g, const NodeObservable& obs,
                                          const std::vector<double>& t_list, int K,
                                          const EstimatorOptions& opts);

} // namespace pathmean
