#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "pathmean/lie_group.hpp"

namespace pathmean {

enum class PathClass { FreePath, BasedPath, FreeLoop, BasedLoop };

const char* path_class_name(PathClass c);
PathClass path_class_from_name(const std::string& name);

/// Element of V_N: a step function [0,1) -> g, constant on [i/N, (i+1)/N),
/// stored as N concatenated blocks of basis coordinates.
class StepPath {
public:
    StepPath(ContextPtr ctx, int N);
    StepPath(ContextPtr ctx, Eigen::VectorXd data);

    int blocks() const { return N_; }
    const LieContext& ctx() const { return *ctx_; }
    const ContextPtr& ctx_ptr() const { return ctx_; }

    Eigen::VectorBlock<const Eigen::VectorXd> block(int i) const {
        return data_.segment(i * ctx_->algebra_dim(), ctx_->algebra_dim());
    }
    Eigen::VectorBlock<Eigen::VectorXd> block(int i) {
        return data_.segment(i * ctx_->algebra_dim(), ctx_->algebra_dim());
    }
    const Eigen::VectorXd& data() const { return data_; }
    Eigen::VectorXd& data() { return data_; }

    /// ||f||_2 = sqrt((1/N) sum_i ||f_i||^2); exact identity of the representation.
    double l2_norm() const {
        return std::sqrt(data_.squaredNorm() / static_cast<double>(N_));
    }

    /// Same function on a grid refined by an integer factor.
    StepPath refined(int factor) const;

private:
    ContextPtr ctx_;
    int N_;
    Eigen::VectorXd data_;
};

/// Grid-sampled path [0,1] -> G with K+1 nodes at t_k = k/K.
class GroupPath {
public:
    GroupPath(ContextPtr ctx, std::vector<Eigen::MatrixXd> nodes, PathClass cls);

    int grid() const { return K_; }
    const LieContext& ctx() const { return *ctx_; }
    const ContextPtr& ctx_ptr() const { return ctx_; }
    PathClass path_class() const { return cls_; }

    const Eigen::MatrixXd& node(int k) const { return nodes_[static_cast<std::size_t>(k)]; }
    const std::vector<Eigen::MatrixXd>& nodes() const { return nodes_; }

    /// Checks the class invariants (based: node 0 = I; loop: endpoints agree)
    /// and group membership of every node, within tol_scale * ctx.tol().
    bool valid(double tol_scale = 10.0) const;

    /// Largest membership defect over all nodes.
    double max_membership_defect() const;

private:
    ContextPtr ctx_;
    int K_;
    std::vector<Eigen::MatrixXd> nodes_;
    PathClass cls_;
};

struct PathNormReport {
    double l2_of_log_derivative = 0.0;
    double sobolev_norm = 0.0;
    double holder_constant_observed = 0.0;
};

/// Product integral of a step function at time t in [0, 1]:
/// exp((t - t_j) f_j) exp(f_{j-1}/N) ... exp(f_0/N), later intervals on the left.
GroupElement product_integral(const StepPath& f, double t);

/// Based path t_k -> product_integral(f, k/K), evaluated incrementally with
/// drift repair. K must be a multiple of f.blocks().
GroupPath develop(const StepPath& f, int K);

/// Discrete right logarithmic derivative: block k is K log(g_{k+1} g_k^{-1}).
/// Throws DomainError if an increment leaves the principal log radius.
StepPath log_derivative(const GroupPath& g);

/// Group law on L^2: (f * g)_i = f_i + Ad_{P_f(mid_i)} g_i, where P_f is the
/// product integral of f and mid_i the block midpoint. Mismatched grids are
/// refined to the least common multiple.
StepPath star(const StepPath& f, const StepPath& g);

/// Inverse for the * law: block i is -Ad_{P_f(mid_i)^{-1}} f_i.
StepPath star_inverse(const StepPath& f);

/// Pointwise adjoint action of a sampled path: f is refined to r's grid and
/// block j is conjugated by the node r(j/K).
StepPath ad_path(const GroupPath& r, const StepPath& f);

/// Conjugate every block by a fixed group element.
StepPath ad_const(const GroupElement& g, const StepPath& f);

/// Piecewise-constant approximation taking the value r(i/N) on block i,
/// encoded on r's grid. r.grid() must be a multiple of N.
GroupPath step_approx(const GroupPath& r, int N);

/// ||dlog(fg) - dlog f - Ad_f dlog g||_2 on a common grid.
double cocycle_residual(const GroupPath& f, const GroupPath& g);

PathNormReport norms(const StepPath& f);
PathNormReport norms(const GroupPath& g);

GroupPath pointwise_product(const GroupPath& a, const GroupPath& b);
GroupPath pointwise_inverse(const GroupPath& a);

/// L^2 inner product on [0,1]; grids are refined to a common multiple.
double inner_l2(const StepPath& a, const StepPath& b);

/// L^2-orthogonal projection onto V_N by block averaging; f.blocks() must be
/// a multiple of N.
StepPath project_to_grid(const StepPath& f, int N);

/// Group frames at block midpoints: P_f((i + 1/2)/N) for each block i.
std::vector<Eigen::MatrixXd> midpoint_frames(const StepPath& f);

/// Blockwise linear maps on V_N in basis coordinates (precomputed adjoints).
/// apply() refines its argument to the map grid; each block is one d x d
/// matrix-vector product, which is what the Monte Carlo kernels iterate.
class BlockAdMap {
public:
    static BlockAdMap from_group_path(const GroupPath& r);
    static BlockAdMap from_frames(ContextPtr ctx,
                                  const std::vector<Eigen::MatrixXd>& frames);

    int blocks() const { return static_cast<int>(maps_.size()); }
    const Eigen::MatrixXd& map(int i) const { return maps_[static_cast<std::size_t>(i)]; }

    StepPath apply(const StepPath& f) const;

    /// apply on raw refined coordinates (no allocation); data must already be
    /// on the map grid.
    void apply_in_place(Eigen::VectorXd& data, int d) const;

private:
    BlockAdMap(ContextPtr ctx, std::vector<Eigen::MatrixXd> maps)
        : ctx_(std::move(ctx)), maps_(std::move(maps)) {}

    ContextPtr ctx_;
    std::vector<Eigen::MatrixXd> maps_;
};

StepPath operator+(const StepPath& a, const StepPath& b);
StepPath operator-(const StepPath& a, const StepPath& b);
StepPath operator*(double s, const StepPath& f);

/// Refine both paths onto their common grid (lcm of block counts).
std::pair<StepPath, StepPath> to_common_grid(const StepPath& a, const StepPath& b);

} // namespace pathmean
