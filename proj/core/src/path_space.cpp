#include "pathmean/path_space.hpp"

#include <cmath>
#include <numeric>

#include "pathmean/errors.hpp"

namespace pathmean {

namespace {

constexpr int kRepairCheckStride = 256;

void require_same_ctx(const LieContext& a, const LieContext& b, const char* where) {
    if (!(a == b)) throw ContextMismatch(std::string(where) + ": contexts differ");
}

// Walks the product integral of f over blocks, invoking visit(i, P_mid, P_right)
// with the frames at the block midpoint and right endpoint. Repairs drift.
template <typename Visit>
void walk_midpoints(const StepPath& f, Visit&& visit) {
    const LieContext& ctx = f.ctx();
    const int N = f.blocks();
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(ctx.matrix_size(), ctx.matrix_size());
    Eigen::MatrixXd half_step(ctx.matrix_size(), ctx.matrix_size());
    for (int i = 0; i < N; ++i) {
        half_step = exp_matrix(ctx.to_matrix(f.block(i) / (2.0 * N)));
        Eigen::MatrixXd mid = half_step * P;
        P = half_step * mid;
        if ((i + 1) % kRepairCheckStride == 0 && ctx.membership_defect(P) > ctx.tol()) {
            P = ctx.project_to_group(P);
        }
        visit(i, mid, P);
    }
}

PathClass combine_class(PathClass a, PathClass b) {
    const bool based = (a == PathClass::BasedPath || a == PathClass::BasedLoop) &&
                       (b == PathClass::BasedPath || b == PathClass::BasedLoop);
    const bool loop = (a == PathClass::FreeLoop || a == PathClass::BasedLoop) &&
                      (b == PathClass::FreeLoop || b == PathClass::BasedLoop);
    if (based && loop) return PathClass::BasedLoop;
    if (based) return PathClass::BasedPath;
    if (loop) return PathClass::FreeLoop;
    return PathClass::FreePath;
}

} // namespace

const char* path_class_name(PathClass c) {
    switch (c) {
        case PathClass::FreePath: return "free-path";
        case PathClass::BasedPath: return "based-path";
        case PathClass::FreeLoop: return "free-loop";
        case PathClass::BasedLoop: return "based-loop";
    }
    return "free-path";
}

PathClass path_class_from_name(const std::string& name) {
    if (name == "free-path") return PathClass::FreePath;
    if (name == "based-path") return PathClass::BasedPath;
    if (name == "free-loop") return PathClass::FreeLoop;
    if (name == "based-loop") return PathClass::BasedLoop;
    throw ArgumentError("unknown path class '" + name + "'");
}

StepPath::StepPath(ContextPtr ctx, int N) : ctx_(std::move(ctx)), N_(N) {
    if (N_ < 1) throw ArgumentError("StepPath: N must be positive");
    data_ = Eigen::VectorXd::Zero(N_ * ctx_->algebra_dim());
}

StepPath::StepPath(ContextPtr ctx, Eigen::VectorXd data)
    : ctx_(std::move(ctx)), data_(std::move(data)) {
    const int d = ctx_->algebra_dim();
    if (data_.size() == 0 || data_.size() % d != 0) {
        throw ArgumentError("StepPath: data size must be a positive multiple of algebra_dim");
    }
    N_ = static_cast<int>(data_.size()) / d;
}

StepPath StepPath::refined(int factor) const {
    if (factor < 1) throw ArgumentError("StepPath::refined: factor must be >= 1");
    if (factor == 1) return *this;
    const int d = ctx_->algebra_dim();
    Eigen::VectorXd out(static_cast<Eigen::Index>(N_) * factor * d);
    for (int i = 0; i < N_; ++i) {
        for (int r = 0; r < factor; ++r) {
            out.segment((i * factor + r) * d, d) = data_.segment(i * d, d);
        }
    }
    return StepPath(ctx_, std::move(out));
}

GroupPath::GroupPath(ContextPtr ctx, std::vector<Eigen::MatrixXd> nodes, PathClass cls)
    : ctx_(std::move(ctx)), nodes_(std::move(nodes)), cls_(cls) {
    if (nodes_.size() < 2) throw ArgumentError("GroupPath: need at least 2 nodes");
    K_ = static_cast<int>(nodes_.size()) - 1;
}

bool GroupPath::valid(double tol_scale) const {
    const double tol = ctx_->tol() * tol_scale;
    if (cls_ == PathClass::BasedPath || cls_ == PathClass::BasedLoop) {
        const int m = ctx_->matrix_size();
        if ((nodes_.front() - Eigen::MatrixXd::Identity(m, m)).norm() > tol) return false;
    }
    if (cls_ == PathClass::FreeLoop || cls_ == PathClass::BasedLoop) {
        if ((nodes_.back() - nodes_.front()).norm() > tol) return false;
    }
    return max_membership_defect() <= tol;
}

double GroupPath::max_membership_defect() const {
    double worst = 0.0;
    for (const auto& g : nodes_) worst = std::max(worst, ctx_->membership_defect(g));
    return worst;
}

GroupElement product_integral(const StepPath& f, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw RangeError("product_integral: t must lie in [0, 1]");
    }
    const LieContext& ctx = f.ctx();
    const int N = f.blocks();
    int j = std::min(static_cast<int>(t * N), N - 1);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(ctx.matrix_size(), ctx.matrix_size());
    for (int i = 0; i < j; ++i) {
        P = exp_matrix(ctx.to_matrix(f.block(i) / N)) * P;
        if ((i + 1) % kRepairCheckStride == 0 && ctx.membership_defect(P) > ctx.tol()) {
            P = ctx.project_to_group(P);
        }
    }
    const double frac = t - static_cast<double>(j) / N;
    if (frac > 0.0) {
        P = exp_matrix(ctx.to_matrix(f.block(j) * frac)) * P;
    }
    return {P};
}

GroupPath develop(const StepPath& f, int K) {
    const LieContext& ctx = f.ctx();
    const int N = f.blocks();
    if (K < 1 || K % N != 0) {
        throw ArgumentError("develop: K must be a positive multiple of N");
    }
    const int per_block = K / N;
    std::vector<Eigen::MatrixXd> nodes;
    nodes.reserve(static_cast<std::size_t>(K) + 1);
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(ctx.matrix_size(), ctx.matrix_size());
    nodes.push_back(P);
    for (int i = 0; i < N; ++i) {
        const Eigen::MatrixXd step = exp_matrix(ctx.to_matrix(f.block(i) / K));
        for (int r = 0; r < per_block; ++r) {
            P = step * P;
            const int k = i * per_block + r + 1;
            if (k % kRepairCheckStride == 0 && ctx.membership_defect(P) > ctx.tol()) {
                P = ctx.project_to_group(P);
            }
            nodes.push_back(P);
        }
    }
    return GroupPath(f.ctx_ptr(), std::move(nodes), PathClass::BasedPath);
}

StepPath log_derivative(const GroupPath& g) {
    const LieContext& ctx = g.ctx();
    const int K = g.grid();
    const int d = ctx.algebra_dim();
    const int m = ctx.matrix_size();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd data(static_cast<Eigen::Index>(K) * d);
    for (int k = 0; k < K; ++k) {
        const Eigen::MatrixXd incr = g.node(k + 1) * g.node(k).transpose();
        if (!((incr - id).norm() < ctx.log_radius())) {
            throw DomainError("log_derivative: increment " + std::to_string(k) +
                              " outside the log radius (path too coarse)");
        }
        data.segment(k * d, d) = static_cast<double>(K) * ctx.to_coords(log_matrix(incr));
    }
    return StepPath(g.ctx_ptr(), std::move(data));
}

std::vector<Eigen::MatrixXd> midpoint_frames(const StepPath& f) {
    std::vector<Eigen::MatrixXd> frames(static_cast<std::size_t>(f.blocks()));
    walk_midpoints(f, [&](int i, const Eigen::MatrixXd& mid, const Eigen::MatrixXd&) {
        frames[static_cast<std::size_t>(i)] = mid;
    });
    return frames;
}

std::pair<StepPath, StepPath> to_common_grid(const StepPath& a, const StepPath& b) {
    require_same_ctx(a.ctx(), b.ctx(), "to_common_grid");
    const int n = std::lcm(a.blocks(), b.blocks());
    return {a.refined(n / a.blocks()), b.refined(n / b.blocks())};
}

StepPath star(const StepPath& f, const StepPath& g) {
    require_same_ctx(f.ctx(), g.ctx(), "star");
    auto [fc, gc] = to_common_grid(f, g);
    const LieContext& ctx = fc.ctx();
    StepPath out(fc.ctx_ptr(), fc.blocks());
    walk_midpoints(fc, [&](int i, const Eigen::MatrixXd& mid, const Eigen::MatrixXd&) {
        const Eigen::MatrixXd gm = ctx.to_matrix(gc.block(i));
        out.block(i) = fc.block(i) + ctx.to_coords(mid * gm * mid.transpose());
    });
    return out;
}

StepPath star_inverse(const StepPath& f) {
    const LieContext& ctx = f.ctx();
    StepPath out(f.ctx_ptr(), f.blocks());
    walk_midpoints(f, [&](int i, const Eigen::MatrixXd& mid, const Eigen::MatrixXd&) {
        const Eigen::MatrixXd fm = ctx.to_matrix(f.block(i));
        out.block(i) = -ctx.to_coords(mid.transpose() * fm * mid);
    });
    return out;
}

StepPath ad_path(const GroupPath& r, const StepPath& f) {
    require_same_ctx(r.ctx(), f.ctx(), "ad_path");
    const int K = r.grid();
    if (K % f.blocks() != 0) {
        throw ArgumentError("ad_path: r grid must be a multiple of f blocks");
    }
    const LieContext& ctx = f.ctx();
    const StepPath fr = f.refined(K / f.blocks());
    StepPath out(f.ctx_ptr(), K);
    for (int j = 0; j < K; ++j) {
        const Eigen::MatrixXd fm = ctx.to_matrix(fr.block(j));
        out.block(j) = ctx.to_coords(r.node(j) * fm * r.node(j).transpose());
    }
    return out;
}

StepPath ad_const(const GroupElement& g, const StepPath& f) {
    const LieContext& ctx = f.ctx();
    const Eigen::MatrixXd A = ad_operator(ctx, g.matrix);
    StepPath out(f.ctx_ptr(), f.blocks());
    for (int i = 0; i < f.blocks(); ++i) out.block(i) = A * f.block(i);
    return out;
}

GroupPath step_approx(const GroupPath& r, int N) {
    const int K = r.grid();
    if (N < 1 || K % N != 0) {
        throw ArgumentError("step_approx: r grid must be a multiple of N");
    }
    const int per_block = K / N;
    std::vector<Eigen::MatrixXd> nodes(static_cast<std::size_t>(K) + 1);
    for (int k = 0; k <= K; ++k) {
        const int i = std::min(k / per_block, N - 1);
        nodes[static_cast<std::size_t>(k)] = r.node(i * per_block);
    }
    return GroupPath(r.ctx_ptr(), std::move(nodes), r.path_class());
}

double cocycle_residual(const GroupPath& f, const GroupPath& g) {
    require_same_ctx(f.ctx(), g.ctx(), "cocycle_residual");
    if (f.grid() != g.grid()) {
        throw ArgumentError("cocycle_residual: paths must share a grid");
    }
    const StepPath d_fg = log_derivative(pointwise_product(f, g));
    const StepPath d_f = log_derivative(f);
    const StepPath ad_f_dg = ad_path(f, log_derivative(g));
    return (d_fg - d_f - ad_f_dg).l2_norm();
}

PathNormReport norms(const GroupPath& g) {
    PathNormReport rep;
    const StepPath dlog = log_derivative(g);
    rep.l2_of_log_derivative = dlog.l2_norm();

    const int K = g.grid();
    double path_sq = 0.0;
    for (int k = 0; k < K; ++k) path_sq += g.node(k).squaredNorm();
    path_sq /= static_cast<double>(K);
    rep.sobolev_norm = std::sqrt(path_sq + rep.l2_of_log_derivative * rep.l2_of_log_derivative);

    double holder = 0.0;
    for (int a = 0; a < K; ++a) {
        for (int b = a + 1; b <= K; ++b) {
            const double dist = (g.node(b) - g.node(a)).norm();
            const double dt = static_cast<double>(b - a) / K;
            holder = std::max(holder, dist / std::sqrt(dt));
        }
    }
    rep.holder_constant_observed = holder;
    return rep;
}

PathNormReport norms(const StepPath& f) {
    PathNormReport rep = norms(develop(f, f.blocks()));
    rep.l2_of_log_derivative = f.l2_norm(); // exact for the step representation
    return rep;
}

GroupPath pointwise_product(const GroupPath& a, const GroupPath& b) {
    require_same_ctx(a.ctx(), b.ctx(), "pointwise_product");
    if (a.grid() != b.grid()) {
        throw ArgumentError("pointwise_product: paths must share a grid");
    }
    std::vector<Eigen::MatrixXd> nodes(static_cast<std::size_t>(a.grid()) + 1);
    for (int k = 0; k <= a.grid(); ++k) {
        nodes[static_cast<std::size_t>(k)] = a.node(k) * b.node(k);
    }
    return GroupPath(a.ctx_ptr(), std::move(nodes),
                     combine_class(a.path_class(), b.path_class()));
}

GroupPath pointwise_inverse(const GroupPath& a) {
    std::vector<Eigen::MatrixXd> nodes(static_cast<std::size_t>(a.grid()) + 1);
    for (int k = 0; k <= a.grid(); ++k) {
        nodes[static_cast<std::size_t>(k)] = a.node(k).transpose();
    }
    return GroupPath(a.ctx_ptr(), std::move(nodes), a.path_class());
}

double inner_l2(const StepPath& a, const StepPath& b) {
    auto [ac, bc] = to_common_grid(a, b);
    return ac.data().dot(bc.data()) / static_cast<double>(ac.blocks());
}

StepPath project_to_grid(const StepPath& f, int N) {
    const int L = f.blocks();
    if (N < 1 || L % N != 0) {
        throw ArgumentError("project_to_grid: f blocks must be a multiple of N");
    }
    const int factor = L / N;
    if (factor == 1) return f;
    const int d = f.ctx().algebra_dim();
    StepPath out(f.ctx_ptr(), N);
    for (int i = 0; i < N; ++i) {
        Eigen::VectorXd avg = Eigen::VectorXd::Zero(d);
        for (int r = 0; r < factor; ++r) avg += f.block(i * factor + r);
        out.block(i) = avg / static_cast<double>(factor);
    }
    return out;
}

BlockAdMap BlockAdMap::from_group_path(const GroupPath& r) {
    std::vector<Eigen::MatrixXd> maps(static_cast<std::size_t>(r.grid()));
    for (int j = 0; j < r.grid(); ++j) {
        maps[static_cast<std::size_t>(j)] = ad_operator(r.ctx(), r.node(j));
    }
    return BlockAdMap(r.ctx_ptr(), std::move(maps));
}

BlockAdMap BlockAdMap::from_frames(ContextPtr ctx,
                                   const std::vector<Eigen::MatrixXd>& frames) {
    std::vector<Eigen::MatrixXd> maps(frames.size());
    for (std::size_t j = 0; j < frames.size(); ++j) {
        maps[j] = ad_operator(*ctx, frames[j]);
    }
    return BlockAdMap(std::move(ctx), std::move(maps));
}

StepPath BlockAdMap::apply(const StepPath& f) const {
    const int n = blocks();
    if (n % f.blocks() != 0) {
        throw ArgumentError("BlockAdMap::apply: map grid must be a multiple of f blocks");
    }
    StepPath out = f.refined(n / f.blocks());
    apply_in_place(out.data(), f.ctx().algebra_dim());
    return out;
}

void BlockAdMap::apply_in_place(Eigen::VectorXd& data, int d) const {
    const int n = blocks();
    if (data.size() != static_cast<Eigen::Index>(n) * d) {
        throw ArgumentError("BlockAdMap::apply_in_place: data not on the map grid");
    }
    Eigen::VectorXd tmp(d);
    for (int j = 0; j < n; ++j) {
        tmp.noalias() = maps_[static_cast<std::size_t>(j)] * data.segment(j * d, d);
        data.segment(j * d, d) = tmp;
    }
}

StepPath operator+(const StepPath& a, const StepPath& b) {
    auto [ac, bc] = to_common_grid(a, b);
    return StepPath(ac.ctx_ptr(), ac.data() + bc.data());
}

StepPath operator-(const StepPath& a, const StepPath& b) {
    auto [ac, bc] = to_common_grid(a, b);
    return StepPath(ac.ctx_ptr(), ac.data() - bc.data());
}

StepPath operator*(double s, const StepPath& f) {
    return StepPath(f.ctx_ptr(), s * f.data());
}

} // namespace pathmean
