#include "pathmean/lie_group.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

#include "pathmean/errors.hpp"

namespace pathmean {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Real 4x4 embedding of a complex 2x2 matrix A + iB, coordinates ordered
// (Re z1, Re z2, Im z1, Im z2):  [[A, -B], [B, A]].
Eigen::Matrix4d embed_complex(const Eigen::Matrix2d& A, const Eigen::Matrix2d& B) {
    Eigen::Matrix4d R;
    R.block<2, 2>(0, 0) = A;
    R.block<2, 2>(0, 2) = -B;
    R.block<2, 2>(2, 0) = B;
    R.block<2, 2>(2, 2) = A;
    return R;
}

// su(2) generators i*sigma_k, embedded; HS-orthonormal after division by 2.
std::vector<Eigen::MatrixXd> su2_basis() {
    Eigen::Matrix2d zero = Eigen::Matrix2d::Zero();
    Eigen::Matrix2d s1, s2a, s3;
    s1 << 0, 1, 1, 0;                // sigma_1
    s2a << 0, 1, -1, 0;              // i*sigma_2 is real: A block
    s3 << 1, 0, 0, -1;               // sigma_3
    std::vector<Eigen::MatrixXd> basis(3);
    basis[0] = embed_complex(zero, s1) / 2.0;  // i*sigma_1
    basis[1] = embed_complex(s2a, zero) / 2.0; // i*sigma_2
    basis[2] = embed_complex(zero, s3) / 2.0;  // i*sigma_3
    return basis;
}

// Quaternion (w, x, y, z) -> embedded U(1)-free SU(2) matrix.
Eigen::Matrix4d su2_from_quaternion(double w, double x, double y, double z,
                                    const std::vector<Eigen::MatrixXd>& basis) {
    Eigen::Matrix4d g = w * Eigen::Matrix4d::Identity();
    g += 2.0 * x * basis[0];
    g += 2.0 * y * basis[1];
    g += 2.0 * z * basis[2];
    return g;
}

} // namespace

LieContext LieContext::so(int n, double tol, double log_radius) {
    if (n < 2) throw ArgumentError("LieContext::so: need n >= 2");
    LieContext ctx;
    ctx.family_ = GroupFamily::SOn;
    ctx.n_ = n;
    ctx.m_ = n;
    ctx.d_ = n * (n - 1) / 2;
    ctx.tol_ = tol;
    ctx.log_radius_ = log_radius;
    ctx.basis_.reserve(static_cast<std::size_t>(ctx.d_));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
            b(i, j) = 1.0 / kSqrt2;
            b(j, i) = -1.0 / kSqrt2;
            ctx.basis_.push_back(std::move(b));
        }
    }
    return ctx;
}

LieContext LieContext::su2(double tol, double log_radius) {
    LieContext ctx;
    ctx.family_ = GroupFamily::SU2Real;
    ctx.n_ = 2;
    ctx.m_ = 4;
    ctx.d_ = 3;
    ctx.tol_ = tol;
    ctx.log_radius_ = log_radius;
    ctx.basis_ = su2_basis();
    return ctx;
}

LieContext LieContext::make(const std::string& family, int n, double tol) {
    if (family == "so") {
        if (n < 2 || n > 8) throw ArgumentError("LieContext::make: so supports n in [2, 8]");
        return so(n, tol);
    }
    if (family == "su2") return su2(tol);
    throw ArgumentError("LieContext::make: unknown family '" + family + "'");
}

std::string LieContext::family_name() const {
    return family_ == GroupFamily::SOn ? "so" : "su2";
}

GroupElement LieContext::identity() const {
    return {Eigen::MatrixXd::Identity(m_, m_)};
}

Eigen::MatrixXd LieContext::to_matrix(const Eigen::VectorXd& coords) const {
    if (coords.size() != d_) throw ArgumentError("to_matrix: wrong coordinate size");
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(m_, m_);
    for (int i = 0; i < d_; ++i) X += coords[i] * basis_[static_cast<std::size_t>(i)];
    return X;
}

Eigen::VectorXd LieContext::to_coords(const Eigen::MatrixXd& X) const {
    Eigen::VectorXd c(d_);
    for (int i = 0; i < d_; ++i) {
        c[i] = (basis_[static_cast<std::size_t>(i)].array() * X.array()).sum();
    }
    return c;
}

double LieContext::membership_defect(const Eigen::MatrixXd& g) const {
    if (g.rows() != m_ || g.cols() != m_) return 1e300;
    const double ortho = (g.transpose() * g - Eigen::MatrixXd::Identity(m_, m_)).norm();
    if (family_ == GroupFamily::SOn) {
        return ortho + std::abs(g.determinant() - 1.0);
    }
    // SU(2): distance to the quaternion span plus unit-norm defect of the
    // projected quaternion (complex determinant one).
    const double w = g.trace() / 4.0;
    Eigen::Vector3d q;
    for (int i = 0; i < 3; ++i) {
        q[i] = (basis_[static_cast<std::size_t>(i)].array() * g.array()).sum() / 2.0;
    }
    Eigen::MatrixXd span = su2_from_quaternion(w, q[0], q[1], q[2], basis_);
    const double off_span = (g - span).norm();
    const double unit = std::abs(w * w + q.squaredNorm() - 1.0);
    return ortho + off_span + unit;
}

bool LieContext::is_group_element(const Eigen::MatrixXd& g, double tol_scale) const {
    return membership_defect(g) <= tol_ * tol_scale;
}

bool LieContext::is_algebra_element(const Eigen::MatrixXd& X, double tol_scale) const {
    if (X.rows() != m_ || X.cols() != m_) return false;
    const double skew = (X + X.transpose()).norm();
    const double off_span = (X - to_matrix(to_coords(X))).norm();
    return skew + off_span <= tol_ * tol_scale;
}

Eigen::MatrixXd LieContext::project_to_group(const Eigen::MatrixXd& g) const {
    if (family_ == GroupFamily::SOn) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
        Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose();
        if (q.determinant() < 0.0) {
            // drift cannot flip the component; guard anyway
            Eigen::MatrixXd u = svd.matrixU();
            u.col(m_ - 1) *= -1.0;
            q = u * svd.matrixV().transpose();
        }
        return q;
    }
    const double w = g.trace() / 4.0;
    Eigen::Vector3d q;
    for (int i = 0; i < 3; ++i) {
        q[i] = (basis_[static_cast<std::size_t>(i)].array() * g.array()).sum() / 2.0;
    }
    const double norm = std::sqrt(w * w + q.squaredNorm());
    return su2_from_quaternion(w / norm, q[0] / norm, q[1] / norm, q[2] / norm, basis_);
}

Eigen::MatrixXd exp_matrix(const Eigen::MatrixXd& X) {
    return X.exp();
}

Eigen::MatrixXd log_matrix(const Eigen::MatrixXd& g) {
    const int m = static_cast<int>(g.rows());
    const Eigen::MatrixXd E = g - Eigen::MatrixXd::Identity(m, m);
    const double e_norm = E.norm();
    if (e_norm >= 0.25) {
        return g.log(); // inverse scaling-and-squaring
    }
    // Mercator series log(I + E); tail bound ||E||^{k+1}/(k+1)(1-||E||)
    Eigen::MatrixXd term = E;
    Eigen::MatrixXd acc = E;
    double term_norm = e_norm;
    for (int k = 2; k <= 60; ++k) {
        term = term * E;
        term_norm *= e_norm;
        acc += (k % 2 == 0 ? -1.0 : 1.0) / static_cast<double>(k) * term;
        if (term_norm / static_cast<double>(k + 1) < 1e-17) break;
    }
    return acc;
}

GroupElement exp_alg(const LieContext& ctx, const AlgebraElement& X) {
    return {exp_matrix(ctx.to_matrix(X.coords))};
}

AlgebraElement log_group(const LieContext& ctx, const GroupElement& g) {
    const int m = ctx.matrix_size();
    const double dist = (g.matrix - Eigen::MatrixXd::Identity(m, m)).norm();
    if (!(dist < ctx.log_radius())) {
        throw DomainError("log_group: element outside principal log radius (||g - I|| = " +
                          std::to_string(dist) + ")");
    }
    return {ctx.to_coords(log_matrix(g.matrix))};
}

AlgebraElement ad(const LieContext& ctx, const GroupElement& g, const AlgebraElement& X) {
    const Eigen::MatrixXd Xm = ctx.to_matrix(X.coords);
    return {ctx.to_coords(g.matrix * Xm * g.matrix.transpose())};
}

Eigen::MatrixXd ad_operator(const LieContext& ctx, const Eigen::MatrixXd& g) {
    const int d = ctx.algebra_dim();
    Eigen::MatrixXd A(d, d);
    for (int j = 0; j < d; ++j) {
        const Eigen::MatrixXd conj = g * ctx.basis(j) * g.transpose();
        for (int i = 0; i < d; ++i) {
            A(i, j) = (ctx.basis(i).array() * conj.array()).sum();
        }
    }
    return A;
}

GroupElement haar_sample(const LieContext& ctx, Rng& rng) {
    if (ctx.family() == GroupFamily::SU2Real) {
        double w, x, y, z, n2;
        do {
            w = rng.next_gaussian();
            x = rng.next_gaussian();
            y = rng.next_gaussian();
            z = rng.next_gaussian();
            n2 = w * w + x * x + y * y + z * z;
        } while (n2 == 0.0);
        const double inv = 1.0 / std::sqrt(n2);
        Eigen::MatrixXd g = inv * w * Eigen::Matrix4d::Identity();
        g += 2.0 * inv * x * ctx.basis(0);
        g += 2.0 * inv * y * ctx.basis(1);
        g += 2.0 * inv * z * ctx.basis(2);
        return {g};
    }
    const int m = ctx.matrix_size();
    Eigen::MatrixXd Z(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) Z(i, j) = rng.next_gaussian();
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Z);
    Eigen::MatrixXd Q = qr.householderQ();
    const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < m; ++j) {
        if (R(j, j) < 0.0) Q.col(j) *= -1.0;
    }
    // O(n) Haar conditioned onto SO(n) by a fixed right reflection
    if (Q.determinant() < 0.0) Q.col(m - 1) *= -1.0;
    return {Q};
}

AlgebraElement random_algebra(const LieContext& ctx, Rng& rng, double norm) {
    const int d = ctx.algebra_dim();
    if (norm < 0.0) throw ArgumentError("random_algebra: norm must be >= 0");
    Eigen::VectorXd v(d);
    if (norm == 0.0) {
        v.setZero();
        return {v};
    }
    double n2;
    do {
        for (int i = 0; i < d; ++i) v[i] = rng.next_gaussian();
        n2 = v.squaredNorm();
    } while (n2 == 0.0);
    v *= norm / std::sqrt(n2);
    return {v};
}

} // namespace pathmean
