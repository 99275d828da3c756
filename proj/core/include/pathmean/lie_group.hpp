#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <vector>

#include "pathmean/rng.hpp"

namespace pathmean {

enum class GroupFamily {
    SOn,     ///< SO(n) in M_n(R), n >= 2
    SU2Real, ///< SU(2) embedded as real 4x4 matrices
};

/// Lie algebra element, stored as coordinates in the context basis.
/// Basis orthonormality makes the Hilbert-Schmidt norm of the matrix equal
/// to the Euclidean norm of the coordinates.
struct AlgebraElement {
    Eigen::VectorXd coords;
};

/// Group element, stored as its m x m real matrix.
struct GroupElement {
    Eigen::MatrixXd matrix;
};

/// A concrete compact matrix group with its algebra basis and HS geometry.
///
/// Immutable after construction; safe to share across threads.
class LieContext {
public:
    static LieContext so(int n, double tol = 1e-9, double log_radius = 1.9);
    static LieContext su2(double tol = 1e-9, double log_radius = 1.9);

    /// Build from a family name ("so" or "su2") and n.
    static LieContext make(const std::string& family, int n, double tol = 1e-9);

    GroupFamily family() const { return family_; }
    int family_n() const { return n_; }
    int matrix_size() const { return m_; }
    int algebra_dim() const { return d_; }
    const Eigen::MatrixXd& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
    double tol() const { return tol_; }
    double log_radius() const { return log_radius_; }
    std::string family_name() const;

    GroupElement identity() const;

    /// Matrix of an algebra element with the given basis coordinates.
    Eigen::MatrixXd to_matrix(const Eigen::VectorXd& coords) const;

    /// HS projection of a matrix onto the basis (exact on algebra elements).
    Eigen::VectorXd to_coords(const Eigen::MatrixXd& X) const;

    /// Deviation of g from group membership: orthogonality defect plus
    /// determinant / structure defect, in HS norm.
    double membership_defect(const Eigen::MatrixXd& g) const;

    bool is_group_element(const Eigen::MatrixXd& g, double tol_scale = 1.0) const;
    bool is_algebra_element(const Eigen::MatrixXd& X, double tol_scale = 1.0) const;

    /// Nearest group element (polar projection for SO(n), quaternion
    /// renormalization for the SU(2) embedding). Used for drift repair.
    Eigen::MatrixXd project_to_group(const Eigen::MatrixXd& g) const;

    bool operator==(const LieContext& other) const {
        return family_ == other.family_ && n_ == other.n_;
    }

private:
    LieContext() = default;

    GroupFamily family_ = GroupFamily::SOn;
    int n_ = 0; ///< n of SO(n); 2 for SU(2)
    int m_ = 0;
    int d_ = 0;
    std::vector<Eigen::MatrixXd> basis_;
    double tol_ = 1e-9;
    double log_radius_ = 1.9;
};

using ContextPtr = std::shared_ptr<const LieContext>;

/// Matrix exponential (scaling-and-squaring with a fixed-order rational
/// approximant); total on algebra elements.
GroupElement exp_alg(const LieContext& ctx, const AlgebraElement& X);

/// Principal matrix logarithm restricted to ||g - I||_HS < ctx.log_radius().
/// Throws DomainError outside the radius.
AlgebraElement log_group(const LieContext& ctx, const GroupElement& g);

/// Adjoint action Ad_g X = g X g^{-1}, in basis coordinates.
AlgebraElement ad(const LieContext& ctx, const GroupElement& g, const AlgebraElement& X);

/// d x d matrix of X |-> Ad_g X in basis coordinates.
Eigen::MatrixXd ad_operator(const LieContext& ctx, const Eigen::MatrixXd& g);

/// Haar-distributed group element (QR of a Gaussian matrix with sign
/// correction for SO(n); uniform unit quaternion for SU(2)).
GroupElement haar_sample(const LieContext& ctx, Rng& rng);

/// Uniform on the sphere of the given norm in coordinate space.
AlgebraElement random_algebra(const LieContext& ctx, Rng& rng, double norm);

/// Matrix-level kernels (context-free).
Eigen::MatrixXd exp_matrix(const Eigen::MatrixXd& X);
Eigen::MatrixXd log_matrix(const Eigen::MatrixXd& g); ///< principal branch, near identity

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
    return {a.matrix * b.matrix};
}

/// Group inverse; elements are orthogonal so this is the transpose.
inline GroupElement inverse(const GroupElement& g) {
    return {g.matrix.transpose()};
}

} // namespace pathmean
