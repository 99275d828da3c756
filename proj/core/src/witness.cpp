#include "pathmean/witness.hpp"

#include <cmath>

#include "pathmean/errors.hpp"

namespace pathmean {

WitnessResult sin_witness(ContextPtr ctx, const AlgebraElement& y, double R, double eps,
                          int N) {
    const LieContext& c = *ctx;
    const int d = c.algebra_dim();
    if (y.coords.size() != d) throw ArgumentError("sin_witness: wrong coordinate size");
    const double y_norm = y.coords.norm();
    if (!(y_norm > 0.0)) throw ArgumentError("sin_witness: y must be nonzero");
    if (eps < 0.0) throw ArgumentError("sin_witness: eps must be >= 0");
    if (N < 1) throw ArgumentError("sin_witness: N must be >= 1");

    // Basis direction with the strongest bracket against y; zero bracket for
    // every direction means y is central and no witness exists.
    const Eigen::MatrixXd ym = c.to_matrix(y.coords);
    int best = -1;
    double best_norm = 0.0;
    for (int j = 0; j < d; ++j) {
        const Eigen::MatrixXd br = c.basis(j) * ym - ym * c.basis(j);
        const double n = br.norm();
        if (n > best_norm) {
            best_norm = n;
            best = j;
        }
    }
    if (best < 0 || best_norm <= c.tol() * y_norm) {
        throw ArgumentError("sin_witness: y is central, no witness direction exists");
    }

    StepPath f(ctx, N);
    for (int i = 0; i < N; ++i) f.block(i)[best] = eps;

    StepPath ybar(ctx, N);
    for (int i = 0; i < N; ++i) ybar.block(i) = y.coords;

    const StepPath translated = star(f, R * ybar);
    const double growth = std::abs(inner_l2(translated, ybar) / y_norm - R * y_norm);
    return WitnessResult{std::move(f), growth};
}

} // namespace pathmean
