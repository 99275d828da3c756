#pragma once

#include "pathmean/path_space.hpp"

namespace pathmean {

/// Bounded uniformly continuous test functional on L^2((0,1), g).
/// Both kinds are scalar functions of the inner product with a fixed probe:
///   cosine:       F(f) = cos(<f, h>_2),             bound 1, Lip ||h||_2
///   gauss_window: F(f) = exp(-scale * <f, w>_2^2),  bound 1, Lip sqrt(2 scale / e) ||w||_2
class TestFunctional {
public:
    enum class Kind { Cosine, GaussWindow };

    static TestFunctional cosine(StepPath h);
    static TestFunctional gauss_window(StepPath w, double scale);

    Kind kind() const { return kind_; }
    const StepPath& probe() const { return probe_; }
    double scale() const { return scale_; }

    double bound() const { return 1.0; }
    double lipschitz() const;

    /// phi(ip) where ip stands for the probe inner product.
    double eval_inner(double ip) const;

    double operator()(const StepPath& f) const { return eval_inner(inner_l2(f, probe_)); }

private:
    TestFunctional(Kind kind, StepPath probe, double scale)
        : kind_(kind), probe_(std::move(probe)), scale_(scale) {}

    Kind kind_;
    StepPath probe_;
    double scale_;
};

} // namespace pathmean
