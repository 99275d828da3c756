#include "pathmean/functionals.hpp"

#include <cmath>

#include "pathmean/errors.hpp"

namespace pathmean {

TestFunctional TestFunctional::cosine(StepPath h) {
    return TestFunctional(Kind::Cosine, std::move(h), 0.0);
}

TestFunctional TestFunctional::gauss_window(StepPath w, double scale) {
    if (!(scale > 0.0)) throw ArgumentError("gauss_window: scale must be positive");
    return TestFunctional(Kind::GaussWindow, std::move(w), scale);
}

double TestFunctional::lipschitz() const {
    const double probe_norm = probe_.l2_norm();
    if (kind_ == Kind::Cosine) return probe_norm;
    // sup_y |d/dy exp(-s y^2)| = sqrt(2 s / e)
    return std::sqrt(2.0 * scale_ / std::exp(1.0)) * probe_norm;
}

double TestFunctional::eval_inner(double ip) const {
    if (kind_ == Kind::Cosine) return std::cos(ip);
    return std::exp(-scale_ * ip * ip);
}

} // namespace pathmean
