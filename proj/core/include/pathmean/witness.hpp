#pragma once

#include "pathmean/path_space.hpp"

namespace pathmean {

/// Output of the uniform-structure witness: a small element f of the * group
/// (||f||_2 = eps) whose right translate of the far-away constant-path ray
/// R ybar moves arbitrarily far from it after the 1-dimensional projection
/// onto span(ybar). The growth is linear in R while ||f||_2 stays fixed,
/// certifying that the projection is not right uniformly continuous.
struct WitnessResult {
    StepPath f;
    double growth = 0.0;
};

/// Builds f = eps * Z (constant in time) with Z a basis direction not
/// commuting with y, and returns growth = ||P(f * (R ybar)) - R ybar||_2 with
/// P the orthogonal projection onto span(ybar). Throws ArgumentError when y
/// is central (e.g. any y in an abelian context).
WitnessResult sin_witness(ContextPtr ctx, const AlgebraElement& y, double R, double eps,
                          int N);

} // namespace pathmean
