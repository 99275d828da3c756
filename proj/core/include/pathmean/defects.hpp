#pragma once

#include <cstdint>
#include <string>

#include "pathmean/ball_measure.hpp"
#include "pathmean/functionals.hpp"

namespace pathmean {

/// One Monte Carlo invariance-defect estimate. Estimates are paired
/// (common random numbers), so the identity action gives exactly zero.
struct DefectReport {
    std::string experiment;
    std::string group;
    int N = 0;
    double R = 0.0;
    double alpha = 0.0;
    int M = 0;
    std::uint64_t seed = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    double wall_ms = 0.0;
    bool schedule_warning = false; ///< power-law exponent outside (1/2, 1)
};

struct EstimatorOptions {
    int M = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
};

/// Mean of F(g + f) - F(f) over nu_N samples f. g must refine into V_N.
DefectReport translation_defect(const StepPath& g, const TestFunctional& F, int N,
                                const RadiusSchedule& sched, const EstimatorOptions& opts);

/// Mean of F(Ad_r f) - F(f); r.grid() must be a multiple of N.
DefectReport rotation_defect(const GroupPath& r, const TestFunctional& F, int N,
                             const RadiusSchedule& sched, const EstimatorOptions& opts);

/// Mean of F(g * f) - F(f), via the decomposition g * f = g + Ad_{Pexp g} f.
DefectReport star_defect(const StepPath& g, const TestFunctional& F, int N,
                         const RadiusSchedule& sched, const EstimatorOptions& opts);

/// Bounded test function on the compact group itself: x -> cos(tr(C x)).
class GroupFunctional {
public:
    static GroupFunctional trace_cosine(Eigen::MatrixXd C);
    /// Default coefficient matrix diag(1, ..., m) / m.
    static GroupFunctional default_for(const LieContext& ctx);

    double operator()(const Eigen::MatrixXd& g) const {
        return std::cos((C_.array() * g.transpose().array()).sum());
    }
    double bound() const { return 1.0; }

private:
    explicit GroupFunctional(Eigen::MatrixXd C) : C_(std::move(C)) {}
    Eigen::MatrixXd C_;
};

/// Left translation by (k, g) in the semidirect product of the constant
/// subgroup with the based path group, acting on Haar x nu_N samples (x, f):
/// mean of F_K(k x) F((Ad_{x^{-1}} g) * f) - F_K(x) F(f).
DefectReport semidirect_defect(const GroupElement& k, const StepPath& g,
                               const GroupFunctional& F_K, const TestFunctional& F, int N,
                               const RadiusSchedule& sched, const EstimatorOptions& opts);

} // namespace pathmean
