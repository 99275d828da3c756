#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "pathmean/defects.hpp"

namespace pathmean {

/// Defect estimates over an ascending N grid with a fitted decay rate.
struct SweepResult {
    enum class Flag { Ok, NoiseDominated, Degenerate };

    std::vector<DefectReport> reports;
    std::optional<double> slope;         ///< log|estimate| vs log N
    std::optional<double> slope_ci_half; ///< 1.96 * slope standard error
    Flag flag = Flag::Ok;
    int doublings_used = 0;
};

const char* sweep_flag_name(SweepResult::Flag flag);

/// Runs one defect cell at a given N; the closure binds the experiment kind
/// and its fixed inputs (g, r, F, schedule, ...).
using DefectRunner = std::function<DefectReport(int N, const EstimatorOptions&)>;

struct SweepOptions {
    int M = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    int doubling_cap = 1; ///< times M may double when estimates are noise-dominated
};

/// Runs the defect over N_list with a deterministic per-cell seed schedule.
/// A slope is fitted only when every estimate is significant (|estimate| >
/// 3 std_error); otherwise M doubles up to the cap and the sweep is flagged
/// if significance is still not reached. All-zero estimates flag Degenerate.
SweepResult sweep(const DefectRunner& run_cell, const std::vector<int>& N_list,
                  const SweepOptions& opts);

} // namespace pathmean
