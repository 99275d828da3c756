#include "pathmean/sweep.hpp"

#include <cmath>

#include "pathmean/errors.hpp"
#include "pathmean/stats.hpp"

namespace pathmean {

const char* sweep_flag_name(SweepResult::Flag flag) {
    switch (flag) {
        case SweepResult::Flag::Ok: return "ok";
        case SweepResult::Flag::NoiseDominated: return "noise-dominated";
        case SweepResult::Flag::Degenerate: return "degenerate";
    }
    return "ok";
}

SweepResult sweep(const DefectRunner& run_cell, const std::vector<int>& N_list,
                  const SweepOptions& opts) {
    if (N_list.size() < 3) throw ArgumentError("sweep: need at least 3 grid points");
    for (std::size_t i = 1; i < N_list.size(); ++i) {
        if (N_list[i] <= N_list[i - 1]) throw ArgumentError("sweep: N_list must ascend");
    }

    SweepResult out;
    auto run_all = [&](int M) {
        out.reports.clear();
        for (int N : N_list) {
            EstimatorOptions cell;
            cell.M = M;
            cell.seed = Rng::substream(opts.seed, static_cast<std::uint64_t>(N)).next_u64();
            cell.threads = opts.threads;
            out.reports.push_back(run_cell(N, cell));
        }
    };

    auto all_significant = [&]() {
        for (const auto& r : out.reports) {
            if (!(std::abs(r.estimate) > 3.0 * r.std_error)) return false;
        }
        return true;
    };

    int M = opts.M;
    run_all(M);

    bool degenerate = true;
    for (const auto& r : out.reports) {
        if (r.estimate != 0.0 || r.std_error != 0.0) degenerate = false;
    }
    if (degenerate) {
        out.flag = SweepResult::Flag::Degenerate;
        return out;
    }

    while (!all_significant() && out.doublings_used < opts.doubling_cap) {
        M *= 2;
        ++out.doublings_used;
        run_all(M);
    }

    if (!all_significant()) {
        out.flag = SweepResult::Flag::NoiseDominated;
        return out;
    }

    std::vector<double> xs, ys;
    xs.reserve(out.reports.size());
    ys.reserve(out.reports.size());
    for (const auto& r : out.reports) {
        xs.push_back(std::log(static_cast<double>(r.N)));
        ys.push_back(std::log(std::abs(r.estimate)));
    }
    const LineFit fit = fit_line(xs, ys);
    out.slope = fit.slope;
    out.slope_ci_half = 1.96 * fit.slope_std_error;
    return out;
}

} // namespace pathmean
