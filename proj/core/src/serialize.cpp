#include "pathmean/serialize.hpp"

#include <cstdio>

#include "pathmean/errors.hpp"

namespace pathmean {

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string digest_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

nlohmann::json ctx_json(const LieContext& ctx) {
    return {{"family", ctx.family_name()}, {"n", ctx.family_n()}};
}

ContextPtr ctx_from_json(const nlohmann::json& j) {
    return std::make_shared<LieContext>(
        LieContext::make(j.at("family").get<std::string>(), j.at("n").get<int>()));
}

} // namespace

nlohmann::json to_json(const StepPath& f) {
    nlohmann::json j;
    j["ctx"] = ctx_json(f.ctx());
    j["N"] = f.blocks();
    j["data"] = std::vector<double>(f.data().data(), f.data().data() + f.data().size());
    return j;
}

nlohmann::json to_json(const GroupPath& g) {
    const int m = g.ctx().matrix_size();
    nlohmann::json j;
    j["ctx"] = ctx_json(g.ctx());
    j["K"] = g.grid();
    j["class"] = path_class_name(g.path_class());
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>((g.grid() + 1) * m * m));
    for (int k = 0; k <= g.grid(); ++k) {
        const Eigen::MatrixXd& node = g.node(k);
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) data.push_back(node(r, c));
        }
    }
    j["data"] = std::move(data);
    return j;
}

StepPath step_path_from_json(const nlohmann::json& j) {
    ContextPtr ctx = ctx_from_json(j.at("ctx"));
    const auto data = j.at("data").get<std::vector<double>>();
    const int N = j.at("N").get<int>();
    if (static_cast<int>(data.size()) != N * ctx->algebra_dim()) {
        throw ArgumentError("step_path_from_json: data size does not match N");
    }
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(data.data(),
                                                          static_cast<Eigen::Index>(data.size()));
    return StepPath(std::move(ctx), std::move(v));
}

GroupPath group_path_from_json(const nlohmann::json& j) {
    ContextPtr ctx = ctx_from_json(j.at("ctx"));
    const int K = j.at("K").get<int>();
    const int m = ctx->matrix_size();
    const auto data = j.at("data").get<std::vector<double>>();
    if (static_cast<int>(data.size()) != (K + 1) * m * m) {
        throw ArgumentError("group_path_from_json: data size does not match K");
    }
    std::vector<Eigen::MatrixXd> nodes(static_cast<std::size_t>(K) + 1);
    std::size_t at = 0;
    for (int k = 0; k <= K; ++k) {
        Eigen::MatrixXd node(m, m);
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) node(r, c) = data[at++];
        }
        nodes[static_cast<std::size_t>(k)] = std::move(node);
    }
    return GroupPath(std::move(ctx), std::move(nodes),
                     path_class_from_name(j.at("class").get<std::string>()));
}

nlohmann::json to_json(const DefectReport& r, bool include_timing) {
    nlohmann::json j;
    j["experiment"] = r.experiment;
    j["group"] = r.group;
    j["N"] = r.N;
    j["R"] = r.R;
    j["alpha"] = r.alpha;
    j["M"] = r.M;
    j["seed"] = r.seed;
    j["estimate"] = r.estimate;
    j["std_error"] = r.std_error;
    j["schedule_warning"] = r.schedule_warning;
    if (include_timing) j["wall_ms"] = r.wall_ms;
    return j;
}

nlohmann::json to_json(const SweepResult& s, bool include_timing) {
    nlohmann::json j;
    j["flag"] = sweep_flag_name(s.flag);
    j["doublings_used"] = s.doublings_used;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r, include_timing));
    j["reports"] = std::move(reports);
    if (s.slope) {
        j["slope"] = *s.slope;
        j["slope_ci_half"] = *s.slope_ci_half;
    } else {
        j["slope"] = nullptr;
        j["slope_ci_half"] = nullptr;
    }
    return j;
}

std::string defect_csv_header(bool include_timing) {
    std::string h = "experiment,group,N,R,alpha,M,seed,estimate,std_error";
    if (include_timing) h += ",wall_ms";
    return h + "\n";
}

std::string defect_csv_row(const DefectReport& r, bool include_timing) {
    std::string row = r.experiment + "," + r.group + "," + std::to_string(r.N) + "," +
                      format_double(r.R) + "," + format_double(r.alpha) + "," +
                      std::to_string(r.M) + "," + std::to_string(r.seed) + "," +
                      format_double(r.estimate) + "," + format_double(r.std_error);
    if (include_timing) row += "," + format_double(r.wall_ms);
    return row + "\n";
}

std::string geometry_csv_header() {
    return "n,s,exact,mc_estimate,mc_se,M,seed\n";
}

std::string geometry_csv_row(int n, double s, double exact, const McEstimate& mc, int M,
                             std::uint64_t seed) {
    return std::to_string(n) + "," + format_double(s) + "," + format_double(exact) + "," +
           format_double(mc.estimate) + "," + format_double(mc.std_error) + "," +
           std::to_string(M) + "," + std::to_string(seed) + "\n";
}

} // namespace pathmean
