#include "camel/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace camel {

namespace {

using nlohmann::json;

double positive_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    double v = j.get<double>();
    if (v <= 0) throw SchemaError(path, "must be > 0");
    return v;
}

int positive_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    int v = j.get<int>();
    if (v <= 0) throw SchemaError(path, "must be >= 1");
    return v;
}

std::vector<double> time_field(const json& j, const std::string& path, int n_qubits) {
    if (j.is_number()) return {positive_number(j, path)};
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != n_qubits)
            throw SchemaError(path, "array must have one entry per qubit (" +
                                        std::to_string(n_qubits) + ")");
        std::vector<double> v;
        for (size_t i = 0; i < j.size(); ++i)
            v.push_back(positive_number(j[i], path + "[" + std::to_string(i) + "]"));
        return v;
    }
    throw SchemaError(path, "expected a number or per-qubit array");
}

double rate_field(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    double v = j.get<double>();
    if (v < 0 || v >= 1) throw SchemaError(path, "must be in [0, 1)");
    return v;
}

} // namespace

ChipConfig load_chip_config(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("$", "expected a JSON object");

    ChipConfig cfg;
    if (!j.contains("M") || !j.contains("N"))
        throw SchemaError("$", "required fields M and N are missing");
    cfg.M = positive_int(j["M"], "$.M");
    cfg.N = positive_int(j["N"], "$.N");

    if (j.contains("window")) {
        const json& w = j["window"];
        if (!w.is_object() || !w.contains("m") || !w.contains("n"))
            throw SchemaError("$.window", "expected {\"m\": int, \"n\": int}");
        if (!w["m"].is_number_integer() || !w["n"].is_number_integer())
            throw SchemaError("$.window", "m and n must be integers");
        cfg.m = w["m"].get<int>();
        cfg.n = w["n"].get<int>();
        if ((cfg.m == 0) != (cfg.n == 0))
            throw SchemaError("$.window", "m and n must both be 0 (windows off) or both >= 1");
        if (cfg.m < 0 || cfg.n < 0 || cfg.m > cfg.M || cfg.n > cfg.N)
            throw SchemaError("$.window", "window must satisfy 0 <= m <= M, 0 <= n <= N");
    } else {
        cfg.m = std::min(2, cfg.M);
        cfg.n = std::min(2, cfg.N);
    }

    if (j.contains("window_far_distance"))
        cfg.window_far_distance = positive_int(j["window_far_distance"], "$.window_far_distance");

    if (j.contains("durations")) {
        const json& d = j["durations"];
        if (!d.is_object()) throw SchemaError("$.durations", "expected an object");
        if (d.contains("t_1q")) cfg.durations.t_1q = positive_number(d["t_1q"], "$.durations.t_1q");
        if (d.contains("t_cz")) cfg.durations.t_cz = positive_number(d["t_cz"], "$.durations.t_cz");
        if (d.contains("t_swap"))
            cfg.durations.t_swap = positive_number(d["t_swap"], "$.durations.t_swap");
        if (d.contains("t_measure"))
            cfg.durations.t_measure = positive_number(d["t_measure"], "$.durations.t_measure");
    }

    if (j.contains("noise")) {
        const json& n = j["noise"];
        if (!n.is_object()) throw SchemaError("$.noise", "expected an object");
        int nq = cfg.M * cfg.N;
        if (n.contains("T1_ns")) cfg.noise.t1_ns = time_field(n["T1_ns"], "$.noise.T1_ns", nq);
        if (n.contains("T2_ns")) cfg.noise.t2_ns = time_field(n["T2_ns"], "$.noise.T2_ns", nq);
        if (n.contains("g_xtalk_rad_per_ns"))
            cfg.noise.g_xtalk_rad_per_ns =
                positive_number(n["g_xtalk_rad_per_ns"], "$.noise.g_xtalk_rad_per_ns");
        if (n.contains("eps_1q")) cfg.noise.eps_1q = rate_field(n["eps_1q"], "$.noise.eps_1q");
        if (n.contains("eps_cz")) cfg.noise.eps_cz = rate_field(n["eps_cz"], "$.noise.eps_cz");
        if (n.contains("eps_readout"))
            cfg.noise.eps_readout = rate_field(n["eps_readout"], "$.noise.eps_readout");
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer() || j["seed"].get<std::int64_t>() < 0)
            throw SchemaError("$.seed", "expected a non-negative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    return cfg;
}

ChipConfig load_chip_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("$", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_chip_config(ss.str());
}

} // namespace camel
