// File formats. Instance: {"k": int, "intervals": [{"x": "p/q", "len": "p/q",
// "color": int}, ...]} with "len" optional (default "1"). Result/realization:
// {"q_star": "p/q", "reps": ["p/q", ...], "method": "..."} where reps follow
// the order of the intervals in the instance file. No floats anywhere.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcsi/errors.hpp"
#include "mcsi/instance.hpp"

namespace mcsi {

struct raw_instance {
    std::vector<colored_interval> intervals;
    int k = 0;
};

inline rational json_rational(const nlohmann::json& j, const char* field) {
    if (j.is_number_integer()) return rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail(errc::malformed_input, std::string(field) + " must be a rational string");
    auto r = try_parse_rational(j.get<std::string>());
    if (!r) fail(errc::malformed_input, std::string(field) + ": bad rational '" + j.get<std::string>() + "'");
    return *r;
}

inline raw_instance parse_instance_json(const nlohmann::json& j) {
    raw_instance raw;
    if (!j.is_object() || !j.contains("k") || !j.contains("intervals"))
        fail(errc::malformed_input, "instance file needs \"k\" and \"intervals\"");
    if (!j["k"].is_number_integer()) fail(errc::malformed_input, "\"k\" must be an integer");
    raw.k = j["k"].get<int>();
    if (!j["intervals"].is_array()) fail(errc::malformed_input, "\"intervals\" must be an array");
    for (const auto& e : j["intervals"]) {
        if (!e.is_object() || !e.contains("x") || !e.contains("color"))
            fail(errc::malformed_input, "interval needs \"x\" and \"color\"");
        colored_interval iv;
        iv.left = json_rational(e["x"], "x");
        iv.length = e.contains("len") ? json_rational(e["len"], "len") : rational(1);
        if (!e["color"].is_number_integer()) fail(errc::malformed_input, "\"color\" must be an integer");
        iv.color = e["color"].get<int>();
        raw.intervals.push_back(iv);
    }
    return raw;
}

inline raw_instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::malformed_input, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::malformed_input, std::string("bad JSON: ") + e.what());
    }
    return parse_instance_json(j);
}

inline nlohmann::json instance_to_json(const raw_instance& raw) {
    nlohmann::json j;
    j["k"] = raw.k;
    j["intervals"] = nlohmann::json::array();
    for (const auto& iv : raw.intervals) {
        nlohmann::json e;
        e["x"] = rat_str(iv.left);
        if (iv.length != 1) e["len"] = rat_str(iv.length);
        e["color"] = iv.color;
        j["intervals"].push_back(e);
    }
    return j;
}

// Result serialization in input-file interval order and original (untranslated)
// coordinates.
inline nlohmann::json result_to_json(const instance& inst, const solve_result& res) {
    std::vector<std::string> reps(inst.n());
    for (int i = 0; i < inst.n(); ++i)
        reps[inst.input_index[i]] = rat_str(res.real.reps[i] + inst.translation);
    nlohmann::json j;
    j["q_star"] = rat_str(res.q_star);
    j["reps"] = reps;
    j["method"] = method_name(res.method);
    return j;
}

struct raw_realization {
    rational q_star;
    std::vector<rational> reps;  // input-file order, original coordinates
    bool has_q = false;
};

inline raw_realization load_realization_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::malformed_input, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::malformed_input, std::string("bad JSON: ") + e.what());
    }
    raw_realization r;
    if (!j.is_object() || !j.contains("reps") || !j["reps"].is_array())
        fail(errc::malformed_input, "realization file needs \"reps\"");
    if (j.contains("q_star")) {
        r.q_star = json_rational(j["q_star"], "q_star");
        r.has_q = true;
    }
    for (const auto& e : j["reps"]) r.reps.push_back(json_rational(e, "rep"));
    return r;
}

// Maps a realization given in input order / original coordinates onto the
// validated instance's (sorted, normalized) interval order.
inline realization align_realization(const instance& inst, const std::vector<rational>& input_order_reps) {
    if (static_cast<int>(input_order_reps.size()) != inst.n())
        fail(errc::malformed_input, "realization has wrong number of representatives");
    realization r;
    r.reps.resize(inst.n());
    for (int i = 0; i < inst.n(); ++i) r.reps[i] = input_order_reps[inst.input_index[i]] - inst.translation;
    return r;
}

inline void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) fail(errc::malformed_input, "cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace mcsi
