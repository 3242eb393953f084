#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "stc/jack.hpp"
#include "stc/theorems.hpp"

namespace stc {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline ordered_json complex_to_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

inline ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["hyp_sup"] = v.hyp_sup;
    j["hyp_bound"] = v.hyp_bound;
    j["hyp_holds"] = v.hyp_holds;
    ordered_json undef = ordered_json::array();
    for (cplx z : v.hyp_undefined) undef.push_back(complex_to_json(z));
    j["hyp_undefined"] = undef;
    j["undefined_count"] = v.undefined_count;
    j["concl_sup"] = v.concl_sup;
    j["concl_bound"] = v.concl_bound;
    j["concl_holds"] = v.concl_holds;
    j["consistent"] = v.consistent;
    j["witness_hyp"] = complex_to_json(v.witness_hyp);
    j["witness_concl"] = complex_to_json(v.witness_concl);
    j["reliability"] = v.reliability;
    j["reliable"] = v.reliable();
    j["w_vanish"] = v.w_vanish;
    return j;
}

inline ordered_json jack_to_json(const std::vector<JackReport>& reports) {
    ordered_json arr = ordered_json::array();
    for (const JackReport& r : reports) {
        ordered_json j;
        j["r"] = r.r;
        j["degenerate"] = r.degenerate;
        if (!r.degenerate) {
            j["z0"] = complex_to_json(r.z0);
            j["wmax"] = r.wmax;
            j["quotient"] = complex_to_json(r.quotient);
            j["k_est"] = r.k_est;
            j["imag_residual"] = r.imag_residual;
            j["order_ok"] = r.order_ok;
            j["flat"] = r.flat;
        }
        arr.push_back(j);
    }
    return arr;
}

/// Atomic write: temp file in the target directory, then rename.
inline void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    fs::rename(tmp, target);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

inline std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace stc
