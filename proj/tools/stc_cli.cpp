// Command-line front end: theorem checks, Jack probes, identity
// verification and parameter sweeps, with JSON/CSV reports.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stc/report.hpp"
#include "stc/spec_lang.hpp"
#include "stc/theorems.hpp"

namespace {

using stc::cplx;
using stc::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInput = 2;
constexpr int kExitUnreliable = 3;

struct CommonOpts {
    std::string f_spec = "identity";
    std::string g_spec = "identity";
    double mu = 1.0;
    double beta = 0.0;
    double gamma = 1.0;
    std::string delta = "0.5";
    double rho = 0.0;
    double alpha = 0.0;
    std::string grid = "64x512";
    double rmax = stc::kRMax;
    int order = stc::kDefaultOrder;
    std::uint64_t seed = 0;
    std::string json_path;
    std::string csv_path;
};

cplx parse_delta(const std::string& s) {
    std::istringstream in(s);
    double re = 0.0, im = 0.0;
    char comma = 0;
    if (!(in >> re)) throw stc::SpecInvalid("--delta: cannot parse '" + s + "'");
    if (in >> comma) {
        if (comma != ',' || !(in >> im)) throw stc::SpecInvalid("--delta: expected RE[,IM]");
    }
    return cplx{re, im};
}

stc::DiskGrid parse_grid(const std::string& s, double rmax) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw stc::SpecInvalid("--grid: expected RxA, e.g. 64x512");
    const int radii = std::stoi(s.substr(0, x));
    const int angles = std::stoi(s.substr(x + 1));
    return stc::DiskGrid::geometric(radii, angles, rmax);
}

std::vector<double> parse_radii(const std::string& s) {
    std::vector<double> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void emit(const ordered_json& report, const std::string& json_path) {
    const std::string text = report.dump(2) + "\n";
    if (json_path.empty()) {
        std::cout << text;
    } else {
        stc::write_atomic(json_path, text);
    }
}

ordered_json command_echo(const CommonOpts& o, int theorem) {
    ordered_json c;
    c["theorem"] = theorem;
    c["f"] = o.f_spec;
    c["g"] = o.g_spec;
    c["mu"] = o.mu;
    c["beta"] = o.beta;
    c["gamma"] = o.gamma;
    c["delta"] = stc::complex_to_json(parse_delta(o.delta));
    c["rho"] = o.rho;
    c["alpha"] = o.alpha;
    c["grid"] = o.grid;
    c["rmax"] = o.rmax;
    c["order"] = o.order;
    c["seed"] = o.seed;
    return c;
}

stc::TheoremParams make_params(const CommonOpts& o, int theorem, int n) {
    stc::TheoremParams tp;
    tp.id = theorem;
    tp.mu = o.mu;
    tp.beta = o.beta;
    tp.gamma = o.gamma;
    tp.delta = parse_delta(o.delta);
    tp.rho = o.rho;
    tp.alpha = o.alpha;
    tp.n = n;
    return tp;
}

std::vector<std::string> verdict_csv_fields(const stc::TheoremParams& tp, const stc::Verdict& v) {
    using stc::format_g17;
    return {std::to_string(tp.id),    format_g17(tp.mu),        format_g17(tp.beta),
            format_g17(tp.gamma),     format_g17(tp.delta.real()), format_g17(tp.delta.imag()),
            format_g17(tp.rho),       format_g17(tp.alpha),     std::to_string(tp.n),
            format_g17(v.hyp_sup),    format_g17(v.hyp_bound),  v.hyp_holds ? "true" : "false",
            format_g17(v.concl_sup),  format_g17(v.concl_bound), v.concl_holds ? "true" : "false",
            v.consistent ? "true" : "false", format_g17(v.reliability)};
}

const std::vector<std::string> kCsvHeader = {
    "theorem", "mu",       "beta",      "gamma",      "delta_re",    "delta_im",
    "rho",     "alpha",    "n",         "hyp_sup",    "hyp_bound",   "hyp_holds",
    "concl_sup", "concl_bound", "concl_holds", "consistent", "reliability"};

int verdict_exit_code(const stc::Verdict& v) {
    if (!v.reliable()) return kExitUnreliable;
    if (!v.consistent) return kExitInconsistent;
    return kExitOk;
}

int run_check(const CommonOpts& o, int theorem) {
    const auto t0 = std::chrono::steady_clock::now();
    const stc::NormalizedFunction f = stc::realize_function(stc::parse_spec(o.f_spec), o.order);
    const stc::NormalizedFunction g = stc::realize_function(stc::parse_spec(o.g_spec), o.order);
    const stc::FunctionPair pair(f, g);
    const stc::TheoremParams tp = make_params(o, theorem, pair.n);
    tp.validate();
    const stc::DiskGrid grid = parse_grid(o.grid, o.rmax);
    const stc::Verdict v = stc::check(tp, pair, grid);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    ordered_json report;
    report["schema_version"] = stc::kSchemaVersion;
    report["command"] = command_echo(o, theorem);
    report["command"]["n"] = pair.n;
    report["verdict"] = stc::verdict_to_json(v);
    report["reliability_summary"] = ordered_json{{"max_tail_bound", v.reliability},
                                                 {"reliable", v.reliable()}};
    report["timing_ms"] = ms;
    emit(report, o.json_path);
    if (!o.csv_path.empty()) {
        std::string csv = stc::csv_row(kCsvHeader);
        csv += stc::csv_row(verdict_csv_fields(tp, v));
        stc::write_atomic(o.csv_path, csv);
    }
    return verdict_exit_code(v);
}

int run_sweep(const CommonOpts& o, int theorem, const std::string& param, double from, double to,
              double step) {
    if (!(step > 0.0) || from > to) throw stc::SpecInvalid("sweep: need start <= end and step > 0");
    const auto t0 = std::chrono::steady_clock::now();
    const stc::NormalizedFunction f = stc::realize_function(stc::parse_spec(o.f_spec), o.order);
    const stc::NormalizedFunction g = stc::realize_function(stc::parse_spec(o.g_spec), o.order);
    const stc::FunctionPair pair(f, g);
    const stc::DiskGrid grid = parse_grid(o.grid, o.rmax);

    std::string csv = stc::csv_row(kCsvHeader);
    long rows = 0, inconsistent = 0, unreliable = 0;
    for (double x = from; x <= to + 1e-12; x += step) {
        CommonOpts oo = o;
        if (param == "mu") oo.mu = x;
        else if (param == "beta") oo.beta = x;
        else if (param == "gamma") oo.gamma = x;
        else if (param == "delta") oo.delta = stc::format_g17(x);
        else if (param == "rho") oo.rho = x;
        else if (param == "alpha") oo.alpha = x;
        else throw stc::SpecInvalid("sweep: unknown parameter '" + param + "'");
        const stc::TheoremParams tp = make_params(oo, theorem, pair.n);
        tp.validate();
        const stc::Verdict v = stc::check(tp, pair, grid);
        csv += stc::csv_row(verdict_csv_fields(tp, v));
        ++rows;
        if (!v.consistent) ++inconsistent;
        if (!v.reliable()) ++unreliable;
    }
    if (rows == 0) throw stc::SpecInvalid("sweep: empty range");
    if (!o.csv_path.empty()) stc::write_atomic(o.csv_path, csv);

    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    ordered_json report;
    report["schema_version"] = stc::kSchemaVersion;
    report["command"] = command_echo(o, theorem);
    report["command"]["n"] = pair.n;
    report["command"]["sweep"] = ordered_json{{"param", param}, {"from", from}, {"to", to}, {"step", step}};
    report["summary"] =
        ordered_json{{"rows", rows}, {"inconsistent", inconsistent}, {"unreliable", unreliable}};
    report["timing_ms"] = ms;
    emit(report, o.json_path);
    if (!o.csv_path.empty()) {
        // CSV already written above; nothing else to do.
    } else {
        std::cout << csv;
    }
    if (inconsistent > 0) return kExitInconsistent;
    if (unreliable > 0) return kExitUnreliable;
    return kExitOk;
}

int run_identity(const CommonOpts& o, const std::string& direction, double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const stc::NormalizedFunction f = stc::realize_function(stc::parse_spec(o.f_spec), o.order);
    const stc::NormalizedFunction g = stc::realize_function(stc::parse_spec(o.g_spec), o.order);
    const stc::FunctionPair pair(f, g);
    stc::Direction d;
    if (direction == "forward") d = stc::Direction::Forward;
    else if (direction == "reciprocal") d = stc::Direction::Reciprocal;
    else throw stc::SpecInvalid("--direction must be forward or reciprocal");
    const stc::AnalyticSeries res = stc::identity_residual(pair, o.mu, d);
    double max_coeff = 0.0;
    for (const cplx& c : res.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    ordered_json report;
    report["schema_version"] = stc::kSchemaVersion;
    report["command"] = ordered_json{{"f", o.f_spec}, {"g", o.g_spec},       {"mu", o.mu},
                                     {"direction", direction}, {"order", o.order}, {"tol", tol},
                                     {"seed", o.seed}};
    report["max_residual_coeff"] = max_coeff;
    report["pass"] = max_coeff < tol;
    report["timing_ms"] = ms;
    emit(report, o.json_path);
    return max_coeff < tol ? kExitOk : kExitInconsistent;
}

int run_jack(const CommonOpts& o, const std::string& w_spec, const std::string& radii_text, int m,
             double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const stc::AnalyticSeries w = stc::realize_wseries(stc::parse_spec(w_spec), o.order);
    const std::vector<double> radii = parse_radii(radii_text);
    if (radii.empty()) throw stc::SpecInvalid("--radii: empty list");
    const std::vector<stc::JackReport> reports = stc::jack_verify(w, radii, tol, m);
    bool ok = true;
    for (const stc::JackReport& r : reports)
        if (!r.degenerate && (!r.order_ok || r.imag_residual >= tol)) ok = false;
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    ordered_json report;
    report["schema_version"] = stc::kSchemaVersion;
    report["command"] = ordered_json{{"w", w_spec},       {"radii", radii_text}, {"m", m},
                                     {"tol", tol},        {"order", o.order},    {"seed", o.seed}};
    report["reports"] = stc::jack_to_json(reports);
    report["pass"] = ok;
    report["timing_ms"] = ms;
    emit(report, o.json_path);
    return ok ? kExitOk : kExitInconsistent;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_theorem_params) {
    cmd->add_option("--f", o.f_spec, "function spec for f");
    cmd->add_option("--g", o.g_spec, "function spec for g");
    cmd->add_option("--mu", o.mu, "order mu in (0,1]");
    cmd->add_option("--order", o.order, "series truncation order");
    cmd->add_option("--seed", o.seed, "campaign seed (echoed in reports)");
    cmd->add_option("--json", o.json_path, "write the JSON report to this path");
    if (with_theorem_params) {
        cmd->add_option("--beta", o.beta, "exponent beta >= 0");
        cmd->add_option("--gamma", o.gamma, "exponent gamma >= 0");
        cmd->add_option("--delta", o.delta, "complex delta as RE[,IM]");
        cmd->add_option("--rho", o.rho, "rho for theorems 3 and 5");
        cmd->add_option("--alpha", o.alpha, "alpha for theorem 2");
        cmd->add_option("--grid", o.grid, "grid as RxA, e.g. 64x512");
        cmd->add_option("--rmax", o.rmax, "outermost grid radius (<= 0.995)");
        cmd->add_option("--csv", o.csv_path, "write CSV rows to this path");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for strong close-to-convexity sufficient conditions"};
    app.require_subcommand(1);

    CommonOpts check_opts, sweep_opts, id_opts, jack_opts;
    int check_theorem = 1, sweep_theorem = 1;
    std::string sweep_param = "mu";
    double sweep_from = 0.0, sweep_to = 0.0, sweep_step = 0.0;
    std::string id_direction = "forward";
    double id_tol = 1e-9;
    std::string jack_w = "cmono(0.5, 1)";
    std::string jack_radii = "0.3,0.5,0.7,0.9";
    int jack_m = 512;
    double jack_tol = 1e-6;

    CLI::App* check = app.add_subcommand("check", "run one theorem check over a disk grid");
    check->add_option("--theorem", check_theorem, "theorem id 1..5")->required();
    add_common(check, check_opts, true);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter and emit CSV rows");
    sweep->add_option("--theorem", sweep_theorem, "theorem id 1..5")->required();
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--param", sweep_param, "parameter to sweep (mu|beta|gamma|delta|rho|alpha)")
        ->required();
    sweep->add_option("--from", sweep_from)->required();
    sweep->add_option("--to", sweep_to)->required();
    sweep->add_option("--step", sweep_step)->required();

    CLI::App* identity = app.add_subcommand("identity", "verify the proof identity for a pair");
    add_common(identity, id_opts, false);
    identity->add_option("--direction", id_direction, "forward|reciprocal");
    identity->add_option("--tol", id_tol, "max residual coefficient tolerance");

    CLI::App* jack = app.add_subcommand("jack", "probe Jack's lemma on circles");
    add_common(jack, jack_opts, false);
    jack->add_option("--w", jack_w, "w-type spec (cmono or wpoly)");
    jack->add_option("--radii", jack_radii, "comma-separated radii in (0, 0.995]");
    jack->add_option("--m", jack_m, "coarse angular sample count");
    jack->add_option("--tol", jack_tol, "reality/order tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (check->parsed()) return run_check(check_opts, check_theorem);
        if (sweep->parsed())
            return run_sweep(sweep_opts, sweep_theorem, sweep_param, sweep_from, sweep_to, sweep_step);
        if (identity->parsed()) return run_identity(id_opts, id_direction, id_tol);
        if (jack->parsed()) return run_jack(jack_opts, jack_w, jack_radii, jack_m, jack_tol);
    } catch (const stc::ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << " (expected "
                  << e.expected << ")\n";
        return kExitInput;
    } catch (const stc::EvaluationUnreliable& e) {
        std::cerr << "unreliable evaluation: " << e.what() << "\n";
        return kExitUnreliable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
