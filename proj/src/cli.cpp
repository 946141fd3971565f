// Copyright 2026 the hyperlap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperlap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hyperlap/constants.hpp"
#include "hyperlap/counting.hpp"
#include "hyperlap/errors.hpp"
#include "hyperlap/io.hpp"
#include "hyperlap/lt_verify.hpp"
#include "hyperlap/sl_family.hpp"

namespace hyperlap::cli {
namespace {

using ojson = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FlagDef {
    const char* name;
    const char* help;
    bool optional_value = false;
};

const std::vector<FlagDef> kSolverFlags = {
    {"cutoff", "eigenvalue cutoff (default 1000)"},
    {"ell-max", "first excluded transverse mode, or 'auto'"},
    {"n", "Chebyshev degree (default 400)"},
    {"alpha", "left end in t = ln y (default -1)"},
    {"beta", "right end in t = ln y (default 1)"},
    {"x-length", "length X of the transverse box (default pi)"},
    {"tol", "relative certification tolerance (default 1e-10)"},
    {"margin", "solve to cutoff * (1 + margin) (default 0.05)"},
    {"fd-points", "finite-difference oracle grid (default 4000)"},
};

const std::map<std::string, std::vector<FlagDef>>& command_table() {
    static const std::map<std::string, std::vector<FlagDef>> table = [] {
        std::map<std::string, std::vector<FlagDef>> t;
        const FlagDef json{"json", "write JSON (to PATH, or stdout without one)", true};
        const FlagDef csv{"csv", "write CSV to PATH"};
        const FlagDef svg{"svg", "write SVG to PATH"};
        const FlagDef r11{"r11", "excess factor R_{1,1} (default 1.456)"};
        t["constants"] = {{"gamma", "Riesz-mean order (default 1)"}, {"dim", "dimension (default 2)"}, r11, json};
        t["ratio"] = {{"dmin", "smallest dimension (default 2)"}, {"dmax", "largest dimension (default 20)"}, r11,
                      csv, svg, json};
        t["eig"] = {{"ell", "transverse mode (default 0)"},
                    {"n", "Chebyshev degree (default 400)"},
                    {"alpha", "left end (default -1)"},
                    {"beta", "right end (default 1)"},
                    {"x-length", "transverse box length (default pi)"},
                    {"cutoff", "largest eigenvalue reported (default 1000)"},
                    {"tol", "certify against degree 2n at this tolerance"},
                    csv,
                    json,
                    {"dump-matrix", "write the collocation matrix as CSV"}};
        t["sweep"] = kSolverFlags;
        t["sweep"].insert(t["sweep"].end(), {csv, json});
        t["polya"] = kSolverFlags;
        t["polya"].insert(t["polya"].end(),
                          {{"lam-max", "largest Lambda checked (default cutoff)"},
                           {"grid", "uniform grid points (default 10000)"},
                           {"bound", "polya | counting | product_counting | product_riesz (default polya)"},
                           {"gamma", "Riesz order for product_riesz (default 0.5)"},
                           {"bound-scale", "multiply the bound by this factor (default 1)"},
                           r11,
                           csv,
                           svg,
                           json});
        t["ltcheck"] = {{"gamma", "Riesz-mean order (default 1)"},
                        {"lambda", "potential height (default 100)"},
                        {"x-length", "transverse box length (default pi)"},
                        {"a", "lower y edge (default 1/e)"},
                        {"b", "upper y edge (default e)"},
                        {"n", "Chebyshev degree (default 400)"},
                        {"tol", "certification tolerance (default 1e-10)"},
                        r11,
                        json};
        t["sobolev"] = {{"profile", "sine-cos2 | sine2-sine | poly | gauss-bump | skewed"},
                        {"width", "gauss-bump width (default 0.05)"},
                        {"scale", "multiply the trial function by this factor (default 1)"},
                        {"x-length", "transverse box length (default pi)"},
                        {"a", "lower y edge (default 1/e)"},
                        {"b", "upper y edge (default e)"},
                        {"k", "override the constant K"},
                        r11,
                        json};
        return t;
    }();
    return table;
}

class Params {
public:
    explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

    bool has(const std::string& key) const { return p_.count(key) != 0; }

    double real(const std::string& key, double fallback) const {
        auto it = p_.find(key);
        if (it == p_.end()) return fallback;
        const std::string& s = it->second;
        double v = 0.0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
            throw InputError("--" + key + " expects a real number, got '" + s + "'");
        }
        return v;
    }

    int integer(const std::string& key, int fallback) const {
        auto it = p_.find(key);
        if (it == p_.end()) return fallback;
        const std::string& s = it->second;
        int v = 0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw InputError("--" + key + " expects an integer, got '" + s + "'");
        }
        return v;
    }

    std::string text(const std::string& key, const std::string& fallback) const {
        auto it = p_.find(key);
        return it == p_.end() ? fallback : it->second;
    }

private:
    const std::map<std::string, std::string>& p_;
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "' for writing");
    writer(f);
    if (!f) throw std::runtime_error("failed writing '" + path + "'");
}

// JSON goes to the given path, or to stdout when --json had no value.
void emit_json(const Params& p, std::ostream& out, const ojson& j) {
    if (!p.has("json")) return;
    const std::string path = p.text("json", "");
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_file(path, [&](std::ostream& f) { f << j.dump(2) << '\n'; });
    }
}

Interval interval_from(const Params& p) { return {p.real("alpha", -1.0), p.real("beta", 1.0)}; }

double transverse_scale_from(const Params& p) {
    const double x = p.real("x-length", std::numbers::pi);
    if (!(x > 0.0)) throw InputError("--x-length must be positive");
    return (std::numbers::pi / x) * (std::numbers::pi / x);
}

SweepOptions sweep_options_from(const Params& p) {
    SweepOptions o;
    o.certify.n = p.integer("n", 400);
    o.certify.tol = p.real("tol", 1e-10);
    o.certify.fd_points = p.integer("fd-points", 4000);
    o.margin = p.real("margin", 0.05);
    o.transverse_scale = transverse_scale_from(p);
    const std::string ell_max = p.text("ell-max", "auto");
    if (ell_max != "auto") o.ell_max = p.integer("ell-max", 0);
    return o;
}

int cmd_constants(const Params& p, std::ostream& out) {
    const constants::ConstantQuery q{p.real("gamma", 1.0), p.integer("dim", 2)};
    const double r11 = p.real("r11", constants::kR11);
    ojson j;
    j["gamma"] = q.gamma;
    j["dim"] = q.dim;
    j["classical"] = constants::lt_classical(q).value;
    if (q.gamma >= 0.5) j["theorem"] = constants::lt_theorem(q, r11).value;
    if (q.dim >= 2) {
        j["k_one_d"] = constants::k_one_d(q.dim, r11).value;
        j["counting_constant"] = constants::polya_constant(q.dim, r11).value;
        j["product_counting_constant"] = constants::product_counting_constant(q.dim).value;
        j["ratio"] = constants::constant_ratio(q.dim, r11);
    }
    const std::string path = p.text("json", "");
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_file(path, [&](std::ostream& f) { f << j.dump(2) << '\n'; });
        out << "constants: gamma=" << q.gamma << " dim=" << q.dim << " classical=" << format_real(j["classical"])
            << '\n';
    }
    return kOk;
}

int cmd_ratio(const Params& p, std::ostream& out) {
    const auto rows = figure1_data(p.integer("dmin", 2), p.integer("dmax", 20), p.real("r11", constants::kR11));
    bool all_above = true;
    auto min_row = rows.front();
    for (const auto& r : rows) {
        all_above = all_above && r.ratio > 1.0;
        if (r.ratio < min_row.ratio) min_row = r;
    }
    if (p.has("csv")) write_file(p.text("csv", ""), [&](std::ostream& f) { write_figure1_csv(rows, f); });
    if (p.has("svg")) {
        PlotSpec plot{"Ratio of product-domain to general counting constants", "d", "ratio", {}};
        PlotSeries s{"ratio", "black", {}};
        for (const auto& r : rows) s.points.emplace_back(r.dim, r.ratio);
        plot.series.push_back(std::move(s));
        write_file(p.text("svg", ""), [&](std::ostream& f) { write_svg(plot, f); });
    }
    ojson j = ojson::array();
    for (const auto& r : rows) j.push_back({{"d", r.dim}, {"ratio", r.ratio}});
    emit_json(p, out, j);
    out << "ratio: " << rows.size() << " dimensions, min " << format_real(min_row.ratio) << " at d=" << min_row.dim
        << (all_above ? ", all > 1" : ", NOT all > 1") << '\n';
    return all_above ? kOk : kViolated;
}

int cmd_eig(const Params& p, std::ostream& out) {
    SLProblem prob{interval_from(p), {}};
    prob.pot.ell = p.integer("ell", 0);
    prob.pot.transverse_scale = transverse_scale_from(p);
    if (prob.pot.ell < 0) throw InputError("--ell must be >= 0");
    const int n = p.integer("n", 400);
    const double cutoff = p.real("cutoff", 1000.0);

    if (p.has("dump-matrix")) {
        const ChebOperator op = assemble_cheb(prob.interval, prob.pot, n);
        write_file(p.text("dump-matrix", ""), [&](std::ostream& f) {
            for (std::size_t j = 0; j < op.matrix.cols(); ++j) f << (j ? "," : "") << "c" << j;
            f << '\n';
            for (std::size_t i = 0; i < op.matrix.rows(); ++i) {
                for (std::size_t j = 0; j < op.matrix.cols(); ++j) f << (j ? "," : "") << format_real(op.matrix(i, j));
                f << '\n';
            }
        });
    }

    Spectrum s;
    if (p.has("tol")) {
        CertifyOptions c;
        c.n = n;
        c.tol = p.real("tol", 1e-10);
        s = solve_certified(prob, cutoff, c);
    } else {
        s = solve_problem(prob, n, cutoff);
    }
    if (p.has("csv")) {
        write_file(p.text("csv", ""), [&](std::ostream& f) {
            f << "k,nu\n";
            for (std::size_t k = 0; k < s.values.size(); ++k) f << k + 1 << ',' << format_real(s.values[k]) << '\n';
        });
    }
    ojson j;
    j["ell"] = prob.pot.ell;
    j["n"] = n;
    j["cutoff"] = cutoff;
    j["certified"] = p.has("tol");
    j["values"] = s.values;
    emit_json(p, out, j);
    out << "eig: ell=" << prob.pot.ell << " n=" << n << ", " << s.values.size() << " eigenvalues <= "
        << format_real(cutoff);
    if (!s.values.empty()) out << ", lowest " << format_real(s.values.front());
    out << '\n';
    return kOk;
}

int cmd_sweep(const Params& p, std::ostream& out) {
    const double cutoff = p.real("cutoff", 1000.0);
    const EigenTable table = sweep(interval_from(p), cutoff, sweep_options_from(p));
    if (p.has("csv")) write_file(p.text("csv", ""), [&](std::ostream& f) { write_csv(table, f); });
    ojson j;
    j["cutoff"] = table.cutoff;
    j["ell_max"] = table.ell_max;
    j["entries"] = table.entries.size();
    j["resolution"] = table.resolution;
    j["tolerance"] = table.tolerance;
    emit_json(p, out, j);
    out << "sweep: cutoff " << format_real(cutoff) << ", ell_max " << table.ell_max << ", " << table.entries.size()
        << " certified eigenvalues\n";
    return kOk;
}

int cmd_polya(const Params& p, std::ostream& out) {
    // Everything is parsed up front so bad input fails before the sweep.
    const double cutoff = p.real("cutoff", 1000.0);
    const Interval interval = interval_from(p);
    const SweepOptions options = sweep_options_from(p);
    const double x_length = p.real("x-length", std::numbers::pi);
    BoundSpec bound;
    bound.kind = parse_bound_kind(p.text("bound", "polya"));
    bound.gamma = p.real("gamma", 0.5);
    bound.scale = p.real("bound-scale", 1.0);
    bound.r11 = p.real("r11", constants::kR11);
    if (bound.kind == BoundKind::product_riesz) product_riesz_rhs(1.0, bound.gamma, 2, 1.0);
    const double lam_max = p.real("lam-max", cutoff);
    const int grid = p.integer("grid", 10000);
    if (!(lam_max > 0.0) || lam_max > cutoff) throw InputError("--lam-max must lie in (0, cutoff]");
    if (grid < 1) throw InputError("--grid must be >= 1");

    const EigenTable table = sweep(interval, cutoff, options);
    const double volume = x_length * (std::exp(-interval.alpha) - std::exp(-interval.beta));
    const auto cf = CountingFunction::from_table(table, volume, 2);
    const BoundReport report = verify_bound(cf, bound, lam_max, grid);

    if (p.has("csv") || p.has("svg")) {
        const auto rows = figure2_data(cf, lam_max, grid);
        if (p.has("csv")) write_file(p.text("csv", ""), [&](std::ostream& f) { write_figure2_csv(rows, f); });
        if (p.has("svg")) {
            PlotSpec plot{"Counting function and semiclassical line", "Lambda", "N(Lambda)", {}};
            PlotSeries n_series{"N(Lambda)", "black", {}};
            PlotSeries line{"L0 Lambda |Omega|", "red", {}};
            for (const auto& r : rows) {
                n_series.points.emplace_back(r.lambda, static_cast<double>(r.count));
                line.points.emplace_back(r.lambda, r.bound);
            }
            plot.series.push_back(std::move(n_series));
            plot.series.push_back(std::move(line));
            write_file(p.text("svg", ""), [&](std::ostream& f) { write_svg(plot, f); });
        }
    }
    if (p.has("json")) {
        std::ostringstream s;
        write_json(report, s);
        const std::string path = p.text("json", "");
        if (path.empty()) {
            out << s.str();
        } else {
            write_file(path, [&](std::ostream& f) { f << s.str(); });
        }
    }
    out << "polya: bound " << to_string(bound.kind) << " on (0, " << format_real(lam_max) << "], "
        << count(cf, lam_max) << " eigenvalues below, ell_max " << table.ell_max << ", min margin "
        << format_real(report.min_margin) << " at Lambda=" << format_real(report.argmin_lambda)
        << (report.violated ? ", VIOLATED" : ", holds") << '\n';
    return report.violated ? kViolated : kOk;
}

int cmd_ltcheck(const Params& p, std::ostream& out) {
    BoxPotential pot;
    pot.domain = {p.real("x-length", std::numbers::pi), p.real("a", std::exp(-1.0)), p.real("b", std::exp(1.0))};
    pot.height = p.real("lambda", 100.0);
    SweepOptions o;
    o.certify.n = p.integer("n", 400);
    o.certify.tol = p.real("tol", 1e-10);
    const double gamma = p.real("gamma", 1.0);
    const double r11 = p.real("r11", constants::kR11);
    pot.domain.validate();
    potential_integral(pot, gamma, 2);  // rejects gamma < 1/2 and non-positive heights
    constants::lt_theorem({gamma, 2}, r11);
    const LtReport r = lt_check(pot, gamma, o, r11);
    if (p.has("json")) {
        std::ostringstream s;
        write_json(r, s);
        const std::string path = p.text("json", "");
        if (path.empty()) {
            out << s.str();
        } else {
            write_file(path, [&](std::ostream& f) { f << s.str(); });
        }
    }
    out << "ltcheck: gamma=" << r.gamma << " Lambda=" << format_real(r.lambda) << " lhs=" << format_real(r.lhs)
        << " rhs=" << format_real(r.rhs) << " ratio=" << format_real(r.ratio) << (r.passed ? " holds" : " VIOLATED")
        << '\n';
    return r.passed ? kOk : kViolated;
}

int cmd_sobolev(const Params& p, std::ostream& out) {
    const ProductDomain dom{p.real("x-length", std::numbers::pi), p.real("a", std::exp(-1.0)),
                            p.real("b", std::exp(1.0))};
    SobolevTrialFunction u = trial_function(p.text("profile", "sine-cos2"), dom, p.real("width", 0.05));
    const double c = p.real("scale", 1.0);
    if (c != 1.0) {
        auto f = u.x_profile.value;
        u.x_profile.value = [f, c](double x) { return c * f(x); };
        if (auto df = u.x_profile.derivative) u.x_profile.derivative = [df, c](double x) { return c * df(x); };
    }
    const double k = p.real("k", constants::k_one_d(2, p.real("r11", constants::kR11)).value);
    const SobolevReport r = sobolev_check(u, dom, k);
    ojson j;
    j["profile"] = p.text("profile", "sine-cos2");
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["margin"] = r.margin;
    j["nodes"] = r.nodes;
    j["passed"] = r.passed;
    emit_json(p, out, j);
    out << "sobolev: lhs=" << format_real(r.lhs) << " rhs=" << format_real(r.rhs) << " margin="
        << format_real(r.margin) << (r.passed ? " holds" : " VIOLATED") << '\n';
    return r.passed ? kOk : kViolated;
}

std::string describe(const std::string& command) {
    static const std::map<std::string, std::string> text = {
        {"constants", "evaluate the semiclassical, Lieb-Thirring, Sobolev and counting constants"},
        {"ratio", "ratio of product-domain to general counting constants over a range of d"},
        {"eig", "eigenvalues of one transverse mode"},
        {"sweep", "certified eigenvalue table over all transverse modes below a cutoff"},
        {"polya", "check a counting or Riesz-mean bound against the swept spectrum"},
        {"ltcheck", "Lieb-Thirring check for a box potential on a product domain"},
        {"sobolev", "interpolation-inequality check for a named trial function"},
    };
    return text.at(command);
}

std::string config_value(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number()) return format_real(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_null()) return "";
    throw std::invalid_argument("config values must be scalars");
}

}  // namespace

std::vector<std::string> known_flags(const std::string& command) {
    std::vector<std::string> names;
    const auto& table = command_table();
    if (auto it = table.find(command); it != table.end()) {
        for (const auto& f : it->second) names.emplace_back(f.name);
    }
    return names;
}

void merge_config_file(RunConfig& config, const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file '" + path + "'");
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
    const auto flags = known_flags(config.command);
    for (const auto& [key, value] : j.items()) {
        if (std::find(flags.begin(), flags.end(), key) == flags.end()) {
            throw std::invalid_argument("unknown config key '" + key + "' for command '" + config.command + "'");
        }
        config.parameters.try_emplace(key, config_value(value));
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto flags = known_flags(config.command);
    if (flags.empty()) {
        err << "unknown command '" << config.command << "'\n";
        return kInvalidInput;
    }
    for (const auto& [key, value] : config.parameters) {
        if (std::find(flags.begin(), flags.end(), key) == flags.end()) {
            err << "unknown parameter '" << key << "' for command '" << config.command << "'\n";
            return kInvalidInput;
        }
    }
    const Params p(config.parameters);
    try {
        if (config.command == "constants") return cmd_constants(p, out);
        if (config.command == "ratio") return cmd_ratio(p, out);
        if (config.command == "eig") return cmd_eig(p, out);
        if (config.command == "sweep") return cmd_sweep(p, out);
        if (config.command == "polya") return cmd_polya(p, out);
        if (config.command == "ltcheck") return cmd_ltcheck(p, out);
        if (config.command == "sobolev") return cmd_sobolev(p, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ConvergenceError& e) {
        err << "convergence failure: " << e.what() << " (unconverged block " << e.unconverged_block() << ")\n";
        return kNumericalFailure;
    } catch (const CertificationError& e) {
        err << "certification failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const RealityError& e) {
        err << "reality check failed: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const AccuracyError& e) {
        err << "quadrature failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const IncompleteTableError& e) {
        err << "incomplete table: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral counting and Lieb-Thirring checks on hyperbolic space"};
    app.require_subcommand(1);
    std::map<std::string, std::map<std::string, std::string>> storage;
    std::map<std::string, std::string> config_paths;
    std::vector<std::pair<std::string, CLI::App*>> subs;
    for (const auto& [name, defs] : command_table()) {
        CLI::App* sub = app.add_subcommand(name, describe(name));
        auto& values = storage[name];
        for (const auto& def : defs) {
            CLI::Option* opt = sub->add_option(std::string("--") + def.name, values[def.name], def.help);
            if (def.optional_value) opt->expected(0, 1);
        }
        sub->add_option("--config", config_paths[name], "JSON file with defaults keyed by long flag names");
        subs.emplace_back(name, sub);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidInput;
    }

    RunConfig config;
    CLI::App* chosen = nullptr;
    for (auto& [name, sub] : subs) {
        if (sub->parsed()) {
            config.command = name;
            chosen = sub;
        }
    }
    for (const auto& def : command_table().at(config.command)) {
        const std::string flag = std::string("--") + def.name;
        if (chosen->get_option(flag)->count() > 0) config.parameters[def.name] = storage[config.command][def.name];
    }
    if (chosen->get_option("--config")->count() > 0) {
        try {
            merge_config_file(config, config_paths[config.command]);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kInvalidInput;
        }
    }
    return run(config, out, err);
}

}  // namespace hyperlap::cli
