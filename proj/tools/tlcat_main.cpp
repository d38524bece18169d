// tlcat: command-line driver for monoidal-system validation, fusion-path
// enumeration, Temperley-Lieb construction and Schur-Weyl verification.
//
// Every command emits a machine-readable report (JSON by default) and exits
// 0 exactly when all checks pass. Failures of input parsing or of the
// mathematical hypotheses produce a structured error record and exit 2.

#include <chrono>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlcat/category_zoo.hpp"
#include "tlcat/monoidal_system.hpp"
#include "tlcat/path_basis.hpp"
#include "tlcat/qseries.hpp"
#include "tlcat/schur_weyl.hpp"
#include "tlcat/system_io.hpp"
#include "tlcat/tl_builder.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;
using tlcat::cplx;

struct CheckRecord {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct RunReport {
    std::string command;
    std::string fingerprint;
    std::vector<CheckRecord> checks;
    json extra = json::object();
    double timing_ms = 0.0;

    void add(const std::string& name, double residual, double threshold) {
        checks.push_back({name, residual, threshold, residual < threshold});
    }
    void add_flag(const std::string& name, bool ok) {
        checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

double default_tolerance() {
    if (const char* env = std::getenv("TLCAT_TOLERANCE")) {
        try {
            return std::stod(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("TLCAT_TOLERANCE is not a number: " + std::string(env));
        }
    }
    return 1e-9;
}

json report_to_json(const RunReport& rep) {
    json j;
    j["version"] = kVersion;
    j["command"] = rep.command;
    if (!rep.fingerprint.empty()) j["fingerprint"] = rep.fingerprint;
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"threshold", c.threshold},
                          {"pass", c.pass}});
    j["checks"] = checks;
    for (auto& [key, value] : rep.extra.items()) j[key] = value;
    j["timing_ms"] = rep.timing_ms;
    j["pass"] = rep.pass();
    return j;
}

std::string report_to_text(const RunReport& rep) {
    std::ostringstream os;
    os << "tlcat " << kVersion << "  command=" << rep.command << "\n";
    if (!rep.fingerprint.empty()) os << "fingerprint: " << rep.fingerprint << "\n";
    for (const auto& c : rep.checks)
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << "  residual="
           << c.residual << "  threshold=" << c.threshold << "\n";
    for (auto& [key, value] : rep.extra.items()) os << key << ": " << value.dump() << "\n";
    os << "timing_ms: " << rep.timing_ms << "\n";
    os << (rep.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw std::runtime_error("cannot open output file: " + output_path);
    out << text;
}

/// Source of the monoidal system: a file or a built-in category.
struct SystemOptions {
    std::string input_file;
    std::string kind;
    double q_re = 1.0;
    double q_im = 0.0;
    int level = 2;
    int max_label = 4;

    tlcat::MonoidalSystem build() const {
        if (!input_file.empty()) return tlcat::load_system(input_file);
        tlcat::CategorySpec spec;
        if (kind == "fibonacci")
            spec.kind = tlcat::CategoryKind::fibonacci;
        else if (kind == "ising")
            spec.kind = tlcat::CategoryKind::ising;
        else if (kind == "su2")
            spec.kind = tlcat::CategoryKind::su2_generic;
        else if (kind == "su2_level_k")
            spec.kind = tlcat::CategoryKind::su2_level_k;
        else
            throw std::invalid_argument("unknown category kind: " + kind);
        spec.q = cplx(q_re, q_im);
        spec.level = level;
        spec.max_label = max_label;
        return tlcat::build_category(spec);
    }

    void attach(CLI::App* cmd, bool required) {
        auto* input = cmd->add_option("--input,input", input_file,
                                      "monoidal-system file to load");
        auto* kind_opt = cmd->add_option("--kind", kind,
                                         "built-in category: fibonacci, ising, su2, su2_level_k");
        input->excludes(kind_opt);
        if (required) {
            // exactly one of the two sources
            cmd->parse_complete_callback([this] {
                if (input_file.empty() && kind.empty())
                    throw CLI::ValidationError("either an input file or --kind is required");
            });
        }
        cmd->add_option("--q", q_re, "deformation parameter (real part), su2 only");
        cmd->add_option("--q-imag", q_im, "deformation parameter (imaginary part)");
        cmd->add_option("--level", level, "level k for su2_level_k");
        cmd->add_option("--max-label", max_label, "label cutoff for generic su2");
    }
};

/// Chain geometry shared by basis and verify-tl.
struct ChainOptions {
    int length = 0;
    std::vector<std::string> strands;  // explicit labels, cyclic fill
    std::vector<std::string> targets;
    std::vector<std::string> start;
    bool periodic = false;
    std::string c0_text = "auto";

    void attach(CLI::App* cmd, bool with_targets) {
        cmd->add_option("--L", length, "number of strands")->required();
        cmd->add_option("--strands", strands,
                        "strand labels (repeated cyclically; default: the standard generator)");
        if (with_targets) {
            cmd->add_option("--targets", targets,
                            "fusion-channel labels nu_i (repeated cyclically; default: unit)");
            cmd->add_option("--c0", c0_text, "generator normalization, a number or 'auto' (1/sqrt(c))");
        }
        cmd->add_option("--start", start, "admissible starting labels I_0 (default: all)");
        cmd->add_flag("--periodic", periodic, "closed chain (path returns to its start)");
    }

    std::string default_strand(const tlcat::MonoidalSystem& sys) const {
        // The standard decorating object: the first non-unit label whose
        // square contains the unit (tau, sigma, the su2 spin-1/2 object).
        for (int a = 0; a < sys.num_labels(); ++a)
            if (a != sys.unit() && sys.n(a, a, sys.unit()) == 1) return sys.label(a).id;
        return sys.label(sys.num_labels() > 1 ? 1 : 0).id;
    }

    tlcat::ChainSpec chain(const tlcat::MonoidalSystem& sys) const {
        if (length < 2) throw std::invalid_argument("--L must be at least 2");
        tlcat::ChainSpec ch;
        ch.sys = &sys;
        ch.periodic = periodic;
        std::vector<std::string> names = strands;
        if (names.empty()) names = {default_strand(sys)};
        for (int i = 0; i < length; ++i)
            ch.strands.push_back(sys.label_index(names[i % names.size()]));
        const int ntargets = periodic ? length : length - 1;
        std::vector<std::string> tnames = targets;
        if (tnames.empty()) tnames = {sys.label(sys.unit()).id};
        for (int i = 0; i < ntargets; ++i)
            ch.targets.push_back(sys.label_index(tnames[i % tnames.size()]));
        for (const auto& s : start) ch.start_set.insert(sys.label_index(s));
        return ch;
    }

    cplx resolve_c0(const tlcat::ChainSpec& ch) const {
        if (c0_text == "auto") return 1.0 / std::sqrt(tlcat::compute_c(ch, 1));
        std::size_t pos = 0;
        double value = std::stod(c0_text, &pos);
        if (pos != c0_text.size())
            throw std::invalid_argument("--c0 must be a number or 'auto': " + c0_text);
        return cplx(value);
    }
};

void run_validate(const tlcat::MonoidalSystem& sys, double tol, RunReport& rep) {
    auto fusion = tlcat::validate_fusion(sys.rules(), sys.labels(), sys.unit(), sys.truncation_cap());
    rep.add_flag("fusion_rules", fusion.ok());
    if (!fusion.ok()) rep.extra["fusion_violations"] = fusion.violations;
    rep.add_flag("multiplicity_free", tlcat::is_multiplicity_free(sys.rules()));
    auto unit = tlcat::check_unit_constraints(sys);
    rep.add_flag("unit_constraints", unit.ok());
    if (!unit.ok()) rep.extra["unit_violations"] = unit.violations;
    auto pentagon = tlcat::check_pentagon(sys);
    rep.add("pentagon", pentagon.max_residual, tol);
    rep.extra["pentagon_equations"] = pentagon.equations_checked;
}

void run_basis(const tlcat::MonoidalSystem& sys, const ChainOptions& opts, RunReport& rep) {
    auto chain = opts.chain(sys);
    tlcat::StrandDecoration dec;
    dec.strands = chain.strands;
    dec.start_set = chain.start_set;
    dec.closed = chain.periodic;
    auto basis = tlcat::enumerate_paths(sys, dec);
    json paths = json::array();
    for (int n = 0; n < basis.size(); ++n) {
        json p = json::array();
        for (int label : basis.state(n).seq) p.push_back(sys.label(label).id);
        paths.push_back(p);
    }
    rep.extra["count"] = basis.size();
    rep.extra["paths"] = paths;
    rep.add_flag("basis_nonempty", basis.size() > 0);
}

void run_verify_tl(const tlcat::MonoidalSystem& sys, const ChainOptions& opts, double tol,
                   RunReport& rep) {
    auto chain = opts.chain(sys);
    if (chain.periodic) {
        auto report = tlcat::periodic_constraint_check(chain, tol);
        rep.extra["c"] = {report.c.real(), report.c.imag()};
        json tested = json::array();
        for (std::size_t i = 0; i < report.c0_tested.size(); ++i)
            tested.push_back({{"c0", {report.c0_tested[i].real(), report.c0_tested[i].imag()}},
                              {"residual", report.residuals[i]},
                              {"expected_pass", (bool)report.expected_pass[i]}});
        rep.extra["c0_sweep"] = tested;
        rep.add_flag("periodic_constraint", report.ok);
        return;
    }
    chain.c0 = opts.resolve_c0(chain);
    auto family = tlcat::build_tl_family(chain);
    auto relations = tlcat::verify_tl(family, tol);
    rep.add("idempotency", relations.idempotency, tol);
    rep.add("loop", relations.loop, tol);
    rep.add("commutation", relations.commutation, tol);
    if (relations.cubic_applicable) {
        rep.add("cubic_up", relations.cubic_up, tol);
        rep.add("cubic_down", relations.cubic_down, tol);
        auto homogeneity = tlcat::verify_c_homogeneity(chain);
        rep.add("c_homogeneity", homogeneity.max_deviation, tol);
        rep.extra["c"] = {family.c[0].real(), family.c[0].imag()};
    }
    rep.extra["delta"] = {family.delta.real(), family.delta.imag()};
    rep.extra["c0"] = {family.c0.real(), family.c0.imag()};
    rep.extra["basis_size"] = family.basis->size();
}

void run_schur_weyl(int length, cplx q, double tol, RunReport& rep) {
    auto comparison = tlcat::verify_pos_vs_fsymbol(length, q);
    rep.add("pos_vs_fsymbol", comparison.max_deviation, tol);
    rep.extra["generators"] = comparison.generators;

    tlcat::SchurWeylChain chain(length, q);
    rep.add("k2_equals_inverse_delta", std::abs(chain.k(2) - 1.0 / chain.delta()), 1e-14);
    double f_identity = 0.0;
    for (int x = 1; x < length; ++x)
        f_identity = std::max(f_identity, tlcat::check_f_identity(chain.system(), x, q));
    rep.add("f_identity", f_identity, tol);

    double jw = 0.0;
    for (int m = 2; m <= length; ++m) {
        auto e = chain.jones_wenzl(m);
        jw = std::max(jw, ((e * e) - e).norm_max());
        for (int i = 1; i + 1 <= m - 1; ++i) {
            jw = std::max(jw, (chain.u(i) * e).norm_max());
            jw = std::max(jw, (e * chain.u(i)).norm_max());
        }
    }
    rep.add("jones_wenzl", jw, tol);
}

int run(int argc, char** argv) {
    CLI::App app{"tlcat: fusion categories, path bases and Temperley-Lieb chains"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string output_path;
    double tolerance = default_tolerance();
    app.add_option("--format", format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output", output_path, "write the report to this file instead of stdout");
    app.add_option("--tolerance", tolerance, "residual threshold for checks");

    SystemOptions sys_validate, sys_emit, sys_basis, sys_tl, sys_report;
    ChainOptions chain_basis, chain_tl, chain_report;
    int sw_length = 4;
    double sw_q = 1.1;
    bool report_has_chain = false;

    auto* cmd_validate = app.add_subcommand("validate", "run all structural validators");
    sys_validate.attach(cmd_validate, true);

    auto* cmd_emit = app.add_subcommand("emit-category", "write a built-in category file");
    sys_emit.attach(cmd_emit, true);

    auto* cmd_basis = app.add_subcommand("basis", "enumerate the fusion-path basis");
    sys_basis.attach(cmd_basis, true);
    chain_basis.attach(cmd_basis, false);

    auto* cmd_tl = app.add_subcommand("verify-tl", "build and verify the Temperley-Lieb family");
    sys_tl.attach(cmd_tl, true);
    chain_tl.attach(cmd_tl, true);

    auto* cmd_sw = app.add_subcommand("schur-weyl", "Schur-Weyl checks on the su2 chain");
    cmd_sw->add_option("--L", sw_length, "number of strands")->required();
    cmd_sw->add_option("--q", sw_q, "deformation parameter (real, generic)");

    auto* cmd_report = app.add_subcommand("report", "validators plus Temperley-Lieb verification");
    sys_report.attach(cmd_report, true);
    auto* rl = cmd_report->add_option("--L", chain_report.length, "number of strands");
    cmd_report->add_option("--strands", chain_report.strands, "strand labels");
    cmd_report->add_option("--targets", chain_report.targets, "fusion-channel labels");
    cmd_report->add_option("--start", chain_report.start, "starting labels I_0");
    cmd_report->add_flag("--periodic", chain_report.periodic, "closed chain");
    cmd_report->add_option("--c0", chain_report.c0_text, "normalization or 'auto'");
    (void)rl;

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();  // let --format/--output/--tolerance follow the subcommand

    CLI11_PARSE(app, argc, argv);

    RunReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (cmd_validate->parsed()) {
            rep.command = "validate";
            auto sys = sys_validate.build();
            rep.fingerprint = tlcat::fingerprint(sys);
            run_validate(sys, tolerance, rep);
        } else if (cmd_emit->parsed()) {
            rep.command = "emit-category";
            auto sys = sys_emit.build();
            write_output(tlcat::serialize_system(sys), output_path);
            return 0;  // the emitted file *is* the output; no report wrapper
        } else if (cmd_basis->parsed()) {
            rep.command = "basis";
            auto sys = sys_basis.build();
            rep.fingerprint = tlcat::fingerprint(sys);
            run_basis(sys, chain_basis, rep);
        } else if (cmd_tl->parsed()) {
            rep.command = "verify-tl";
            auto sys = sys_tl.build();
            rep.fingerprint = tlcat::fingerprint(sys);
            run_verify_tl(sys, chain_tl, tolerance, rep);
        } else if (cmd_sw->parsed()) {
            rep.command = "schur-weyl";
            run_schur_weyl(sw_length, cplx(sw_q), tolerance, rep);
        } else if (cmd_report->parsed()) {
            rep.command = "report";
            auto sys = sys_report.build();
            rep.fingerprint = tlcat::fingerprint(sys);
            run_validate(sys, tolerance, rep);
            if (chain_report.length >= 2) run_verify_tl(sys, chain_report, tolerance, rep);
        }
    } catch (const std::exception& e) {
        json err;
        err["version"] = kVersion;
        err["command"] = rep.command;
        err["error"] = {{"type", "invalid_input_or_hypothesis"}, {"message", e.what()}};
        err["pass"] = false;
        write_output(err.dump(2) + "\n", output_path);
        return 2;
    }
    const auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    write_output(format == "json" ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep),
                 output_path);
    return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\": {\"type\": \"fatal\", \"message\": \"" << e.what()
                  << "\"}, \"pass\": false}\n";
        return 2;
    }
}
