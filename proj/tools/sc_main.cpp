// sc: generate curve families from their natural equations, apply the
// successor transformation, verify library invariants, and export samples
// for external tooling.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "spacecurve/geomcore.hpp"
#include "spacecurve/io.hpp"
#include "spacecurve/natural.hpp"
#include "spacecurve/verify.hpp"
#include "spacecurve/zoo.hpp"

namespace {

using namespace spacecurve;

constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;

struct JobOptions {
    std::string family;
    std::string range;
    double step = 1e-3;
    double kappa_const = std::numeric_limits<double>::quiet_NaN();
    double theta = std::numeric_limits<double>::quiet_NaN();
    double m = std::numeric_limits<double>::quiet_NaN();
    double omega = std::numeric_limits<double>::quiet_NaN();
    double mu = std::numeric_limits<double>::quiet_NaN();
    double phi_rate = std::numeric_limits<double>::quiet_NaN();
    double phi0 = 0.0;
    bool degrees = false;
    std::string profile_csv;
    std::vector<std::string> outputs{"csv"};
    std::string output_prefix;
};

void add_job_options(CLI::App* cmd, JobOptions& job, bool with_outputs) {
    cmd->add_option("--family", job.family,
                    "plane | helix | slant-helix | salkowski | constant-precession | "
                    "custom-profile");
    cmd->add_option("--range", job.range, "arc-length range a:b");
    cmd->add_option("--step", job.step, "grid step (arc length)");
    cmd->add_option("--kappa-const", job.kappa_const, "constant curvature (plane, helix)");
    cmd->add_option("--theta", job.theta, "slope angle in (0, pi/2), radians");
    cmd->add_option("--m", job.m, "Salkowski parameter (nonzero)");
    cmd->add_option("--omega", job.omega, "constant-precession curvature amplitude");
    cmd->add_option("--mu", job.mu, "constant-precession frequency");
    cmd->add_option("--phi-rate", job.phi_rate,
                    "slant-helix phase rate phi' (defaults to cot(theta))");
    cmd->add_option("--phi0", job.phi0, "phase offset, radians");
    cmd->add_flag("--deg", job.degrees, "angles (--theta, --phi0) given in degrees");
    cmd->add_option("--profile-csv", job.profile_csv, "CSV with kappa,tau columns (custom-profile)");
    if (with_outputs) {
        cmd->add_option("--out", job.outputs, "outputs: csv, obj, report")->delimiter(',');
        cmd->add_option("--output", job.output_prefix, "output path prefix (default: family)");
    }
}

[[noreturn]] void fail_validation(const std::string& msg) {
    throw std::invalid_argument(msg);
}

std::pair<double, double> parse_range(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
        fail_validation("--range must look like a:b");
    }
    auto parse = [&](const std::string& part) {
        char* end = nullptr;
        double v = std::strtod(part.c_str(), &end);
        if (end == part.c_str() || *end != '\0' || !std::isfinite(v)) {
            fail_validation("--range: bad number '" + part + "'");
        }
        return v;
    };
    double lo = parse(text.substr(0, colon));
    double hi = parse(text.substr(colon + 1));
    if (!(hi > lo)) fail_validation("--range: need a < b");
    return {lo, hi};
}

void require_param(bool present, const char* name, const std::string& family) {
    if (!present) fail_validation(std::string(name) + " is required for family " + family);
}

bool given(double v) { return !std::isnan(v); }

// Source description: a closed-form apparatus, or a bare development that
// still needs the natural-equations solver.
struct Source {
    std::optional<FrenetApparatus> closed;
    ScalarProfile kappa;
    ScalarProfile tau;
    std::string note;
};

Source build_source(JobOptions& job) {
    if (job.degrees) {
        constexpr double d2r = std::numbers::pi / 180.0;
        if (given(job.theta)) job.theta *= d2r;
        job.phi0 *= d2r;
    }

    const std::string& fam = job.family;
    if (fam == "plane") {
        require_param(given(job.kappa_const), "--kappa-const", fam);
        auto app = plane_apparatus(ScalarProfile::constant(job.kappa_const));
        return {app, app.kappa, app.tau, "plane curve"};
    }
    if (fam == "helix") {
        require_param(given(job.kappa_const), "--kappa-const", fam);
        require_param(given(job.theta), "--theta", fam);
        auto app = helix_apparatus(ScalarProfile::constant(job.kappa_const), job.theta);
        return {app, app.kappa, app.tau, "general helix"};
    }
    if (fam == "slant-helix") {
        require_param(given(job.theta), "--theta", fam);
        double rate = given(job.phi_rate) ? job.phi_rate : 1.0 / std::tan(job.theta);
        if (rate == 0.0) fail_validation("--phi-rate must be nonzero");
        SlantHelixParams params(job.theta, {job.phi0, ScalarProfile::constant(rate)});
        auto slant = slant_helix_apparatus(params);
        auto app = slant.frenet();
        return {app, app.kappa, app.tau, "slant helix"};
    }
    if (fam == "salkowski") {
        require_param(given(job.m), "--m", fam);
        auto prof = salkowski_profile(job.m);
        return {std::nullopt, prof.kappa, prof.tau, "Salkowski curve"};
    }
    if (fam == "constant-precession") {
        require_param(given(job.omega), "--omega", fam);
        require_param(given(job.mu), "--mu", fam);
        auto prof = constant_precession_profile(job.omega, job.mu);
        // successor of the circular helix (omega, mu); closed-form frames
        double theta = std::atan2(job.omega, job.mu);
        auto helix = helix_apparatus(ScalarProfile::constant(job.omega), theta);
        auto app = successor_transform(helix, 0.0);
        return {app, prof.kappa, prof.tau, "curve of constant precession"};
    }
    if (fam == "custom-profile") {
        require_param(!job.profile_csv.empty(), "--profile-csv", fam);
        std::ifstream in(job.profile_csv);
        if (!in) fail_validation("cannot open " + job.profile_csv);
        GeometryTable t = read_csv(in);
        if (!t.has_development()) {
            fail_validation(job.profile_csv + " carries no kappa,tau columns");
        }
        return {std::nullopt, ScalarProfile::sampled(t.s, t.kappa),
                ScalarProfile::sampled(t.s, t.tau), "sampled development"};
    }
    fail_validation("unknown family '" + fam + "'");
}

FrenetApparatus realize_on_grid(const Source& src, double lo, double hi, double step) {
    if (src.closed && src.closed->frames.valid()) {
        return sample_frames(*src.closed, lo, hi, step);
    }
    return integrate_frenet(src.kappa, src.tau, Frame::canonical(), Interval::closed(lo, hi),
                            {step, 1});
}

GeometryTable table_from(const FrenetApparatus& app, const CurveSamples* samples) {
    GeometryTable t;
    t.s = app.frames.grid();
    t.frames = app.frames.frames();
    if (samples) t.points = samples->points;
    t.kappa.reserve(t.s.size());
    t.tau.reserve(t.s.size());
    for (double s : t.s) {
        t.kappa.push_back(app.kappa(s));
        t.tau.push_back(app.tau(s));
    }
    return t;
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path);
    if (!out) fail_validation("cannot open " + path + " for writing");
    writer(out);
    if (!out) throw std::runtime_error("failed writing " + path);
}

bool wants(const std::vector<std::string>& outputs, const std::string& kind) {
    for (const auto& o : outputs) {
        if (o == kind) return true;
        if (o != "csv" && o != "obj" && o != "report") {
            fail_validation("unknown output kind '" + o + "'");
        }
    }
    return false;
}

struct Diagnostics {
    std::vector<std::pair<std::string, std::string>> lines;

    void add(const std::string& k, const std::string& v) { lines.emplace_back(k, v); }
    void add(const std::string& k, double v) { lines.emplace_back(k, format_full(v)); }

    void print(std::ostream& out) const {
        for (const auto& [k, v] : lines) out << k << ' ' << v << '\n';
    }
};

int cmd_generate(JobOptions& job) {
    if (job.family.empty()) fail_validation("--family is required");
    if (job.range.empty()) fail_validation("--range is required");
    auto [lo, hi] = parse_range(job.range);
    Source src = build_source(job);
    FrenetApparatus app = realize_on_grid(src, lo, hi, job.step);
    CurveSamples samples = integrate_position(app, {});

    Diagnostics diag;
    diag.add("family", job.family);
    diag.add("note", src.note);
    diag.add("range", job.range);
    diag.add("step", job.step);
    diag.add("nodes", std::to_string(samples.s.size()));
    diag.add("closure_residual", (samples.points.back() - samples.points.front()).norm());
    double defect = 0.0;
    for (const Frame& f : samples.frames) defect = std::max(defect, frame_defect(f));
    diag.add("max_frame_defect", defect);
    double h = samples.s[1] - samples.s[0];
    double speed_defect = 0.0;
    for (std::size_t i = 1; i < samples.s.size(); ++i) {
        speed_defect = std::max(
            speed_defect, std::fabs((samples.points[i] - samples.points[i - 1]).norm() - h));
    }
    diag.add("unit_speed_defect", speed_defect);
    diag.add("total_curvature", total_torsion(src.kappa, Interval::closed(lo, hi)));
    diag.add("total_torsion", total_torsion(src.tau, Interval::closed(lo, hi)));
    if (job.family == "constant-precession") {
        double ct = constant_precession_profile(job.omega, job.mu).cos_theta;
        diag.add("cos_theta", ct);
        if (auto r = approximate_rational(ct)) {
            diag.add("cos_theta_rational",
                     "approximately " + std::to_string(r->num) + "/" + std::to_string(r->den) +
                         " (closure criterion met)");
        } else {
            diag.add("cos_theta_rational", "no rational p/q with q <= 1000 within 1e-9");
        }
    }

    std::string prefix = job.output_prefix.empty() ? job.family : job.output_prefix;
    GeometryTable table = table_from(app, &samples);
    if (wants(job.outputs, "csv")) {
        write_file(prefix + ".csv", [&](std::ostream& o) { write_csv(o, table); });
    }
    if (wants(job.outputs, "obj")) {
        write_file(prefix + ".obj", [&](std::ostream& o) { write_obj(o, samples.points); });
    }
    if (wants(job.outputs, "report")) {
        write_file(prefix + ".report.txt", [&](std::ostream& o) { diag.print(o); });
    }
    diag.print(std::cout);
    return 0;
}

int cmd_successor(JobOptions& job) {
    if (job.family.empty()) fail_validation("--family is required");
    if (job.range.empty()) fail_validation("--range is required");
    auto [lo, hi] = parse_range(job.range);
    double phi0 = job.phi0;
    job.phi0 = 0.0;  // phi0 applies to the transformation, not the source family
    Source src = build_source(job);
    if (job.degrees) phi0 *= std::numbers::pi / 180.0;

    FrenetApparatus source_app = realize_on_grid(src, lo, hi, job.step);
    FrenetApparatus suc = successor_transform(source_app, phi0);

    Diagnostics diag;
    diag.add("family", job.family);
    diag.add("transform", "successor");
    diag.add("phi0", phi0);
    diag.add("range", job.range);
    diag.add("step", job.step);
    diag.add("nodes", std::to_string(suc.frames.grid().size()));
    diag.add("successor_total_curvature", total_torsion(suc.kappa, Interval::closed(lo, hi)));
    diag.add("successor_total_torsion", total_torsion(suc.tau, Interval::closed(lo, hi)));

    std::string prefix = job.output_prefix.empty() ? job.family + "-successor" : job.output_prefix;
    // The successor development and frame field are emitted; positions of the
    // successor curve itself are left to `generate --family custom-profile`
    // fed with this CSV.
    GeometryTable table = table_from(suc, nullptr);
    if (wants(job.outputs, "csv")) {
        write_file(prefix + ".csv", [&](std::ostream& o) { write_csv(o, table); });
    }
    if (wants(job.outputs, "obj")) {
        fail_validation("successor emits no positions; export OBJ from generate output");
    }
    if (wants(job.outputs, "report")) {
        write_file(prefix + ".report.txt", [&](std::ostream& o) { diag.print(o); });
    }
    diag.print(std::cout);
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites_requested) {
    std::vector<std::string> suites = suites_requested;
    if (suites.empty()) fail_validation("--suite is required");
    if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
    for (const auto& s : suites) {
        bool known = false;
        for (const auto& name : suite_names()) known = known || name == s;
        if (!known) fail_validation("unknown suite '" + s + "'");
    }

    // suites are independent and the library is pure; run them concurrently
    std::vector<std::future<std::vector<CheckResult>>> futures;
    futures.reserve(suites.size());
    for (const auto& s : suites) {
        futures.push_back(std::async(std::launch::async, [s] { return run_suite(s); }));
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        auto results = futures[i].get();
        for (const auto& r : results) {
            std::printf("%-14s %-46s residual %.3e tol %.3e %s\n", suites[i].c_str(),
                        r.name.c_str(), r.residual, r.tolerance, r.pass ? "PASS" : "FAIL");
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}

struct ExportOptions {
    std::string input;
    std::vector<std::string> outputs{"obj"};
    std::string output_prefix;
};

int cmd_export(const ExportOptions& opt) {
    if (opt.input.empty()) fail_validation("--input is required");
    std::ifstream in(opt.input);
    if (!in) fail_validation("cannot open " + opt.input);
    GeometryTable table = read_csv(in);

    std::string prefix = opt.output_prefix;
    if (prefix.empty()) {
        prefix = opt.input;
        auto dot = prefix.rfind('.');
        if (dot != std::string::npos) prefix = prefix.substr(0, dot);
        prefix += "-export";
    }
    if (wants(opt.outputs, "obj")) {
        if (!table.has_points()) fail_validation(opt.input + " carries no position columns");
        write_file(prefix + ".obj", [&](std::ostream& o) { write_obj(o, table.points); });
    }
    if (wants(opt.outputs, "csv")) {
        write_file(prefix + ".csv", [&](std::ostream& o) { write_csv(o, table); });
    }
    std::cout << "rows " << table.s.size() << "\n";
    return 0;
}

// Flat key=value config named by SC_CONFIG; command-line flags win.
std::vector<std::string> apply_config(const CLI::App& app, int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const char* path = std::getenv("SC_CONFIG");
    if (!path || !*path) return args;
    std::ifstream in(path);
    if (!in) fail_validation(std::string("SC_CONFIG: cannot open ") + path);

    const CLI::App* active = nullptr;
    for (const auto& a : args) {
        if (!a.empty() && a[0] != '-') {
            for (const CLI::App* sub : app.get_subcommands({})) {
                if (sub->get_name() == a) active = sub;
            }
            break;
        }
    }
    if (!active) return args;

    auto has_flag = [&args](const std::string& name) {
        for (const auto& a : args) {
            if (a == name || a.rfind(name + "=", 0) == 0) return true;
        }
        return false;
    };

    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail_validation("SC_CONFIG: expected key=value, got '" + line + "'");
        }
        std::string key = "--" + line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (has_flag(key)) continue;
        if (active->get_option_no_throw(key) != nullptr) {
            args.push_back(key);
            args.push_back(value);
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"space-curve toolkit: natural equations, successor transforms, verification"};
    app.require_subcommand(1);

    JobOptions gen_job;
    CLI::App* gen = app.add_subcommand("generate", "generate a curve family and export samples");
    add_job_options(gen, gen_job, true);

    JobOptions suc_job;
    CLI::App* suc = app.add_subcommand("successor", "successor development and frame field");
    add_job_options(suc, suc_job, true);

    std::vector<std::string> suites;
    CLI::App* ver = app.add_subcommand("verify", "run invariant suites");
    ver->add_option("--suite", suites, "geomcore | natural | zoo | acceptance | all")
        ->delimiter(',');

    ExportOptions exp;
    CLI::App* exp_cmd = app.add_subcommand("export", "re-export a samples CSV");
    exp_cmd->add_option("--input", exp.input, "samples CSV produced by generate/successor");
    exp_cmd->add_option("--out", exp.outputs, "outputs: obj, csv")->delimiter(',');
    exp_cmd->add_option("--output", exp.output_prefix, "output path prefix");

    try {
        auto args = apply_config(app, argc, argv);
        std::reverse(args.begin(), args.end());
        app.parse(args);
        if (gen->parsed()) return cmd_generate(gen_job);
        if (suc->parsed()) return cmd_successor(suc_job);
        if (ver->parsed()) return cmd_verify(suites);
        if (exp_cmd->parsed()) return cmd_export(exp);
        return kExitValidation;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
