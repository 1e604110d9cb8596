#pragma once

// Command-line frontend: constants, verify, radius, scan, sample.
//
// Exit codes: 0 verified, 1 violated, 2 inconclusive, 3 usage or I/O error.

#include "bohr/certify.hpp"
#include "bohr/lemma_bounds.hpp"
#include "bohr/radius_finder.hpp"
#include "bohr/report.hpp"
#include "bohr/sampler.hpp"
#include "bohr/sharp_constants.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bohr {

inline constexpr int exit_verified = 0;
inline constexpr int exit_violated = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_usage = 3;

inline int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::Verified: return exit_verified;
    case Verdict::Violated: return exit_violated;
    case Verdict::Inconclusive: return exit_inconclusive;
    }
    return exit_usage;
}

/// Bad flag values and unwritable paths; mapped to exit code 3.
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace cli_detail {

inline std::string format_g(double x, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline double round_significant(double x, int digits) { return std::stod(format_g(x, digits)); }

inline std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline FunctionalKind parse_functional(const std::string& name)
{
    for (auto k : all_functional_kinds)
        if (lower(std::string(to_string(k))) == lower(name)) return k;
    throw usage_error("unknown functional '" + name + "'");
}

inline FunctionalKind parse_theorem(const std::string& id)
{
    const std::string s = lower(id);
    if (s == "1") return FunctionalKind::Thm1;
    if (s == "2") return FunctionalKind::Thm2;
    if (s == "3") return FunctionalKind::Thm3;
    if (s == "a") return FunctionalKind::ThmA;
    if (s == "b1") return FunctionalKind::ThmB1;
    if (s == "b2") return FunctionalKind::ThmB2;
    if (s == "classical") return FunctionalKind::Classical;
    throw usage_error("unknown theorem '" + id + "' (expected 1, 2, 3, A, B1, B2 or classical)");
}

inline void print_table(const Report& r, std::ostream& os)
{
    os << "command   " << r.command << '\n';
    os << "verdict   " << to_string(r.verdict) << '\n';
    auto width = [](const auto& m) {
        std::size_t w = 0;
        for (const auto& [k, v] : m) w = std::max(w, k.size());
        return static_cast<int>(w);
    };
    if (!r.params.empty()) {
        os << "params\n";
        const int w = width(r.params);
        for (const auto& [k, v] : r.params) os << "  " << std::left << std::setw(w) << k << "  " << v << '\n';
    }
    if (!r.constants.empty()) {
        os << "constants\n";
        const int w = width(r.constants);
        for (const auto& [k, v] : r.constants)
            os << "  " << std::left << std::setw(w) << k << "  " << format_g(v, 15) << '\n';
    }
    if (!r.certificates.empty()) {
        os << "certificates\n";
        for (const auto& c : r.certificates) {
            os << "  [" << to_string(c.verdict) << "] " << c.target << '\n';
            os << "      interval [" << format_g(c.lo, 10) << ", " << format_g(c.hi, 10) << "]  min "
               << format_g(c.min_value, 10) << "  max " << format_g(c.max_value, 10) << '\n';
            if (!c.method.empty()) os << "      method   " << c.method << '\n';
            for (const auto& w : c.witnesses)
                os << "      witness  t = " << format_g(w.t, 12) << "  value = " << format_g(w.value, 12) << '\n';
        }
    }
    if (!r.witnesses.empty()) {
        os << "witnesses\n";
        for (const auto& w : r.witnesses)
            os << "  t = " << format_g(w.t, 12) << "  value = " << format_g(w.value, 12) << '\n';
    }
    if (r.min_slack) os << "min_slack " << format_g(*r.min_slack, 12) << '\n';
    os << "elapsed   " << r.elapsed_ms << " ms\n";
}

inline void emit(const Report& r, bool json, std::ostream& os)
{
    if (json)
        os << dump_json(r) << '\n';
    else
        print_table(r, os);
}

struct Flags {
    bool json = false;
    double constants_tol = 1e-15;
    double radius_tol = 1e-9;
    double grid_step = 1e-4;
    int refine = 1;
    std::size_t family_grid = 10000;
    std::string theorem;
    std::optional<double> lambda_override;
    std::optional<double> p_override;
    std::string functional = "all";
    std::string function;
    double from = 0.0, to = 0.0, step = 0.0;
    std::string out = "-";
    std::size_t trials = 10000;
    int degree = 5;
    std::uint64_t seed = 0;
    std::string family = "blaschke";
};

inline std::int64_t since_ms(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

inline int cmd_constants(const Flags& f, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (!(f.constants_tol > 0.0 && f.constants_tol <= 1e-3)) throw usage_error("--tol must lie in (0, 1e-3]");
    const SharpConstants c = compute_sharp_constants(f.constants_tol);
    Report r;
    r.command = "constants";
    r.params["tol"] = format_g(f.constants_tol, 6);
    // JSON carries 12 significant digits; the table shows the same rounded values.
    auto put = [&](const char* k, double v) { r.constants[k] = round_significant(v, 12); };
    put("a1", c.a1.value);
    put("lambda1", c.lambda1);
    put("a2", c.a2.value);
    put("lambda2", c.lambda2);
    put("r0", c.r0);
    put("p", c.p);
    const double res1 = remark_consistency(RemarkPolynomial::Thm1Quintic);
    const double res2 = remark_consistency(RemarkPolynomial::Thm2Quartic);
    put("remark_residual_lambda1", res1);
    put("remark_residual_lambda2", res2);
    r.verdict = res1 < 1e-10 && res2 < 1e-10 ? Verdict::Verified : Verdict::Inconclusive;
    r.elapsed_ms = since_ms(t0);
    if (f.json) {
        emit(r, true, out);
        return exit_code(r.verdict);
    }
    // Table: the stored 12-digit value next to the customary short form.
    const std::pair<const char*, const char*> rows[] = {
        {"a1", "%.6f"},     {"lambda1", "%.4f"}, {"a2", "%.6f"},
        {"lambda2", "%.4f"}, {"r0", "%.6f"},      {"p", "%.6f"},
        {"remark_residual_lambda1", "%.1e"}, {"remark_residual_lambda2", "%.1e"}};
    out << "command   constants\nverdict   " << to_string(r.verdict) << "\n";
    out << std::left << std::setw(25) << "constant" << std::setw(20) << "value" << "short\n";
    for (const auto& [name, fmt] : rows) {
        char shorter[32];
        std::snprintf(shorter, sizeof shorter, fmt, r.constants.at(name));
        out << std::left << std::setw(25) << name << std::setw(20) << format_g(r.constants.at(name), 12) << shorter
            << '\n';
    }
    out << "tol       " << format_g(f.constants_tol, 6) << "\nelapsed   " << r.elapsed_ms << " ms\n";
    return exit_code(r.verdict);
}

inline int cmd_verify(const Flags& f, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const FunctionalKind kind = parse_theorem(f.theorem);
    if (!(f.grid_step > 0.0 && f.grid_step <= 0.01)) throw usage_error("--grid must lie in (0, 0.01]");
    if (f.refine < 1 || f.refine > 100) throw usage_error("--refine must lie in [1, 100]");
    TheoremOptions opt;
    opt.lambda_override = f.lambda_override;
    opt.p_override = f.p_override;
    opt.certify.grid_step = f.grid_step / f.refine;
    if (opt.lambda_override && kind != FunctionalKind::Thm1 && kind != FunctionalKind::Thm2)
        throw usage_error("--lambda-override applies to theorems 1 and 2 only");
    if (opt.p_override && kind != FunctionalKind::Thm3) throw usage_error("--p-override applies to theorem 3 only");

    const TheoremReport tr = certify_theorem(kind, opt);
    Report r;
    r.command = "verify";
    r.params["theorem"] = f.theorem;
    r.params["functional"] = std::string(to_string(kind));
    r.params["grid"] = format_g(opt.certify.grid_step, 6);
    if (f.lambda_override) r.params["lambda_override"] = format_g(*f.lambda_override, 17);
    if (f.p_override) r.params["p_override"] = format_g(*f.p_override, 17);
    r.constants["radius"] = tr.radius;
    if (kind == FunctionalKind::Thm1 || kind == FunctionalKind::Thm2) r.constants["lambda"] = tr.spec.lambda;
    if (kind == FunctionalKind::Thm3) r.constants["p"] = tr.spec.p_weight;
    if (kind == FunctionalKind::ThmA) r.constants["area_weight"] = tr.spec.area_weight;
    r.certificates = tr.certificates;
    for (const auto& c : tr.certificates)
        if (c.verdict == Verdict::Violated) r.witnesses.insert(r.witnesses.end(), c.witnesses.begin(), c.witnesses.end());
    r.verdict = tr.verdict;
    r.elapsed_ms = since_ms(t0);
    emit(r, f.json, out);
    return exit_code(r.verdict);
}

inline int cmd_radius(const Flags& f, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (f.functional == "all") throw usage_error("radius needs a single --functional");
    const FunctionalKind kind = parse_functional(f.functional);
    if (!(f.radius_tol >= 1e-12 && f.radius_tol <= 1e-2)) throw usage_error("--tol must lie in [1e-12, 1e-2]");
    if (f.family_grid < 16 || f.family_grid > 10'000'000) throw usage_error("--grid must lie in [16, 1e7]");
    TheoremOptions topt;
    topt.lambda_override = f.lambda_override;
    topt.p_override = f.p_override;
    FunctionalSpec spec;
    try {
        spec = theorem_spec(kind, topt);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    const RadiusResult res = bohr_radius(spec, f.radius_tol, f.family_grid);

    Report r;
    r.command = "radius";
    r.params["functional"] = std::string(to_string(kind));
    r.params["tol"] = format_g(f.radius_tol, 6);
    r.params["grid"] = std::to_string(f.family_grid);
    r.constants["radius"] = res.radius;
    r.constants["lo"] = res.lo;
    r.constants["hi"] = res.hi;
    r.constants["argmax_a"] = res.worst_param;
    r.constants["iterations"] = res.iterations;
    r.constants["nominal_radius"] = spec.radius();
    const bool overridden = f.lambda_override || f.p_override;
    if (res.hit_upper)
        r.verdict = Verdict::Inconclusive;
    else if (overridden)
        r.verdict = Verdict::Verified;
    else
        r.verdict = std::abs(res.radius - spec.radius()) <= std::max(1e-6, 2.0 * f.radius_tol) ? Verdict::Verified
                                                                                         : Verdict::Violated;
    r.elapsed_ms = since_ms(t0);
    emit(r, f.json, out);
    return exit_code(r.verdict);
}

inline std::function<double(double)> scan_function(const std::string& id)
{
    const auto& sc = sharp_constants();
    if (id == "phi1") return [l = sc.lambda1](double t) { return proof_function(ProofFunctionKind::Phi1, t, l); };
    if (id == "psi1") return [l = sc.lambda1](double t) { return proof_function(ProofFunctionKind::Psi1, t, l); };
    if (id == "phi2") return [l = sc.lambda2](double t) { return proof_function(ProofFunctionKind::Phi2, t, l); };
    if (id == "psi2") return [l = sc.lambda2](double t) { return proof_function(ProofFunctionKind::Psi2, t, l); };
    auto env = [](FunctionalKind k) {
        const FunctionalSpec spec = sharp_spec(k);
        return [spec](double t) { return envelope(spec, t, spec.radius()); };
    };
    if (id == "envelope1") return env(FunctionalKind::Thm1);
    if (id == "envelope2") return env(FunctionalKind::Thm2);
    if (id == "envelope3") return env(FunctionalKind::Thm3);
    if (id == "bombieri") return [](double t) { return bombieri_sup(t); };
    throw usage_error("unknown scan function '" + id + "'");
}

/// Sample points from, from + step, ... up to to, with to itself always last.
inline std::vector<double> scan_points(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(step)) throw usage_error("--step must be positive");
    if (!(to >= from)) throw usage_error("--to must not be below --from");
    const double span = (to - from) / step;
    if (span > 1e7) throw usage_error("scan would exceed 1e7 rows");
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
    std::vector<double> t;
    t.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) t.push_back(from + static_cast<double>(i) * step);
    if (to - t.back() > 1e-9 * step) t.push_back(to);
    return t;
}

inline int cmd_scan(const Flags& f, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto fn = scan_function(f.function);
    const auto ts = scan_points(f.from, f.to, f.step);

    std::string csv = "t,value\n";
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double t : ts) {
        double v = 0.0;
        try {
            v = fn(t);
        } catch (const std::exception& e) {
            throw usage_error(std::string("scan: ") + e.what() + " at t = " + format_g(t, 17));
        }
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        csv += format_g(t, 17) + "," + format_g(v, 17) + "\n";
    }
    if (f.out == "-") {
        out << csv;
        return exit_verified;
    }
    std::ofstream file(f.out, std::ios::binary);
    if (!file) throw usage_error("cannot open '" + f.out + "' for writing");
    file << csv;
    file.close();
    if (!file) throw usage_error("failed writing '" + f.out + "'");

    Report r;
    r.command = "scan";
    r.params = {{"function", f.function}, {"from", format_g(f.from, 17)}, {"to", format_g(f.to, 17)},
                {"step", format_g(f.step, 17)}, {"out", f.out}};
    r.constants = {{"rows", static_cast<double>(ts.size())}, {"min_value", lo}, {"max_value", hi}};
    r.verdict = Verdict::Verified;
    r.elapsed_ms = since_ms(t0);
    emit(r, f.json, out);
    return exit_verified;
}

inline int cmd_sample(const Flags& f, std::ostream& out)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<FunctionalSpec> specs;
    if (f.functional == "all")
        for (auto k : all_functional_kinds) specs.push_back(sharp_spec(k));
    else
        specs.push_back(sharp_spec(parse_functional(f.functional)));
    if (f.trials < 1) throw usage_error("--trials must be >= 1");
    if (f.degree < 0 || f.degree > max_blaschke_degree) throw usage_error("--degree must lie in [0, 16]");
    SampleOptions opt;
    opt.trials = f.trials;
    opt.max_degree = f.degree;
    opt.seed = f.seed;
    const std::string fam = lower(f.family);
    if (fam == "blaschke")
        opt.family = SampleFamily::Blaschke;
    else if (fam == "polynomial")
        opt.family = SampleFamily::Polynomial;
    else if (fam == "mixed")
        opt.family = SampleFamily::Mixed;
    else
        throw usage_error("--family must be blaschke, polynomial or mixed");

    const SampleSummary s = sample_batch(specs, opt);
    Report r;
    r.command = "sample";
    r.params = {{"functional", f.functional}, {"trials", std::to_string(f.trials)},
                {"degree", std::to_string(f.degree)}, {"seed", std::to_string(f.seed)}, {"family", fam}};
    r.constants["evaluations"] = static_cast<double>(s.evaluations);
    r.constants["mean_slack"] = s.mean_slack;
    r.constants["max_slack"] = s.max_slack;
    r.constants["argmin_trial"] = static_cast<double>(s.argmin_trial);
    for (std::size_t b = 0; b < s.histogram.size(); ++b) {
        char key[32];
        std::snprintf(key, sizeof key, "histogram_%02zu", b);
        r.constants[key] = static_cast<double>(s.histogram[b]);
    }
    r.params["argmin_functional"] = std::string(to_string(s.argmin_kind));
    for (const auto& v : s.violations) r.witnesses.push_back({static_cast<double>(v.trial), v.slack});
    r.min_slack = s.min_slack;
    r.verdict = s.violations.empty() ? Verdict::Verified : Verdict::Violated;
    r.elapsed_ms = since_ms(t0);
    emit(r, f.json, out);
    return exit_code(r.verdict);
}

} // namespace cli_detail

/// Runs one invocation; args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using namespace cli_detail;
    Flags f;
    CLI::App app{"Certified Bohr-type inequalities: constants, proofs, radii, scans and sampling", "bohr"};
    app.require_subcommand(1, 1);

    auto* constants = app.add_subcommand("constants", "Sharp constants and remark residuals");
    constants->add_flag("--json", f.json, "JSON output");
    constants->add_option("--tol", f.constants_tol, "Root isolation width")->default_val(1e-15);

    auto* verify = app.add_subcommand("verify", "Certify a theorem");
    verify->add_option("--theorem", f.theorem, "1, 2, 3, A, B1, B2 or classical")->required();
    verify->add_option("--lambda-override", f.lambda_override, "Replace lambda (theorems 1, 2)");
    verify->add_option("--p-override", f.p_override, "Replace p (theorem 3)");
    verify->add_option("--grid", f.grid_step, "Certificate grid step")->default_val(1e-4);
    verify->add_option("--refine", f.refine, "Divide the grid step by this factor")->default_val(1);
    verify->add_flag("--json", f.json, "JSON output");

    auto* radius = app.add_subcommand("radius", "Largest radius at which a functional stays <= 1");
    radius->add_option("--functional", f.functional, "classical, thmA, thmB1, thmB2, thm1, thm2 or thm3")->required();
    radius->add_option("--tol", f.radius_tol, "Bisection width")->default_val(1e-9);
    radius->add_option("--grid", f.family_grid, "Points of the |a0| grid")->default_val(10000);
    radius->add_option("--lambda-override", f.lambda_override, "Replace lambda (thm1, thm2)");
    radius->add_option("--p-override", f.p_override, "Replace p (thm3)");
    radius->add_flag("--json", f.json, "JSON output");

    auto* scan = app.add_subcommand("scan", "Tabulate a proof function as CSV");
    scan->add_option("--function", f.function,
                     "phi1, psi1, phi2, psi2, envelope1, envelope2, envelope3 or bombieri")
        ->required();
    scan->add_option("--from", f.from)->required();
    scan->add_option("--to", f.to)->required();
    scan->add_option("--step", f.step)->required();
    scan->add_option("--out", f.out, "CSV path, - for stdout")->default_val("-");
    scan->add_flag("--json", f.json, "JSON summary when writing to a file");

    auto* sample = app.add_subcommand("sample", "Random property trials");
    sample->add_option("--functional", f.functional, "A functional name or all")->default_val("all");
    sample->add_option("--trials", f.trials)->default_val(10000);
    sample->add_option("--degree", f.degree, "Maximal degree; trial i uses i mod (degree + 1)")->default_val(5);
    sample->add_option("--seed", f.seed)->default_val(0);
    sample->add_option("--family", f.family, "blaschke, polynomial or mixed")->default_val("blaschke");
    sample->add_flag("--json", f.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_verified;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_verified;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    // Stdout is written once, after the command has finished.
    std::ostringstream buffer;
    try {
        int code = exit_usage;
        if (*constants) code = cmd_constants(f, buffer);
        if (*verify) code = cmd_verify(f, buffer);
        if (*radius) code = cmd_radius(f, buffer);
        if (*scan) code = cmd_scan(f, buffer);
        if (*sample) code = cmd_sample(f, buffer);
        out << buffer.str();
        out.flush();
        if (!out) {
            err << "error: failed writing to stdout\n";
            return exit_usage;
        }
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace bohr
