// Command-line front end.
//
// Subcommands: spectrum, find-selfdual, find-pt, scan-lasing, verify-table1,
// dof. Options come from `--key value` flags and/or a flat `key = value`
// config file (`--config path`); flags override the file, unknown keys are
// errors. Exit codes: 0 success, 1 no solution / verification failure,
// 2 usage or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cpalaser/cpalaser.hpp"

namespace {

using namespace cpalaser;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct no_solution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* kUsage = R"(usage: cpalaser <subcommand> [--config <path>] [--key <value> ...]

subcommands:
  spectrum        sweep K and emit per-sample scattering data as CSV
                  keys: eta1 eta2 [kappa1 kappa2 L] K_min K_max steps
  scan-lasing     locate near-singular minima of the lasing residual (CSV)
                  keys: eta1 eta2 [kappa1 kappa2] K_min K_max steps
  find-selfdual   seed and refine self-dual points at fixed K
                  keys: eta1 eta2 K_target [max_solutions]
  find-pt         PT-symmetric self-dual point for eta1 = eta2 = n0
                  keys: n0 mode
  verify-table1   run the built-in reference configurations end to end
                  flags: [--seeds-only on]
  dof             parameter-counting report
                  flags: --n <int> [--pt on|off]

global keys: out (output path, default stdout), format (csv|records)
exit codes: 0 success, 1 no solution / verification failure, 2 usage error
)";

const std::set<std::string> kConfigKeys = {
    "eta1", "kappa1", "eta2", "kappa2", "L",       "K_min",         "K_max",
    "steps", "K_target", "n0", "mode",  "out",     "max_solutions", "format"};

struct Options {
    std::map<std::string, std::string> values;

    bool has(const std::string& k) const { return values.count(k) != 0; }

    std::string get(const std::string& k) const {
        auto it = values.find(k);
        if (it == values.end())
            throw usage_error("missing required key '" + k + "'");
        return it->second;
    }

    std::string get_or(const std::string& k, const std::string& dflt) const {
        auto it = values.find(k);
        return it == values.end() ? dflt : it->second;
    }

    double number(const std::string& k) const {
        try {
            return parse_double(get(k));
        } catch (const std::invalid_argument& e) {
            throw usage_error("key '" + k + "': " + e.what());
        }
    }

    double number_or(const std::string& k, double dflt) const {
        return has(k) ? number(k) : dflt;
    }

    long long integer(const std::string& k) const {
        try {
            return parse_int(get(k));
        } catch (const std::invalid_argument& e) {
            throw usage_error("key '" + k + "': " + e.what());
        }
    }
};

bool parse_on_off(const std::string& v, const std::string& key) {
    if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
    if (v == "off" || v == "false" || v == "0" || v == "no") return false;
    throw usage_error("key '" + key + "' expects on|off, got '" + v + "'");
}

Options collect_options(int argc, char** argv, const std::set<std::string>& extra_keys) {
    std::map<std::string, std::string> flags;
    for (int i = 2; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok.rfind("--", 0) != 0)
            throw usage_error("unexpected argument '" + tok + "'");
        const std::string key = tok.substr(2);
        if (key != "config" && !kConfigKeys.count(key) && !extra_keys.count(key))
            throw usage_error("unknown option '--" + key + "'");
        if (i + 1 >= argc) throw usage_error("option '--" + key + "' needs a value");
        flags[key] = argv[++i];
    }

    Options opt;
    if (auto it = flags.find("config"); it != flags.end()) {
        std::ifstream in(it->second);
        if (!in) throw usage_error("cannot open config file '" + it->second + "'");
        for (const KeyValue& kv : parse_key_values(in)) {
            if (!kConfigKeys.count(kv.key))
                throw usage_error("config line " + std::to_string(kv.line) +
                                  ": unknown key '" + kv.key + "'");
            opt.values[kv.key] = kv.value;
        }
        flags.erase("config");
    }
    for (auto& [k, v] : flags) opt.values[k] = v;  // flags override the file
    return opt;
}

// output sink: --out path or stdout
struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Sink(const Options& opt) {
        if (opt.has("out")) {
            file.open(opt.get("out"), std::ios::binary);
            if (!file) throw usage_error("cannot write output file '" + opt.get("out") + "'");
            os = &file;
        }
    }
    std::ostream& out() { return *os; }
};

BilayerSlab slab_from(const Options& opt) {
    try {
        BilayerSlab s{ComplexIndex{opt.number("eta1"), opt.number_or("kappa1", 0.0)},
                      ComplexIndex{opt.number("eta2"), opt.number_or("kappa2", 0.0)},
                      {}};
        if (opt.has("L")) s.thickness_um = opt.number("L");
        return s;
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
}

struct Window {
    double K_min, K_max;
    int steps;
};

Window window_from(const Options& opt) {
    Window w{opt.number("K_min"), opt.number("K_max"), int(opt.integer("steps"))};
    if (!(w.K_min > 0.0 && w.K_max > w.K_min))
        throw usage_error("invalid sweep window: need 0 < K_min < K_max");
    if (w.steps < 2) throw usage_error("steps must be >= 2");
    return w;
}

int cmd_spectrum(const Options& opt) {
    const BilayerSlab slab = slab_from(opt);
    const Window w = window_from(opt);
    if (opt.get_or("format", "csv") != "csv")
        throw usage_error("spectrum emits csv only");
    Sink sink(opt);

    const bool with_um = slab.thickness_um.has_value();
    std::string header = "K,lambda_over_L,T2,Rl2,Rr2,abs_m11_scaled,abs_m22_scaled,det_defect";
    if (with_um) header += ",lambda_um";
    sink.out() << header << '\n';

    const double inf = std::numeric_limits<double>::infinity();
    for (int i = 0; i < w.steps; ++i) {
        const double K = w.K_min + i * (w.K_max - w.K_min) / (w.steps - 1);
        const Wavenumber kw{K};
        const TransferMatrix m = transfer_matrix(slab, kw);
        double T2, Rl2, Rr2;
        try {
            const ScatteringAmplitudes amp = scattering(m);
            T2 = std::norm(amp.t);
            Rl2 = std::norm(amp.r_left);
            Rr2 = std::norm(amp.r_right);
        } catch (const spectral_singularity_error&) {
            T2 = Rl2 = Rr2 = inf;  // sample sits on a spectral singularity
        }
        std::vector<std::string> row = {
            format_sci(K),
            format_sci(kw.lambda_over_L()),
            format_sci(T2),
            format_sci(Rl2),
            format_sci(Rr2),
            format_sci(std::abs(cpa_residual(slab, kw))),
            format_sci(std::abs(ss_residual(slab, kw))),
            format_sci(std::abs(m.det() - 1.0)),
        };
        if (with_um) row.push_back(format_sci(2.0 * pi * *slab.thickness_um / K));
        sink.out() << csv_join(row);
    }
    return 0;
}

int cmd_scan_lasing(const Options& opt) {
    const BilayerSlab slab = slab_from(opt);
    const Window w = window_from(opt);
    if (opt.get_or("format", "csv") != "csv")
        throw usage_error("scan-lasing emits csv only");
    Sink sink(opt);

    const auto cands = scan_lasing(slab, w.K_min, w.K_max, w.steps);
    sink.out() << "K,abs_m22_scaled\n";
    for (const auto& c : cands)
        sink.out() << csv_join({format_sci(c.K), format_sci(c.depth)});
    return 0;
}

void emit_solutions(Sink& sink, const std::vector<SelfDualSolution>& sols,
                    const std::string& format,
                    const std::vector<std::string>& comments = {}) {
    if (format == "records") {
        for (const auto& c : comments) sink.out() << "# " << c << '\n';
        sink.out() << emit_solution_records(sols);
        return;
    }
    if (format != "csv") throw usage_error("format must be csv or records");
    sink.out() << "eta1,kappa1,eta2,kappa2,K,m_minus,m_plus,residual_ss,residual_cpa,"
                  "iterations,seed_kappa1,seed_kappa2,seed_residual\n";
    for (const auto& s : sols)
        sink.out() << csv_join({format_sci(s.n1.eta), format_sci(s.n1.kappa),
                                format_sci(s.n2.eta), format_sci(s.n2.kappa),
                                format_sci(s.K), format_int(s.m_minus),
                                format_int(s.m_plus), format_sci(s.residual_ss),
                                format_sci(s.residual_cpa), format_int(s.iterations),
                                format_sci(s.seed.kappa1), format_sci(s.seed.kappa2),
                                format_sci(s.seed.residual)});
}

int cmd_find_selfdual(const Options& opt) {
    const double eta1 = opt.number("eta1");
    const double eta2 = opt.number("eta2");
    const double K_target = opt.number("K_target");
    const int max_solutions =
        opt.has("max_solutions") ? int(opt.integer("max_solutions")) : 8;
    if (max_solutions < 1) throw usage_error("max_solutions must be >= 1");
    Sink sink(opt);

    if (!seed_scheme_trusted(K_target))
        std::cerr << "warning: K_target <= 100 is below the validity range of the "
                     "seed approximations; seeds may be poor\n";

    std::vector<ApproxSeed> seeds;
    try {
        seeds = generate_seeds(eta1, eta2, K_target);
    } catch (const near_pt_error& e) {
        throw usage_error(std::string(e.what()) + " (see the find-pt subcommand)");
    }

    std::vector<SelfDualSolution> accepted;
    double best_residual = std::numeric_limits<double>::infinity();
    for (const auto& seed : seeds) {
        const RefineOutcome out = refine(seed);
        best_residual = std::min(best_residual, out.residual_norm);
        if (!out.converged()) continue;
        if (!(out.solution.residual_ss < 1e-10 && out.solution.residual_cpa < 1e-10))
            continue;
        bool dup = false;
        for (const auto& s : accepted) dup = dup || same_solution(s, out.solution);
        if (!dup) accepted.push_back(out.solution);
    }

    std::sort(accepted.begin(), accepted.end(),
              [](const SelfDualSolution& a, const SelfDualSolution& b) {
                  const double ra = std::max(a.residual_ss, a.residual_cpa);
                  const double rb = std::max(b.residual_ss, b.residual_cpa);
                  if (ra != rb) return ra < rb;
                  return a.n1.kappa > b.n1.kappa;
              });
    if (int(accepted.size()) > max_solutions) accepted.resize(max_solutions);

    if (accepted.empty())
        throw no_solution_error("no seed converged to an accepted self-dual point; "
                                "best residual norm " + format_sci(best_residual));
    emit_solutions(sink, accepted, opt.get_or("format", "records"));
    return 0;
}

int cmd_find_pt(const Options& opt) {
    const double n0 = opt.number("n0");
    const int mode = int(opt.integer("mode"));
    Sink sink(opt);

    RefineOutcome out;
    try {
        out = pt_special_case(n0, mode);
    } catch (const std::domain_error& e) {
        throw usage_error(e.what());
    }
    if (!out.converged())
        throw no_solution_error("PT refinement failed: " + out.message);

    const PTReport rep = pt_diagnostics(out.solution.slab(), Wavenumber{out.solution.K});
    std::vector<std::string> diag = {
        "pt_re_m12_residual = " + format_sci(rep.re_m12_residual),
        "pt_re_m21_residual = " + format_sci(rep.re_m21_residual),
        "pt_diag_residual = " + format_sci(rep.diag_residual),
        "pt_continuity_residual = " + format_sci(rep.continuity_residual),
        "pt_continuity_sign = " + format_int(rep.continuity_sign),
    };
    emit_solutions(sink, {out.solution}, opt.get_or("format", "records"), diag);
    return 0;
}

int cmd_verify_table1(const Options& opt) {
    const bool seeds_only =
        opt.has("seeds-only") && parse_on_off(opt.get("seeds-only"), "seeds-only");
    Sink sink(opt);
    auto& os = sink.out();

    const ReferenceReport rep = verify_reference_table(seeds_only);
    int passed = 0;
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& row = rep.rows[i];
        os << "row " << (i + 1) << ": targets eta1 = " << row.ref.eta1
           << ", eta2 = " << row.ref.eta2 << ", K = 400*pi\n";
        os << "  seed   kappa1 = " << format_sci(row.best_seed.kappa1)
           << " (delta " << format_sci(row.seed_dk1) << ")"
           << ", kappa2 = " << format_sci(row.best_seed.kappa2)
           << " (delta " << format_sci(row.seed_dk2) << ")  "
           << (row.seed_ok ? "ok" : "FAIL") << '\n';
        if (!seeds_only) {
            os << "  refined n1 = " << format_sci(row.solution.n1.eta) << " + "
               << format_sci(row.solution.n1.kappa) << " i\n";
            os << "  refined n2 = " << format_sci(row.solution.n2.eta) << " + "
               << format_sci(row.solution.n2.kappa) << " i\n";
            os << "  deltas  d_eta = (" << format_sci(row.d_eta1) << ", "
               << format_sci(row.d_eta2) << ")  tol 2e-03  d_kappa = ("
               << format_sci(row.d_k1) << ", " << format_sci(row.d_k2)
               << ")  tol 2e-06  " << (row.refined_ok ? "ok" : "FAIL") << '\n';
            os << "  residuals ss = " << format_sci(row.solution.residual_ss)
               << ", cpa = " << format_sci(row.solution.residual_cpa) << "  "
               << (row.residual_ok ? "ok" : "FAIL") << '\n';
            os << "  conjugate pair " << (row.conjugate_ok ? "ok" : "FAIL") << '\n';
        }
        os << "  row " << (row.passed ? "PASS" : "FAIL") << '\n';
        passed += row.passed ? 1 : 0;
    }
    os << "rows passed: " << passed << "/" << rep.rows.size() << "  ("
       << format_sci(rep.elapsed_seconds) << " s)\n";
    return rep.all_passed ? 0 : 1;
}

int cmd_dof(const Options& opt) {
    const int n = int(opt.integer("n"));
    Sink sink(opt);
    auto& os = sink.out();

    std::vector<bool> variants;
    if (opt.has("pt"))
        variants.push_back(parse_on_off(opt.get("pt"), "pt"));
    else
        variants = {true, false};

    DofBreakdown first{};
    for (size_t i = 0; i < variants.size(); ++i) {
        DofBreakdown b;
        try {
            b = dof_breakdown(n, variants[i]);
        } catch (const std::domain_error& e) {
            throw usage_error(e.what());
        }
        if (i == 0) first = b;
        os << "[dof]\n";
        os << "n = " << b.n << '\n';
        os << "pt_symmetric = " << (b.pt_symmetric ? "on" : "off") << '\n';
        os << "total_real_parameters = " << b.total_real_parameters << '\n';
        os << "constraints = " << b.constraints << '\n';
        os << "dof = " << b.dof << '\n';
        os << "overdetermined = " << (b.overdetermined ? "yes" : "no") << '\n';
        if (i + 1 < variants.size()) os << '\n';
    }
    if (variants.size() == 2)
        os << "\nnon_pt_exceeds_pt = " << (first.non_pt_exceeds_pt ? "yes" : "no")
           << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << kUsage;
        return 2;
    }
    const std::string cmd = argv[1];
    if (cmd == "--help" || cmd == "-h" || cmd == "help") {
        std::cout << kUsage;
        return 0;
    }

    try {
        std::set<std::string> extra;
        if (cmd == "verify-table1") extra = {"seeds-only"};
        if (cmd == "dof") extra = {"n", "pt"};
        const Options opt = collect_options(argc, argv, extra);

        if (cmd == "spectrum") return cmd_spectrum(opt);
        if (cmd == "scan-lasing") return cmd_scan_lasing(opt);
        if (cmd == "find-selfdual") return cmd_find_selfdual(opt);
        if (cmd == "find-pt") return cmd_find_pt(opt);
        if (cmd == "verify-table1") return cmd_verify_table1(opt);
        if (cmd == "dof") return cmd_dof(opt);
        std::cerr << "unknown subcommand '" << cmd << "'\n" << kUsage;
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const no_solution_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
