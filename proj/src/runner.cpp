#include "orlab/runner.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "orlab/report.hpp"

namespace orlab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

Potential measure_from_config(const Config& cfg) {
    const std::string kind = cfg.get("measure", "kind");
    if (kind == "gaussian") return gaussian_potential();
    if (kind == "u_alpha") return build_u_alpha(cfg.get_number("measure", "alpha"));
    throw std::runtime_error("config: unknown measure kind '" + kind + "'");
}

std::vector<TestFunction> functions_from_config(const Config& cfg) {
    const std::string set = cfg.get_or("functions", "set", "standard12");
    if (set == "standard12") return standard_set();
    std::vector<TestFunction> fs;
    for (const std::string& spec : split(set, ','))
        fs.push_back(make_test_function(spec));
    if (fs.empty()) throw std::runtime_error("config: empty function set");
    return fs;
}

FamilySpec family_from_config(const Config& cfg, const Potential& mu,
                              const std::vector<TestFunction>& fs, double* c_estimate) {
    FamilySpec spec;
    const std::string fname = cfg.get("family", "F");
    if (fname == "log") {
        spec.F = f_log();
        spec.Fprime = f_log_prime();
    } else if (fname.rfind("beta:", 0) == 0) {
        const double beta = std::stod(fname.substr(5));
        spec.F = f_beta(beta);
        spec.Fprime = f_beta_prime(beta);
    } else {
        throw std::runtime_error("config: unknown family F '" + fname + "'");
    }
    spec.phi0 = make_young(cfg.get("family", "phi0"));
    spec.name = fname + "-" + spec.phi0.name;

    const std::string lam = cfg.get("family", "lambda");
    if (lam.rfind("gross:", 0) == 0) {
        const double rho = std::stod(lam.substr(6));
        spec.lambda = lam_gross(rho);
        spec.lambda_prime = lam_gross_prime(rho);
    } else if (lam.rfind("linear:", 0) == 0) {
        const double alpha = std::stod(lam.substr(7));
        spec.lambda = lam_linear(alpha);
        spec.lambda_prime = lam_linear_prime(alpha);
    } else if (lam == "auto") {
        // lambda'(t) <= 1/c with c the empirical F-Sobolev constant
        double c = 0.0;
        for (const TestFunction& f : fs) {
            const IneqEval e = eval_fsobolev(spec.F, spec.phi0, f, mu);
            if (std::abs(e.rhs) > 1e-12) c = std::max(c, e.lhs / e.rhs);
        }
        if (!(c > 0)) throw std::runtime_error("config: lambda=auto found no positive ratio");
        if (c_estimate) *c_estimate = c;
        spec.lambda = lam_linear(1.0 / c);
        spec.lambda_prime = lam_linear_prime(1.0 / c);
    } else {
        throw std::runtime_error("config: unknown family lambda '" + lam + "'");
    }
    return spec;
}

RunResult run_config(const Config& cfg, const std::string& out_dir) {
    RunResult out;
    std::filesystem::create_directories(out_dir);
    const std::string name = cfg.get("experiment", "name");
    const std::string kind = cfg.get_or("experiment", "kind", "gross");
    const std::string manifest = "hash=" + fnv1a_hex(cfg.emit());

    std::ostringstream summary;
    summary << "experiment: " << name << "\nkind: " << kind << "\nmanifest: " << manifest
            << "\n";

    if (kind == "gross") {
        const Potential mu = measure_from_config(cfg);
        const std::vector<TestFunction> fs = functions_from_config(cfg);
        double c_est = 0.0;
        const FamilySpec spec = family_from_config(cfg, mu, fs, &c_est);
        const StandardOrliczFamily fam = build_family(spec);
        const double t_max = cfg.get_number_or("time", "t_max", 2.0);
        const int steps = static_cast<int>(cfg.get_number_or("time", "steps", 20));
        std::vector<double> tg(steps + 1);
        for (int i = 0; i <= steps; ++i) tg[i] = t_max * i / steps;

        Propagator prop = mu.rule.gaussian
                              ? Propagator::mehler(mu)
                              : Propagator::grid_cn(mu);
        HyperExperiment exp;
        exp.family = &fam;
        exp.mu = &mu;
        exp.prop = &prop;
        exp.fs = fs;
        exp.t_grid = tg;
        exp.eps_mono = cfg.get_number_or("tolerances", "mono_eps", 0.0);
        const GrossReport rep = gross_orlicz_verify(exp);

        Table table({"f_id", "t", "norm"});
        for (const auto& fr : rep.per_function)
            for (const auto& row : fr.rows)
                table.add_row({fr.f_id, format_number(row.t), format_number(row.norm)});
        const std::string tpath = out_dir + "/" + name + "_monotonicity.csv";
        write_text(tpath, "# manifest: " + manifest + " t_max=" + format_number(t_max) +
                              " steps=" + std::to_string(steps) +
                              " eps_mono=" + format_number(rep.eps_mono) + "\n" +
                              table.render());
        out.report_paths.push_back(tpath);

        summary << "eps_mono: " << format_number(rep.eps_mono) << "\n";
        if (c_est > 0) summary << "estimated_c: " << format_number(c_est) << "\n";
        summary << "fsobolev_c: " << format_number(rep.fsob_c)
                << "\nfsobolev_worst_ratio: " << format_number(rep.fsob_worst_ratio) << "\n";
        for (const auto& fr : rep.per_function)
            summary << "monotone " << fr.f_id << ": " << (fr.pass ? "pass" : "FAIL")
                    << " (worst_drop=" << format_number(fr.worst_drop) << ")\n";
        summary << "overall: " << (rep.pass ? "pass" : "FAIL") << "\n";
        out.status = rep.pass ? 0 : 1;
    } else if (kind == "inhomog") {
        const double beta = cfg.get_number("measure", "beta");
        const double rate = cfg.get_number("measure", "rate");
        const PotentialFamily fam = builtin_inhomog_family(beta, rate);
        const double p = cfg.get_number_or("inhomog", "p", 2.0);
        const double s = cfg.get_number_or("inhomog", "s", 0.0);
        const double t = cfg.get_number_or("inhomog", "t", 1.0);
        const std::vector<TestFunction> fs = functions_from_config(cfg);
        const InhomogVerifyReport rep = inhomog_verify(fam, p, fs, s, t);

        Table table({"f_id", "lhs", "rhs", "pass"});
        for (const auto& row : rep.rows)
            table.add_row({row.f_id, format_number(row.lhs), format_number(row.rhs),
                           row.pass ? "1" : "0"});
        const std::string tpath = out_dir + "/" + name + "_verify.csv";
        write_text(tpath, "# manifest: " + manifest + " p=" + format_number(p) +
                              " s=" + format_number(s) + " t=" + format_number(t) + "\n" +
                              table.render());
        out.report_paths.push_back(tpath);
        summary << "q_s: " << format_number(rep.q_s) << "\nq_t: " << format_number(rep.q_t)
                << "\nm: " << format_number(rep.m) << "\n";
        for (const auto& row : rep.rows)
            summary << "verify " << row.f_id << ": " << (row.pass ? "pass" : "FAIL") << "\n";
        summary << "overall: " << (rep.pass ? "pass" : "FAIL") << "\n";
        out.status = rep.pass ? 0 : 1;
    } else {
        throw std::runtime_error("config: unknown experiment kind '" + kind + "'");
    }

    const std::string spath = out_dir + "/" + name + "_summary.txt";
    write_text(spath, summary.str());
    out.report_paths.push_back(spath);
    out.summary = summary.str();
    return out;
}

RunResult run(const std::string& config_path) {
    const Config cfg = Config::parse_file(config_path);
    const std::string out_dir = cfg.get_or("output", "dir", "out");
    return run_config(cfg, out_dir);
}

}  // namespace orlab
