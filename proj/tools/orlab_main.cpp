#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "orlab/certify.hpp"
#include "orlab/report.hpp"
#include "orlab/runner.hpp"

using namespace orlab;

int main(int argc, char** argv) {
    CLI::App app{"orlab: Orlicz-norm contraction experiments for diffusion semigroups"};
    app.require_subcommand(1);

    // run
    auto* cmd_run = app.add_subcommand("run", "execute a config-driven experiment");
    std::string config_path;
    cmd_run->add_option("config", config_path, "experiment config file")->required();

    // norm
    auto* cmd_norm = app.add_subcommand("norm", "Luxembourg norm of a test function");
    std::string phi_spec = "lp:2", measure_spec = "gaussian", f_spec = "x";
    double alpha_param = 1.5;
    cmd_norm->add_option("--phi", phi_spec, "Young function (e.g. lp:4, l1logl1, ubg)");
    cmd_norm->add_option("--measure", measure_spec, "gaussian | u_alpha");
    cmd_norm->add_option("--alpha", alpha_param, "alpha for u_alpha");
    cmd_norm->add_option("--f", f_spec, "test function (e.g. x, exp:1, const:2)");

    // family-build
    auto* cmd_fam = app.add_subcommand("family-build", "build a standard family and evaluate");
    std::string F_name = "log", phi0_spec = "lp:2", lambda_spec = "linear:1", eval_spec;
    cmd_fam->add_option("--F", F_name, "log | beta:<b>");
    cmd_fam->add_option("--phi0", phi0_spec, "base Young function");
    cmd_fam->add_option("--lambda", lambda_spec, "linear:<a> | gross:<rho>");
    cmd_fam->add_option("--eval", eval_spec, "t=<t>,x=<x> evaluation point")->required();

    // evolve
    auto* cmd_evolve = app.add_subcommand("evolve", "apply the semigroup to a function");
    std::string ev_measure = "gaussian", ev_f = "exp:1", ev_out;
    double ev_t = 0.5, ev_alpha = 1.5;
    cmd_evolve->add_option("--measure", ev_measure, "gaussian | u_alpha");
    cmd_evolve->add_option("--alpha", ev_alpha, "alpha for u_alpha");
    cmd_evolve->add_option("--f", ev_f, "test function");
    cmd_evolve->add_option("--t", ev_t, "time");
    cmd_evolve->add_option("--out", ev_out, "output file (two-column x, value)");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "norm-monotonicity certification");
    std::string vf_F = "log", vf_phi0 = "lp:2", vf_lambda = "gross:2",
                vf_measure = "gaussian", vf_functions = "standard12";
    double vf_tmax = 2.0, vf_alpha = 1.5;
    int vf_steps = 20;
    cmd_verify->add_option("--F", vf_F);
    cmd_verify->add_option("--phi0", vf_phi0);
    cmd_verify->add_option("--lambda", vf_lambda, "linear:<a> | gross:<rho> | auto");
    cmd_verify->add_option("--measure", vf_measure);
    cmd_verify->add_option("--alpha", vf_alpha);
    cmd_verify->add_option("--functions", vf_functions);
    cmd_verify->add_option("--tmax", vf_tmax);
    cmd_verify->add_option("--steps", vf_steps);

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "hyper-boundedness factor m");
    double b_beta = 1.0, b_betap = 0.5, b_c = 1.0, b_s = 1.0, b_t = 1.0;
    cmd_bound->add_option("--beta", b_beta);
    cmd_bound->add_option("--beta-prime", b_betap);
    cmd_bound->add_option("--c", b_c);
    cmd_bound->add_option("--s", b_s);
    cmd_bound->add_option("--t", b_t);

    // tail
    auto* cmd_tail = app.add_subcommand("tail", "Gaussian level-set tails of P_t f");
    double t_a = 3.0, t_t = 0.5, t_smin = 2.0, t_smax = 1000.0;
    int t_n = 40;
    cmd_tail->add_option("--a", t_a, "witness exponent of e^{a x/2}");
    cmd_tail->add_option("--t", t_t);
    cmd_tail->add_option("--smin", t_smin);
    cmd_tail->add_option("--smax", t_smax);
    cmd_tail->add_option("--n", t_n, "number of s grid points");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_run) {
            const RunResult r = run(config_path);
            std::cout << r.summary;
            for (const auto& p : r.report_paths) std::cout << "wrote " << p << "\n";
            return r.status;
        }
        if (*cmd_norm) {
            const Potential mu = measure_spec == "gaussian" ? gaussian_potential()
                                                            : build_u_alpha(alpha_param);
            const TestFunction f = make_test_function(f_spec);
            const NormResult r = luxembourg_norm(f.f, make_young(phi_spec), mu);
            if (r.infinite) {
                std::cout << "inf\n";
                return 0;
            }
            std::cout << format_number(r.value) << "\n";
            return 0;
        }
        if (*cmd_fam) {
            double t = 0.0, x = 1.0;
            for (const auto& part : {std::string("t"), std::string("x")}) {
                const auto pos = eval_spec.find(part + "=");
                if (pos == std::string::npos)
                    throw std::runtime_error("--eval needs t=<t>,x=<x>");
                const double v = std::stod(eval_spec.substr(pos + 2));
                (part == "t" ? t : x) = v;
            }
            FamilySpec spec;
            if (F_name == "log") {
                spec.F = f_log();
                spec.Fprime = f_log_prime();
            } else if (F_name.rfind("beta:", 0) == 0) {
                const double bb = std::stod(F_name.substr(5));
                spec.F = f_beta(bb);
                spec.Fprime = f_beta_prime(bb);
            } else {
                throw std::runtime_error("unknown F '" + F_name + "'");
            }
            spec.phi0 = make_young(phi0_spec);
            spec.name = F_name;
            if (lambda_spec.rfind("linear:", 0) == 0) {
                const double a = std::stod(lambda_spec.substr(7));
                spec.lambda = lam_linear(a);
                spec.lambda_prime = lam_linear_prime(a);
            } else if (lambda_spec.rfind("gross:", 0) == 0) {
                const double rho = std::stod(lambda_spec.substr(6));
                spec.lambda = lam_gross(rho);
                spec.lambda_prime = lam_gross_prime(rho);
            } else {
                throw std::runtime_error("unknown lambda '" + lambda_spec + "'");
            }
            const StandardOrliczFamily fam = build_family(spec);
            std::cout << format_number(fam.eval(t, x)) << "\n";
            return 0;
        }
        if (*cmd_evolve) {
            const Potential mu = ev_measure == "gaussian" ? gaussian_potential()
                                                          : build_u_alpha(ev_alpha);
            const TestFunction f = make_test_function(ev_f);
            Propagator prop = mu.rule.gaussian ? Propagator::mehler(mu)
                                               : Propagator::grid_cn(mu);
            const GridFunction g = prop.apply(f.f, ev_t);
            const std::string text = grid_to_text(g);
            if (ev_out.empty())
                std::cout << text;
            else
                write_text(ev_out, text);
            return 0;
        }
        if (*cmd_verify) {
            Config cfg;
            cfg.set("experiment", "name", "cli_verify");
            cfg.set("experiment", "kind", "gross");
            cfg.set("measure", "kind", vf_measure);
            cfg.set("measure", "alpha", format_number(vf_alpha));
            cfg.set("family", "F", vf_F);
            cfg.set("family", "phi0", vf_phi0);
            cfg.set("family", "lambda", vf_lambda);
            cfg.set("functions", "set", vf_functions);
            cfg.set("time", "t_max", format_number(vf_tmax));
            cfg.set("time", "steps", std::to_string(vf_steps));
            const RunResult r = run_config(cfg, "out_cli_verify");
            std::cout << r.summary;
            return r.status;
        }
        if (*cmd_bound) {
            const HyperboundResult r = hyperbound_factor(b_beta, b_betap, b_c, b_s, b_t);
            std::cout << format_number(r.m_closed) << "\n";
            std::cerr << "numeric path check: m=" << format_number(r.m_numeric)
                      << " rel_gap=" << format_number(r.rel_gap) << "\n";
            return r.within_1pct ? 0 : 1;
        }
        if (*cmd_tail) {
            const Potential mu = gaussian_potential();
            Propagator prop = Propagator::mehler(mu);
            std::vector<double> sg(t_n);
            for (int i = 0; i < t_n; ++i)
                sg[i] = t_smin * std::pow(t_smax / t_smin, static_cast<double>(i) / (t_n - 1));
            const TailReport rep =
                talagrand_tail(tf_expahalf(t_a), t_t, sg, mu, prop);
            std::cout << "s,gamma_level,product,markov\n";
            for (const auto& row : rep.rows)
                std::cout << format_number(row.s) << "," << format_number(row.gamma_level)
                          << "," << format_number(row.product) << ","
                          << format_number(row.markov) << "\n";
            std::cerr << "sup_product=" << format_number(rep.sup_product)
                      << " markov_max=" << format_number(rep.markov_max) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
