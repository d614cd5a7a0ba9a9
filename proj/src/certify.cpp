#include "orlab/certify.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace orlab {

int worker_count() {
    const char* env = std::getenv("ORLAB_WORKERS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n > 1 ? n : 1;
}

void parallel_for_ordered(int n, const std::function<void(int)>& body) {
    const int workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

namespace {

double golden_max(const RealFn& fn, double lo, double hi, int iters = 90) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < iters; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = fn(x1);
        }
    }
    return std::max(f1, f2);
}

/// Grid sup with golden refinement around the best grid point.
double refined_sup(const RealFn& fn, double lo, double hi, int grid_n) {
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    const double h = (hi - lo) / (grid_n - 1);
    for (int i = 0; i < grid_n; ++i) {
        const double v = fn(lo + i * h);
        if (v > best) {
            best = v;
            best_i = i;
        }
    }
    const double a = lo + std::max(0, best_i - 1) * h;
    const double b = lo + std::min(grid_n - 1, best_i + 1) * h;
    return std::max(best, golden_max(fn, a, b));
}

/// Samples of |f| at the nodes the measure integrates against.
Eigen::ArrayXd norm_samples(const RealFn& f, const Potential& mu) {
    const Eigen::ArrayXd& nodes = mu.rule.gaussian ? mu.rule.hermite.nodes : mu.mu_nodes;
    Eigen::ArrayXd s(nodes.size());
    for (int i = 0; i < nodes.size(); ++i) s(i) = std::abs(f(nodes(i)));
    return s;
}

const Eigen::ArrayXd& norm_weights(const Potential& mu) {
    return mu.rule.gaussian ? mu.rule.hermite.weights : mu.mu_weights;
}

/// Luxembourg norm from cached samples (monotone bisection as in luxnorm).
double norm_from_samples(const Eigen::ArrayXd& samples, const Eigen::ArrayXd& weights,
                         const YoungFunction& phi) {
    auto modular = [&](double lam) {
        double acc = 0.0;
        for (int i = 0; i < samples.size(); ++i) {
            acc += weights(i) * phi.eval(samples(i) / lam);
            if (std::isinf(acc)) return acc;
        }
        return acc;
    };
    double hi = 1.0;
    int guard = 0;
    while (!(modular(hi) < 1.0)) {
        hi *= 2.0;
        if (++guard > 200) throw std::runtime_error("norm_from_samples: infinite norm");
    }
    double lo = hi;
    guard = 0;
    while (modular(lo) < 1.0) {
        lo *= 0.5;
        if (++guard > 600) return 0.0;
    }
    double best = hi;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (modular(mid) <= 1.0) {
            hi = mid;
            best = mid;
        } else {
            lo = mid;
        }
        if (hi - lo <= 1e-14 * hi) break;
    }
    return best;
}

double lq_norm(const GridFunction& u, const Potential& mu, double q) {
    double acc = 0.0;
    for (int i = 0; i < mu.mu_nodes.size(); ++i)
        acc += mu.mu_weights(i) * std::pow(std::abs(u(mu.mu_nodes(i))), q);
    return std::pow(acc, 1.0 / q);
}

}  // namespace

GrossReport gross_orlicz_verify(const HyperExperiment& exp) {
    if (!exp.family || !exp.mu || !exp.prop)
        throw std::invalid_argument("gross_orlicz_verify: incomplete experiment");
    for (size_t i = 0; i + 1 < exp.t_grid.size(); ++i)
        if (!(exp.t_grid[i] < exp.t_grid[i + 1]))
            throw std::invalid_argument("gross_orlicz_verify: time grid must increase");
    GrossReport rep;
    const int nf = static_cast<int>(exp.fs.size());
    rep.per_function.resize(nf);

    parallel_for_ordered(nf, [&](int fi) {
        const TestFunction& f = exp.fs[fi];
        GrossFunctionResult res;
        res.f_id = f.id;
        if (exp.prop->kind() == PropagatorKind::mehler_ou) {
            // pointwise Mehler values directly at the norm quadrature nodes
            for (double t : exp.t_grid) {
                auto ptf = [&](double x) { return exp.prop->apply_at(f.f, t, x); };
                const Eigen::ArrayXd s = norm_samples(ptf, *exp.mu);
                res.rows.push_back({t, norm_from_samples(s, norm_weights(*exp.mu),
                                                         exp.family->young_at(t))});
            }
            // error estimate: refined quadrature at the final time
            {
                const double t = exp.t_grid.back();
                Potential fine = *exp.mu;
                fine.rule = fine.rule.refined();
                auto ptf = [&](double x) { return exp.prop->apply_at(f.f, t, x); };
                const Eigen::ArrayXd s = norm_samples(ptf, fine);
                const double nfine =
                    norm_from_samples(s, norm_weights(fine), exp.family->young_at(t));
                res.err_est = std::abs(nfine - res.rows.back().norm);
            }
        } else {
            const std::vector<GridFunction> traj = exp.prop->trajectory(f.f, exp.t_grid);
            for (size_t k = 0; k < exp.t_grid.size(); ++k) {
                auto ptf = [&](double x) { return traj[k](x); };
                const Eigen::ArrayXd s = norm_samples(ptf, *exp.mu);
                res.rows.push_back({exp.t_grid[k],
                                    norm_from_samples(s, norm_weights(*exp.mu),
                                                      exp.family->young_at(exp.t_grid[k]))});
            }
            // error estimate: refined march + refined quadrature at the final time
            {
                Propagator fine_prop =
                    Propagator::grid_cn(exp.prop->potential(), 8193, 2048);
                const GridFunction uf = fine_prop.apply(f.f, exp.t_grid.back());
                Potential fine = *exp.mu;
                fine.rule.panels = fine.rule.panels.refined();
                double lz;
                Eigen::ArrayXd w(fine.rule.panels.nodes.size());
                for (int i = 0; i < fine.rule.panels.nodes.size(); ++i)
                    w(i) = fine.rule.panels.weights(i) * std::exp(-fine.V(fine.rule.panels.nodes(i)));
                lz = w.sum();
                w /= lz;
                Eigen::ArrayXd s(fine.rule.panels.nodes.size());
                for (int i = 0; i < fine.rule.panels.nodes.size(); ++i)
                    s(i) = std::abs(uf(fine.rule.panels.nodes(i)));
                const double nfine =
                    norm_from_samples(s, w, exp.family->young_at(exp.t_grid.back()));
                res.err_est = std::abs(nfine - res.rows.back().norm);
            }
        }
        double worst = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k + 1 < res.rows.size(); ++k)
            worst = std::min(worst, res.rows[k].norm - res.rows[k + 1].norm);
        res.worst_drop = -worst;  // positive value = an increase happened
        rep.per_function[fi] = std::move(res);
    });

    double err = 0.0;
    for (const auto& r : rep.per_function) err = std::max(err, r.err_est);
    rep.eps_mono = exp.eps_mono > 0 ? exp.eps_mono : std::max(5.0 * err, 1e-9);
    rep.pass = true;
    for (auto& r : rep.per_function) {
        r.pass = r.worst_drop <= rep.eps_mono;
        rep.pass = rep.pass && r.pass;
    }

    // (ii) => (i): the t=0 functional inequality with c = 1/lambda'(0)
    rep.fsob_c = 1.0 / exp.family->spec().lambda_prime(0.0);
    rep.fsob_worst_ratio = 0.0;
    for (const TestFunction& f : exp.fs) {
        const IneqEval e = eval_fsobolev(exp.family->spec().F, exp.family->spec().phi0, f, *exp.mu);
        if (std::abs(e.rhs) < 1e-12) continue;  // constants: both sides vanish
        rep.fsob_worst_ratio = std::max(rep.fsob_worst_ratio, e.lhs / (rep.fsob_c * e.rhs));
    }
    rep.fsob_pass = rep.fsob_worst_ratio <= 1.0 + 1e-5;
    return rep;
}

DEpsilonResult d_epsilon(double beta, double beta_prime, double eps, int grid_n) {
    if (!(eps > 0) || !(beta_prime > 0) || !(beta_prime < beta) || !(beta <= 1))
        throw std::invalid_argument("d_epsilon: need 0 < beta' < beta <= 1 and eps > 0");
    DEpsilonResult out;
    const double l2 = std::log(2.0);
    const double expnt = beta_prime / (beta - beta_prime);
    out.value = -std::pow(l2, beta_prime) + eps * std::pow(l2, beta) +
                std::pow(beta_prime / beta, expnt) * ((beta - beta_prime) / beta) *
                    std::pow(1.0 / eps, expnt);
    const RealFn fb = f_beta(beta), fbp = f_beta(beta_prime);
    double worst = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double x = std::pow(10.0, -8.0 + 26.0 * i / (grid_n - 1));
        worst = std::min(worst, eps * fb(x) + out.value - fbp(x));
    }
    out.worst_violation = worst;
    out.grid_ok = worst >= -1e-10;
    return out;
}

HyperboundResult hyperbound_factor(double beta, double beta_prime, double c,
                                   double s, double t, int segments) {
    if (!(beta_prime > 0 && beta_prime < beta && beta <= 1))
        throw std::invalid_argument("hyperbound_factor: need 0 < beta' < beta <= 1");
    if (!(t > 0) || s < 0 || !(c > 0))
        throw std::invalid_argument("hyperbound_factor: need t > 0, s >= 0, c > 0");
    HyperboundResult out;
    const double l2 = std::log(2.0);
    const double p = beta / (beta - beta_prime);
    const double expnt = beta_prime / (beta - beta_prime);
    const double cbb = std::pow(beta_prime / beta, expnt) * (beta - beta_prime) / beta;
    out.m_closed = std::exp((1.0 / c) * (-s * std::pow(l2, beta_prime) + t * std::pow(l2, beta) +
                                         cbb * std::pow(s, p) * std::pow(t, -expnt)));

    // numeric minimization of sum h phi(dq_i/h) over increments dq >= 0
    // summing to s; phi(r) = -r log2^{b'} + log2^{b} + C r^{p} is convex
    const double h = t / segments;
    auto phi = [&](double r) {
        return -r * std::pow(l2, beta_prime) + std::pow(l2, beta) + cbb * std::pow(r, p);
    };
    auto dphi = [&](double r) {
        return -std::pow(l2, beta_prime) + cbb * p * std::pow(r, p - 1);
    };
    Eigen::ArrayXd dq(segments);
    for (int i = 0; i < segments; ++i) dq(i) = 2.0 * s * (i + 1) / (segments * (segments + 1.0));
    if (s == 0.0) dq.setZero();
    auto total = [&](const Eigen::ArrayXd& d) {
        double acc = 0.0;
        for (int i = 0; i < segments; ++i) acc += h * phi(d(i) / h);
        return acc;
    };
    if (s > 0) {
        for (int it = 0; it < 4000; ++it) {
            Eigen::ArrayXd g(segments);
            double d2max = 0.0;
            for (int i = 0; i < segments; ++i) {
                const double r = dq(i) / h;
                g(i) = dphi(r);
                d2max = std::max(d2max, cbb * p * (p - 1) * std::pow(std::max(r, 1e-12), p - 2) / h);
            }
            const double gmean = g.mean();
            const double eta = 0.5 / std::max(d2max, 1e-12);
            Eigen::ArrayXd next = dq - eta * (g - gmean);
            next = next.max(1e-12 * s / segments);
            next *= s / next.sum();
            const double move = (next - dq).abs().maxCoeff();
            dq = next;
            if (move < 1e-15 * s) break;
        }
    }
    out.m_numeric = std::exp(total(dq) / c);
    out.rel_gap = std::abs(out.m_numeric - out.m_closed) / out.m_closed;
    const double slope_ref = s / t;
    double dev = 0.0;
    for (int i = 0; i < segments; ++i)
        dev = std::max(dev, std::abs(dq(i) / h - slope_ref) / (slope_ref > 0 ? slope_ref : 1.0));
    out.max_slope_dev = dev;
    out.within_1pct = out.rel_gap <= 0.01;
    return out;
}

PerturbReport perturb_transport_check(const StandardOrliczFamily& psi_fam,
                                      const YoungFunction& F, const TestFunction& f,
                                      const Potential& mu, const Propagator& prop,
                                      double t, double tol) {
    PerturbReport rep;
    rep.f_id = f.id;
    auto composite = [&](double tt) {
        YoungFunction y;
        y.name = "psi_o_F";
        const StandardOrliczFamily* fam = &psi_fam;
        auto Feval = F.eval;
        auto Finv = F.inverse;
        y.eval = [fam, tt, Feval](double x) { return fam->eval(tt, Feval(x)); };
        y.inverse = [fam, tt, Finv](double v) { return Finv(fam->inverse(tt, v)); };
        y.deriv1 = [](double) -> double {
            throw std::logic_error("composite young: derivative unused");
        };
        y.deriv2 = y.deriv1;
        return y;
    };
    const GridFunction ptf = prop.apply(f.f, t);
    auto ptf_fn = [&](double x) { return ptf(x); };
    const Eigen::ArrayXd s_t = norm_samples(ptf_fn, mu);
    const Eigen::ArrayXd s_0 = norm_samples(f.f, mu);
    rep.lhs = norm_from_samples(s_t, norm_weights(mu), composite(t));
    rep.rhs = norm_from_samples(s_0, norm_weights(mu), composite(0.0));
    rep.pass = rep.lhs <= rep.rhs + tol;
    return rep;
}

InhomogConstants inhomog_constants(const PotentialFamily& fam,
                                   const std::vector<double>& t_grid, int grid_n) {
    InhomogConstants k;
    k.t_grid = t_grid;
    const double R = fam.half_width;
    for (double t : t_grid) {
        const double at = refined_sup(
            [&](double x) { return neg_part(fam.Vdot(t, x)); }, -R, R, grid_n);
        const double bt = refined_sup(
            [&](double x) { return std::abs(fam.dVdot(t, x)); }, -R, R, grid_n);
        const double ct = refined_sup(
            [&](double x) {
                return neg_part(fam.dV(t, x) * fam.dVdot(t, x) - fam.d2Vdot(t, x));
            },
            -R, R, grid_n);
        const double rho = -refined_sup(
            [&](double x) { return -fam.d2V(t, x); }, -R, R, grid_n);
        if (!std::isfinite(at) || !std::isfinite(bt) || !std::isfinite(ct))
            throw std::runtime_error("inhomog_constants: constant diverges on the grid");
        k.a.push_back(at);
        k.b.push_back(bt);
        k.c.push_back(ct);
        k.rho.push_back(rho);
        k.rho_bar.push_back(rho > 0 ? rho_bar_bakry_emery(rho)
                                    : std::numeric_limits<double>::quiet_NaN());
    }
    return k;
}

double rho_bar_bakry_emery(double rho) {
    if (!(rho > 0)) throw std::domain_error("rho_bar_bakry_emery: rho > 0 required");
    return 2.0 / rho;
}

double rho_bar_holley_stroock(double base, double osc) { return base * std::exp(osc); }

namespace {

/// Trapezoid of samples y on the sub-range [s,t] of the grid (linear
/// interpolation at the cut points).
double trapezoid_between(const std::vector<double>& grid, const std::vector<double>& y,
                         double s, double t) {
    if (t <= s) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double lo = std::max(grid[i], s), hi = std::min(grid[i + 1], t);
        if (hi <= lo) continue;
        const double h = grid[i + 1] - grid[i];
        auto at = [&](double u) {
            const double w = (u - grid[i]) / h;
            return y[i] * (1 - w) + y[i + 1] * w;
        };
        acc += 0.5 * (at(lo) + at(hi)) * (hi - lo);
    }
    return acc;
}

}  // namespace

QmResult inhomog_qm(double p, const InhomogConstants& k, double s, double t) {
    if (!(p > 1)) throw std::invalid_argument("inhomog_qm: p > 1 required");
    if (!(s <= t)) throw std::invalid_argument("inhomog_qm: s <= t required");
    for (size_t i = 0; i < k.t_grid.size(); ++i) {
        if (k.t_grid[i] > t) break;
        if (!(k.rho_bar[i] > 0))
            throw std::runtime_error("inhomog_qm: rho_bar <= 0 on [0,t]");
    }
    const size_t n = k.t_grid.size();
    std::vector<double> inv_rb(n);
    for (size_t i = 0; i < n; ++i) inv_rb[i] = 2.0 / k.rho_bar[i];
    auto q_of = [&](double u) {
        return 1.0 + (p - 1.0) * std::exp(trapezoid_between(k.t_grid, inv_rb, 0.0, u));
    };
    QmResult out;
    out.q_s = q_of(s);
    out.q_t = q_of(t);
    std::vector<double> integrand(n);
    for (size_t i = 0; i < n; ++i) {
        const double u = k.t_grid[i];
        const double q = q_of(u);
        const double rho = k.rho[i];
        const double bterm = rho != 0.0 ? (1.0 - std::exp(-rho * u)) / (2.0 * rho) : u / 2.0;
        integrand[i] = k.a[i] / q + u * k.c[i] + k.b[i] * k.b[i] * bterm * (q - 1.0);
    }
    out.m = std::exp(trapezoid_between(k.t_grid, integrand, s, t));
    return out;
}

double inhomog_qm_general(const Main2Coefficients& k, int mode, double s, double t,
                          int quad_n) {
    if (mode != 1 && mode != 2)
        throw std::invalid_argument("inhomog_qm_general: mode must be 1 or 2");
    auto I_of = [&](double u) {
        // int_0^u e^{(c'_v - rho_v) v} dv by trapezoid
        const int n = 256;
        double acc = 0.0;
        double prev = std::exp((k.c_prime(0.0) - k.rho(0.0)) * 0.0);
        for (int i = 1; i <= n; ++i) {
            const double v = u * i / n;
            const double cur = std::exp((k.c_prime(v) - k.rho(v)) * v);
            acc += 0.5 * (prev + cur) * (u / n);
            prev = cur;
        }
        return acc;
    };
    double acc = 0.0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i <= quad_n; ++i) {
        const double u = s + (t - s) * i / quad_n;
        double val;
        if (mode == 1) {
            const double denom = 1.0 - k.delta(u) - k.rho_bar(u);
            if (!(denom > 0))
                throw std::runtime_error(
                    "inhomog_qm_general: hypothesis rho_bar < 1 - delta violated at u=" +
                    std::to_string(u));
            const double rho = k.rho(u);
            const double bfac =
                k.b(u) * (rho != 0.0 ? (1.0 - std::exp(-rho * u)) / rho : u);
            val = k.Fc(u) + bfac * bfac * (k.D(u) + k.E(u)) / (2.0 * denom) +
                  k.c_sup(u) * k.B(u) * u;
        } else {
            const double I = I_of(u);
            if (!(k.delta_p(u) * I < 1.0))
                throw std::runtime_error(
                    "inhomog_qm_general: hypothesis delta' int e^{(c'-rho)v} dv < 1 violated at u=" +
                    std::to_string(u));
            const double denom = 1.0 - k.delta(u) - k.rho_bar(u) - k.delta_p(u) * I;
            if (!(denom > 0))
                throw std::runtime_error(
                    "inhomog_qm_general: denominator 1 - delta - rho_bar - delta' I <= 0 at u=" +
                    std::to_string(u));
            val = I * I * k.b(u) * (k.D(u) + k.E(u)) / (2.0 * denom) +
                  I * (k.B(u) * k.Fp(u) + k.Fc(u));
        }
        if (i == 0) {
            prev = val;
            continue;
        }
        acc += 0.5 * (prev + val) * (t - s) / quad_n;
        prev = val;
    }
    return std::exp(acc);
}

InhomogVerifyReport inhomog_verify(const PotentialFamily& fam, double p,
                                   const std::vector<TestFunction>& fs, double s, double t,
                                   int t_samples, double tol) {
    InhomogVerifyReport rep;
    std::vector<double> tg(t_samples);
    for (int i = 0; i < t_samples; ++i) tg[i] = t * i / (t_samples - 1);
    const InhomogConstants k = inhomog_constants(fam, tg);
    const QmResult qm = inhomog_qm(p, k, s, t);
    rep.q_s = qm.q_s;
    rep.q_t = qm.q_t;
    rep.m = qm.m;
    const Potential mu_t = fam.at(t);
    const Potential mu_s = fam.at(s);
    rep.pass = true;
    for (const TestFunction& f : fs) {
        InhomogVerifyRow row;
        row.f_id = f.id;
        const GridFunction ut = frozen_apply(f.f, t, t, fam);
        row.lhs = lq_norm(ut, mu_t, qm.q_t);
        if (s == 0.0) {
            double acc = 0.0;
            for (int i = 0; i < mu_s.mu_nodes.size(); ++i)
                acc += mu_s.mu_weights(i) * std::pow(std::abs(f.f(mu_s.mu_nodes(i))), qm.q_s);
            row.rhs = qm.m * std::pow(acc, 1.0 / qm.q_s);
        } else {
            const GridFunction us = frozen_apply(f.f, s, s, fam);
            row.rhs = qm.m * lq_norm(us, mu_s, qm.q_s);
        }
        row.pass = row.lhs <= row.rhs + tol;
        rep.pass = rep.pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

double gauss_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

/// gamma({u >= s}) for a grid function, crossings located by linear
/// interpolation, mass integrated through the Gaussian CDF.
double gaussian_level_measure(const GridFunction& u, double s) {
    const int n = u.size();
    const Eigen::ArrayXd xs = u.xs();
    const Eigen::ArrayXd& v = u.values();
    double acc = 0.0;
    bool inside = v(0) >= s;
    double seg_start = xs(0);
    for (int i = 0; i + 1 < n; ++i) {
        const bool next_inside = v(i + 1) >= s;
        if (next_inside == inside) continue;
        const double w = (s - v(i)) / (v(i + 1) - v(i));
        const double xc = xs(i) + w * (xs(i + 1) - xs(i));
        if (inside)
            acc += gauss_cdf(xc) - gauss_cdf(seg_start);
        else
            seg_start = xc;
        inside = next_inside;
    }
    if (inside) acc += gauss_cdf(xs(n - 1)) - gauss_cdf(seg_start);
    return acc;
}

}  // namespace

TailReport talagrand_tail(const TestFunction& f, double t, const std::vector<double>& s_grid,
                          const Potential& gauss, const Propagator& prop, int grid_points) {
    TailReport rep;
    rep.f_id = f.id;
    const NormResult nr = luxembourg_norm(f.f, l1logl1_young(), gauss);
    if (nr.zero || nr.infinite)
        throw std::runtime_error("talagrand_tail: f must have finite positive Phi-norm");
    const double nphi = nr.value;
    auto fhat = [&](double x) { return f.f(x) / nphi; };
    rep.mass = integrate(fhat, gauss).value;
    const double R = prop.half_width();
    Eigen::ArrayXd vals(grid_points);
    const double dx = 2 * R / (grid_points - 1);
    for (int i = 0; i < grid_points; ++i)
        vals(i) = prop.apply_at(fhat, t, -R + i * dx);
    const GridFunction u(-R, R, std::move(vals));
    for (double s : s_grid) {
        TailRow row;
        row.s = s;
        row.gamma_level = gaussian_level_measure(u, s);
        row.product = s * std::pow(std::log(s), 1.5) * row.gamma_level;
        row.markov = s * row.gamma_level;
        rep.sup_product = std::max(rep.sup_product, row.product);
        rep.markov_max = std::max(rep.markov_max, row.markov);
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<WitnessRow> non_continuity_witness(const YoungFunction& psi, double t,
                                               const std::vector<double>& a_grid,
                                               const Potential& gauss,
                                               const Propagator& prop) {
    std::vector<WitnessRow> rows;
    const YoungFunction phi = l1logl1_young();
    for (double a : a_grid) {
        WitnessRow row;
        row.a = a;
        const TestFunction fa = tf_expahalf(a);
        try {
            row.norm_phi = luxembourg_norm(fa.f, phi, gauss).value;
            auto ptf = [&](double x) { return prop.apply_at(fa.f, t, x); };
            const NormResult np = luxembourg_norm(ptf, psi, gauss);
            row.norm_psi = np.infinite ? std::numeric_limits<double>::infinity() : np.value;
        } catch (const std::exception&) {
            row.norm_psi = std::numeric_limits<double>::infinity();  // overflow recorded
        }
        row.ratio = row.norm_psi / row.norm_phi;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace orlab
