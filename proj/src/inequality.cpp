#include "orlab/inequality.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }
double neg_part(double x) { return x < 0.0 ? -x : 0.0; }
double pos_part(double x) { return x > 0.0 ? x : 0.0; }

IneqEval eval_eq_f(const StandardOrliczFamily& fam, double t, const TestFunction& f,
                   const Potential& mu) {
    IneqEval out;
    out.name = "eq_f";
    out.f_id = f.id;
    out.t = t;
    const NormResult nr = luxembourg_norm(f.f, fam.young_at(t), mu);
    if (nr.infinite) throw std::runtime_error("eval_eq_f: infinite norm");
    if (nr.zero) {
        out.lhs = out.rhs = out.slack = 0.0;
        return out;
    }
    const double n = nr.value;
    out.constants["norm"] = n;
    auto lhs_fn = [&](double x) { return fam.dot(t, std::abs(f.f(x)) / n); };
    auto rhs_fn = [&](double x) {
        const double df = f.df(x);
        return fam.deriv2(t, std::abs(f.f(x)) / n) * df * df;
    };
    out.lhs = n * n * integrate(lhs_fn, mu).value;
    out.rhs = integrate(rhs_fn, mu).value;
    out.slack = out.rhs - out.lhs;
    out.ratio = out.rhs != 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

IneqEval eval_fsobolev(const RealFn& F, const YoungFunction& phi0,
                       const TestFunction& f, const Potential& mu) {
    IneqEval out;
    out.name = "fsobolev";
    out.f_id = f.id;
    const NormResult nr = luxembourg_norm(f.f, phi0, mu);
    if (nr.infinite || nr.zero) throw std::runtime_error("eval_fsobolev: degenerate norm");
    const double n = nr.value;
    out.constants["norm"] = n;
    auto lhs_fn = [&](double x) {
        const double g = std::abs(f.f(x)) / n;
        if (g == 0.0) return 0.0;
        const double p = phi0.eval(g);
        return p * F(p);
    };
    auto rhs_fn = [&](double x) {
        const double g = std::abs(f.f(x)) / n;
        const double df = f.df(x);
        return phi0.deriv2(g) * df * df;
    };
    out.lhs = n * n * integrate(lhs_fn, mu).value;
    out.rhs = integrate(rhs_fn, mu).value;
    out.slack = out.rhs - out.lhs;
    out.ratio = out.rhs != 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

IneqEval eval_ubound(const TestFunction& f, const RealFn& U, const RealFn& dU,
                     const RealFn& d2U, double half_width) {
    IneqEval out;
    out.name = "ubound";
    out.f_id = f.id;
    auto lhs_fn = [&](double x) {
        const double v = f.f(x);
        const double du = dU(x);
        return v * v * (du * du - 2.0 * d2U(x));
    };
    auto rhs_fn = [&](double x) {
        const double d = f.df(x);
        return 4.0 * d * d;
    };
    out.lhs = integrate_raw(lhs_fn, U, half_width).value;
    out.rhs = integrate_raw(rhs_fn, U, half_width).value;
    out.slack = out.rhs - out.lhs;
    out.tol = 1e-8;
    return out;
}

IneqEval eval_hks(const TestFunction& f, const YoungFunction& phi,
                  const YoungFunction& psi, double t_o, double C, const Potential& mu) {
    IneqEval out;
    out.name = "hks";
    out.f_id = f.id;
    out.t = t_o;
    if (!phi.delta2_K)
        throw std::invalid_argument("eval_hks: Phi must carry a finite Delta_2 constant");
    const double K = *phi.delta2_K;
    out.constants["K"] = K;
    out.constants["C"] = C;
    auto lhs_fn = [&](double x) {
        const double v = std::abs(f.f(x));
        if (v == 0.0) return 0.0;
        const double w = psi.inverse(phi.eval(v));
        if (w <= 0.0) return 0.0;
        return v * phi.deriv1(v) * std::log(v / w);
    };
    auto rhs_fn = [&](double x) {
        const double d = f.df(x);
        return phi.deriv2(std::abs(f.f(x))) * d * d;
    };
    out.lhs = integrate(lhs_fn, mu).value;
    out.rhs = t_o * integrate(rhs_fn, mu).value + (K - 1.0) * std::log(C);
    out.slack = out.rhs - out.lhs;
    return out;
}

IneqEval eval_covid(const TestFunction& f, const RealFn& theta_plus, const Potential& mu) {
    IneqEval out;
    out.name = "covid";
    out.f_id = f.id;
    const YoungFunction U = u_young();
    const NormResult nr = luxembourg_norm(f.f, U, mu);
    if (nr.infinite || nr.zero) throw std::runtime_error("eval_covid: degenerate U-norm");
    const double nu = nr.value;
    out.constants["u_norm"] = nu;
    auto lhs_fn = [&](double x) {
        const double v = f.f(x);
        const double th = theta_plus(U.eval(std::abs(v) / nu));
        if (th == 0.0) return 0.0;
        return v * v * log_plus(v * v / (nu * nu)) * th;
    };
    auto grad_fn = [&](double x) {
        const double d = f.df(x);
        return d * d;
    };
    out.lhs = integrate(lhs_fn, mu).value;
    const double dirichlet = integrate(grad_fn, mu).value;
    out.rhs = dirichlet + nu * nu;  // the c=1 reference value
    out.constants["required_c"] = out.rhs != 0.0 ? out.lhs / out.rhs : 0.0;
    out.slack = out.rhs - out.lhs;
    out.ratio = out.constants["required_c"];
    return out;
}

IneqEval eval_rothaus(const TestFunction& f, RothausMode mode, const Potential& mu,
                      const RealFn* F) {
    IneqEval out;
    out.f_id = f.id;
    const double mean = integrate(f.f, mu).value;
    auto f2 = [&](double x) {
        const double v = f.f(x);
        return v * v;
    };
    auto ft2 = [&](double x) {
        const double v = f.f(x) - mean;
        return v * v;
    };
    if (mode == RothausMode::classical) {
        out.name = "rothaus_classical";
        out.lhs = entropy(f2, mu);
        out.rhs = entropy(ft2, mu) + 2.0 * integrate(ft2, mu).value;
        out.slack = out.rhs - out.lhs;
        out.tol = 1e-8;
        return out;
    }
    if (!F) throw std::invalid_argument("eval_rothaus: F required in f_version mode");
    out.name = "rothaus_F";
    const double m2 = integrate(f2, mu).value;
    const double mt2 = integrate(ft2, mu).value;
    auto lhs_fn = [&](double x) { return f2(x) * (*F)(f2(x) / m2); };
    out.lhs = integrate(lhs_fn, mu).value;
    if (mt2 == 0.0) {
        out.rhs = 0.0;
        out.constants["b_min"] = 0.0;
        return out;
    }
    auto rhs1 = [&](double x) { return ft2(x) * (*F)(ft2(x) / mt2); };
    out.rhs = integrate(rhs1, mu).value + mt2;  // b=1 reference
    out.constants["b_min"] = out.rhs > 0.0 ? std::max(0.0, out.lhs / out.rhs) : 0.0;
    out.slack = out.rhs - out.lhs;
    return out;
}

IneqEval eval_poincare(const TestFunction& f, const Potential& mu) {
    IneqEval out;
    out.name = "poincare";
    out.f_id = f.id;
    const double mean = integrate(f.f, mu).value;
    auto var_fn = [&](double x) {
        const double v = f.f(x) - mean;
        return v * v;
    };
    auto grad_fn = [&](double x) {
        const double d = f.df(x);
        return d * d;
    };
    out.lhs = integrate(var_fn, mu).value;
    out.rhs = integrate(grad_fn, mu).value;
    out.slack = out.rhs - out.lhs;
    out.ratio = out.rhs != 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

double NashPipeline::theta_at(double x) const {
    if (x <= xs(0)) return theta(0);
    if (x >= xs(xs.size() - 1)) {
        const double lx = std::log(x);
        return tail_coeff * x * lx * lx;
    }
    // log-linear interpolation on the tabulated envelope
    int lo = 0, hi = static_cast<int>(xs.size()) - 1;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (xs(mid) <= x ? lo : hi) = mid;
    }
    const double w = (std::log(x) - std::log(xs(lo))) / (std::log(xs(hi)) - std::log(xs(lo)));
    return theta(lo) * (1 - w) + theta(hi) * w;
}

double NashPipeline::n_at(double t) const {
    if (t >= x_max) return tail_coeff > 0 ? 1.0 / (tail_coeff * std::log(t)) : 0.0;
    int lo = 0, hi = static_cast<int>(xs.size()) - 1;
    if (t <= xs(0)) return n_vals(0);
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        (xs(mid) <= t ? lo : hi) = mid;
    }
    const double w = (std::log(t) - std::log(xs(lo))) / (std::log(xs(hi)) - std::log(xs(lo)));
    return n_vals(lo) * (1 - w) + n_vals(hi) * w;
}

double NashPipeline::m_at(double t) const {
    if (!(t > 0)) throw std::domain_error("NashPipeline::m_at: t > 0 required");
    if (t >= n_vals(0)) return xs(0);
    double lo = xs(0), hi = x_max;
    for (int it = 0; it < 200; ++it) {
        const double mid = std::sqrt(lo * hi);
        if (n_at(mid) > t)
            lo = mid;
        else
            hi = mid;
        if (hi / lo < 1 + 1e-13) break;
    }
    return std::sqrt(lo * hi);
}

NashPipeline nash_ultra_pipeline(const RealFn& alpha, double c, double x_max, int npts) {
    if (!(c > 0)) throw std::invalid_argument("nash_ultra_pipeline: c > 0 required");
    NashPipeline out;
    out.x_max = x_max;
    out.xs = Eigen::ArrayXd(npts);
    out.theta = Eigen::ArrayXd(npts);
    const double x_lo = 1.0 + 1e-4;
    for (int i = 0; i < npts; ++i)
        out.xs(i) = x_lo * std::pow(x_max / x_lo, static_cast<double>(i) / (npts - 1));

    auto objective = [&](double s, double x) { return alpha(s) * (x - s); };
    for (int i = 0; i < npts; ++i) {
        const double x = out.xs(i);
        // coarse scan over s in [1, x] (log-spaced), then golden refinement
        double best_s = 1.0, best = objective(1.0, x);
        const int scan = 192;
        for (int k = 0; k <= scan; ++k) {
            const double s = std::pow(x, static_cast<double>(k) / scan);
            const double v = objective(s, x);
            if (v > best) {
                best = v;
                best_s = s;
            }
        }
        double a = std::max(1.0, best_s / 1.6), b = std::min(x, best_s * 1.6);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = objective(x1, x), f2 = objective(x2, x);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + gr * (b - a);
                f2 = objective(x2, x);
            } else {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - gr * (b - a);
                f1 = objective(x1, x);
            }
        }
        best = std::max(best, std::max(f1, f2));
        out.theta(i) = best / (8.0 * c);
        if (!(out.theta(i) > 0))
            throw std::runtime_error("nash_ultra_pipeline: theta not positive");
    }

    // empirical tail coefficient: theta(x) >= coeff * x (log x)^2 on the last decade
    double coeff = std::numeric_limits<double>::infinity();
    for (int i = 0; i < npts; ++i) {
        if (out.xs(i) < x_max / 10) continue;
        const double lx = std::log(out.xs(i));
        coeff = std::min(coeff, out.theta(i) / (out.xs(i) * lx * lx));
    }
    out.tail_coeff = coeff;

    // n(x) = int_x^{x_max} 1/theta + analytic tail
    out.n_vals = Eigen::ArrayXd(npts);
    double acc = 1.0 / (coeff * std::log(x_max));
    out.n_vals(npts - 1) = acc;
    for (int i = npts - 2; i >= 0; --i) {
        // 4-point Gauss per log-interval
        const double ua = std::log(out.xs(i)), ub = std::log(out.xs(i + 1));
        static const double gn[4] = {-0.8611363115940526, -0.3399810435848563,
                                     0.3399810435848563, 0.8611363115940526};
        static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                     0.6521451548625461, 0.3478548451374538};
        double seg = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double u = 0.5 * (ua + ub) + 0.5 * (ub - ua) * gn[k];
            const double xv = std::exp(u);
            seg += 0.5 * (ub - ua) * gw[k] * xv / out.theta_at(xv);
        }
        acc += seg;
        out.n_vals(i) = acc;
        if (!std::isfinite(acc))
            throw std::runtime_error("nash_ultra_pipeline: n diverges (theta too small)");
    }
    return out;
}

}  // namespace orlab
