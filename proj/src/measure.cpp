#include "orlab/measure.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace orlab {

namespace {

double find_half_width(const RealFn& V) {
    // V(R) - V(0) >= 40 so that e^{-V} tails are < 1e-14 of the bulk
    const double v0 = std::min({V(0.0), V(0.5), V(-0.5), V(1.0), V(-1.0)});
    double r = 1.0;
    int guard = 0;
    while ((V(r) - v0 < 40.0 || V(-r) - v0 < 40.0) && guard++ < 60) r *= 2.0;
    double lo = r / 2, hi = r;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (V(mid) - v0 >= 40.0 && V(-mid) - v0 >= 40.0)
            hi = mid;
        else
            lo = mid;
    }
    return std::ceil(hi);
}

Eigen::ArrayXd density_weights(const PanelRule& pr, const RealFn& V, double* log_z) {
    Eigen::ArrayXd w(pr.nodes.size());
    for (int i = 0; i < pr.nodes.size(); ++i)
        w(i) = pr.weights(i) * std::exp(-V(pr.nodes(i)));
    const double z = w.sum();
    if (!(z > 0) || !std::isfinite(z))
        throw std::runtime_error("measure: normalization failed");
    if (log_z) *log_z = std::log(z);
    return w / z;
}

}  // namespace

QuadratureRule QuadratureRule::refined() const {
    QuadratureRule r = *this;
    r.panels = panels.refined();
    if (gaussian) r.hermite = gauss_hermite_prob(static_cast<int>(hermite.nodes.size() * 3 / 2));
    r.level = level + 1;
    return r;
}

Potential make_potential(std::string name, RealFn V, RealFn dV,
                         double hessian_lb, double half_width, int panels, int order) {
    Potential p;
    p.name = std::move(name);
    p.V = std::move(V);
    p.dV = std::move(dV);
    p.hessian_lb = hessian_lb;
    p.half_width = half_width > 0 ? half_width : find_half_width(p.V);
    p.rule.panels = composite_legendre(-p.half_width, p.half_width, panels, order);
    p.mu_nodes = p.rule.panels.nodes;
    p.mu_weights = density_weights(p.rule.panels, p.V, &p.log_Z);
    return p;
}

Potential gaussian_potential(int hermite_order) {
    const double c = 0.5 * std::log(2 * std::numbers::pi);
    Potential p = make_potential(
        "gaussian", [c](double x) { return 0.5 * x * x + c; },
        [](double x) { return x; }, 1.0, 9.0);
    p.rule.gaussian = true;
    p.rule.hermite = gauss_hermite_prob(hermite_order);
    return p;
}

double u_alpha_value(double alpha, double x) {
    const double ax = std::abs(x);
    if (ax > 1.0) return std::pow(ax, alpha);
    const double x2 = x * x;
    return alpha * (alpha - 2) / 8.0 * x2 * x2 + alpha * (4 - alpha) / 4.0 * x2 +
           (1 - 0.75 * alpha + 0.125 * alpha * alpha);
}

double u_alpha_deriv(double alpha, double x) {
    const double s = x < 0 ? -1.0 : 1.0;
    const double ax = std::abs(x);
    if (ax > 1.0) return s * alpha * std::pow(ax, alpha - 1);
    return s * (alpha * (alpha - 2) / 2.0 * ax * ax * ax + alpha * (4 - alpha) / 2.0 * ax);
}

Potential build_u_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::invalid_argument("build_u_alpha: alpha in (1,2) required");
    Potential p = make_potential(
        "u_alpha", [alpha](double x) { return u_alpha_value(alpha, x); },
        [alpha](double x) { return u_alpha_deriv(alpha, x); }, 0.0, 0.0, 384);
    // V'' > 0 everywhere but decays at infinity; record the grid minimum
    double lb = std::numeric_limits<double>::infinity();
    for (double x = 0.0; x <= p.half_width; x += 0.01) {
        const double h = 1e-5 * std::max(1.0, x);
        lb = std::min(lb, (u_alpha_deriv(alpha, x + h) - u_alpha_deriv(alpha, x - h)) / (2 * h));
    }
    p.hessian_lb = lb;
    return p;
}

IntegralResult integrate(const RealFn& g, const Potential& mu) {
    IntegralResult res;
    if (mu.rule.gaussian) {
        const GaussRule& h1 = mu.rule.hermite;
        const GaussRule h2 = gauss_hermite_prob(static_cast<int>(h1.nodes.size() * 3 / 2));
        double v1 = 0, v2 = 0;
        for (int i = 0; i < h1.nodes.size(); ++i) v1 += h1.weights(i) * g(h1.nodes(i));
        for (int i = 0; i < h2.nodes.size(); ++i) v2 += h2.weights(i) * g(h2.nodes(i));
        res.value = v2;
        res.error_estimate = std::abs(v2 - v1);
    } else {
        double v1 = 0;
        for (int i = 0; i < mu.mu_nodes.size(); ++i) v1 += mu.mu_weights(i) * g(mu.mu_nodes(i));
        const PanelRule fine = mu.rule.panels.refined();
        double lz;
        const Eigen::ArrayXd wf = density_weights(fine, mu.V, &lz);
        double v2 = 0;
        for (int i = 0; i < fine.nodes.size(); ++i) v2 += wf(i) * g(fine.nodes(i));
        res.value = v2;
        res.error_estimate = std::abs(v2 - v1);
    }
    if (!std::isfinite(res.value))
        throw std::runtime_error("integrate: non-finite integrand sample");
    return res;
}

IntegralResult integrate_raw(const RealFn& g, const RealFn& U, double half_width,
                             int panels, int order) {
    const PanelRule pr = composite_legendre(-half_width, half_width, panels, order);
    const PanelRule fine = pr.refined();
    auto run = [&](const PanelRule& r) {
        double v = 0;
        for (int i = 0; i < r.nodes.size(); ++i)
            v += r.weights(i) * g(r.nodes(i)) * std::exp(-U(r.nodes(i)));
        return v;
    };
    const double v1 = run(pr), v2 = run(fine);
    if (!std::isfinite(v2)) throw std::runtime_error("integrate_raw: non-finite result");
    return {v2, std::abs(v2 - v1)};
}

double entropy(const RealFn& g, const Potential& mu) {
    const double mass = integrate(g, mu).value;
    if (!(mass > 0)) throw std::domain_error("entropy: zero mass");
    auto glg = [&g](double x) {
        const double v = g(x);
        return v <= 0 ? 0.0 : v * std::log(v);
    };
    return integrate(glg, mu).value - mass * std::log(mass);
}

Potential PotentialFamily::at(double t, int panels, int order) const {
    auto vt = [this, t](double x) { return V(t, x); };
    auto dvt = [this, t](double x) { return dV(t, x); };
    Potential p = make_potential(name + "@t", vt, dvt, 0.0, half_width, panels, order);
    double lb = std::numeric_limits<double>::infinity();
    for (double x = 0.0; x <= p.half_width; x += 0.005)
        lb = std::min({lb, d2V(t, x), d2V(t, -x)});
    p.hessian_lb = lb;
    return p;
}

PotentialFamily builtin_inhomog_family(double beta, double rate) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::invalid_argument("builtin_inhomog_family: beta in (0,1] required");
    PotentialFamily fam;
    fam.name = "inhomog_builtin";
    auto alpha = [rate](double t) { return rate * t; };
    auto pw = [beta](double x) { return std::pow(1 + x * x, beta / 2); };
    fam.V = [alpha, pw](double t, double x) { return 0.5 * x * x + alpha(t) * pw(x); };
    fam.dV = [alpha, beta](double t, double x) {
        return x + alpha(t) * beta * x * std::pow(1 + x * x, beta / 2 - 1);
    };
    fam.d2V = [alpha, beta](double t, double x) {
        return 1 + alpha(t) * beta * std::pow(1 + x * x, beta / 2 - 2) * (1 + (beta - 1) * x * x);
    };
    fam.Vdot = [rate, pw](double, double x) { return rate * pw(x); };
    fam.dVdot = [rate, beta](double, double x) {
        return rate * beta * x * std::pow(1 + x * x, beta / 2 - 1);
    };
    fam.d2Vdot = [rate, beta](double, double x) {
        return rate * beta * std::pow(1 + x * x, beta / 2 - 2) * (1 + (beta - 1) * x * x);
    };
    fam.half_width = 9.0;
    return fam;
}

double vdot_mean(const PotentialFamily& fam, double t, const Potential& frozen) {
    return integrate([&](double x) { return fam.Vdot(t, x); }, frozen).value;
}

}  // namespace orlab
