#include "orlab/young.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orlab {

namespace {

double fd_step(double x) { return std::max(1e-5, 1e-5 * std::abs(x)); }

/// Bracketed bisection for Phi(x)=y on x>=0, bracket grown geometrically.
double invert_monotone(const RealFn& f, double y, double lo, double hi) {
    if (y < 0) throw std::domain_error("young inverse: negative argument");
    if (y == 0) return 0.0;
    int guard = 0;
    while (f(lo) > y && guard++ < 1100) lo *= 0.5;
    guard = 0;
    while (f(hi) < y && guard++ < 1100) hi *= 2.0;
    if (!(f(hi) >= y))
        throw std::runtime_error("young inverse: bracket growth failed");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < y)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double young_eval(const YoungFunction& phi, YoungOrder order, double x) {
    double r;
    switch (order) {
        case YoungOrder::value: r = phi.eval(x); break;
        case YoungOrder::d1: r = phi.deriv1(x); break;
        case YoungOrder::d2: r = phi.deriv2(x); break;
        case YoungOrder::inv:
            if (x < 0) throw std::domain_error("young_eval: inv needs x >= 0");
            r = phi.inverse(x);
            break;
        default: throw std::invalid_argument("young_eval: bad order");
    }
    if (std::isnan(r)) throw std::runtime_error("young_eval: non-finite result for " + phi.name);
    return r;
}

YoungFunction young_from_eval(std::string name, RealFn eval,
                              double bracket_lo, double bracket_hi, bool nice) {
    YoungFunction y;
    y.name = std::move(name);
    y.eval = eval;
    y.deriv1 = [eval](double x) {
        const double h = fd_step(x);
        return (eval(x + h) - eval(x - h)) / (2 * h);
    };
    y.deriv2 = [eval](double x) {
        const double h = fd_step(x);
        return (eval(x + h) - 2 * eval(x) + eval(x - h)) / (h * h);
    };
    y.inverse = [eval, bracket_lo, bracket_hi](double v) {
        return invert_monotone(eval, v, bracket_lo, bracket_hi);
    };
    y.bracket_lo = bracket_lo;
    y.bracket_hi = bracket_hi;
    y.nice_flag = nice;
    return y;
}

YoungFunction power_young(double p) {
    if (p < 1) throw std::invalid_argument("power_young: p >= 1 required");
    YoungFunction y;
    std::ostringstream nm;
    nm << "lp:" << p;
    y.name = nm.str();
    y.eval = [p](double x) { return std::pow(std::abs(x), p); };
    y.deriv1 = [p](double x) { return p * std::pow(std::abs(x), p - 1); };
    y.deriv2 = [p](double x) { return p * (p - 1) * std::pow(std::abs(x), p - 2); };
    y.inverse = [p](double v) { return std::pow(v, 1.0 / p); };
    y.delta2_K = std::pow(2.0, p);
    y.nice_flag = p > 1;
    return y;
}

YoungFunction l1logl1_young() {
    YoungFunction y;
    y.name = "l1logl1";
    // branch written first in the catalog applies at the breakpoint
    y.eval = [](double x) {
        x = std::abs(x);
        return x >= 1.0 ? 2 * x * std::log(x) + 1 : x * x;
    };
    y.deriv1 = [](double x) {
        x = std::abs(x);
        return x >= 1.0 ? 2 * std::log(x) + 2 : 2 * x;
    };
    y.deriv2 = [](double x) {
        x = std::abs(x);
        return x >= 1.0 ? 2 / x : 2.0;
    };
    y.inverse = [](double v) {
        if (v <= 1.0) return std::sqrt(v);
        auto f = [](double x) { return 2 * x * std::log(x) + 1; };
        return invert_monotone(f, v, 1.0, 4.0);
    };
    y.delta2_K = 4.0;
    return y;
}

YoungFunction nlog_young() {
    YoungFunction y;
    y.name = "nlog";
    y.eval = [](double x) {
        x = std::abs(x);
        return x * x * std::log1p(x * x);
    };
    y.deriv1 = [](double x) {
        x = std::abs(x);
        return 2 * x * std::log1p(x * x) + 2 * x * x * x / (1 + x * x);
    };
    y.deriv2 = [](double x) {
        x = std::abs(x);
        const double w = 1 + x * x;
        return 2 * std::log1p(x * x) + 4 * x * x / w + (6 * x * x + 2 * x * x * x * x) / (w * w);
    };
    auto ev = y.eval;
    y.inverse = [ev](double v) { return invert_monotone(ev, v, 1e-8, 1e8); };
    return y;
}

double h_transform(double x) {
    const double s = x < 0 ? -1.0 : 1.0;
    x = std::abs(x);
    // branch written first applies at the breakpoint
    return s * (x <= 1.0 ? std::sqrt(2.0) * x : 2 * std::sqrt(2 * x) - std::sqrt(2.0));
}

double h_transform_inv(double y) {
    const double s = y < 0 ? -1.0 : 1.0;
    y = std::abs(y);
    const double r2 = std::sqrt(2.0);
    return s * (y <= r2 ? y / r2 : (y + r2) * (y + r2) / 8.0);
}

YoungFunction u_young() {
    const YoungFunction phi = l1logl1_young();
    YoungFunction y;
    y.name = "ubg";
    auto phi_eval = phi.eval;
    auto phi_d1 = phi.deriv1;
    auto phi_d2 = phi.deriv2;
    auto phi_inv = phi.inverse;
    y.eval = [phi_eval](double x) { return phi_eval(h_transform_inv(std::abs(x))); };
    y.deriv1 = [phi_d1](double x) {
        x = std::abs(x);
        const double h = h_transform_inv(x);
        const double dinv = x <= std::sqrt(2.0) ? 1 / std::sqrt(2.0) : (x + std::sqrt(2.0)) / 4.0;
        return phi_d1(h) * dinv;
    };
    y.deriv2 = [phi_d1, phi_d2](double x) {
        x = std::abs(x);
        const double h = h_transform_inv(x);
        if (x <= std::sqrt(2.0)) return phi_d2(h) * 0.5;
        const double dinv = (x + std::sqrt(2.0)) / 4.0;
        return phi_d2(h) * dinv * dinv + phi_d1(h) * 0.25;
    };
    y.inverse = [phi_inv](double v) { return h_transform(phi_inv(v)); };
    y.delta2_K = std::nullopt;  // finite, but left to delta2_constant
    return y;
}

YoungFunction exp_young(double delta) {
    if (delta <= 0) throw std::invalid_argument("exp_young: delta > 0 required");
    YoungFunction y;
    std::ostringstream nm;
    nm << "exp:" << delta;
    y.name = nm.str();
    y.eval = [delta](double x) { return std::expm1(std::pow(std::abs(x), delta)); };
    y.deriv1 = [delta](double x) {
        x = std::abs(x);
        return delta * std::pow(x, delta - 1) * std::exp(std::pow(x, delta));
    };
    y.deriv2 = [delta](double x) {
        x = std::abs(x);
        const double xp = std::pow(x, delta);
        return delta * std::pow(x, delta - 2) * std::exp(xp) * (delta - 1 + delta * xp);
    };
    y.inverse = [delta](double v) { return std::pow(std::log1p(v), 1.0 / delta); };
    y.nice_flag = delta > 1;
    y.bracket_hi = 30.0;
    return y;
}

YoungFunction abs_young() {
    YoungFunction y;
    y.name = "abs";
    y.eval = [](double x) { return std::abs(x); };
    y.deriv1 = [](double) { return 1.0; };
    y.deriv2 = [](double) { return 0.0; };
    y.inverse = [](double v) { return v; };
    y.delta2_K = 2.0;
    y.nice_flag = false;
    return y;
}

YoungFunction make_young(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    double param = 0.0;
    if (colon != std::string::npos) param = std::stod(spec.substr(colon + 1));
    if (head == "lp") return power_young(param);
    if (head == "l1logl1") return l1logl1_young();
    if (head == "nlog") return nlog_young();
    if (head == "ubg") return u_young();
    if (head == "exp") return exp_young(param);
    if (head == "abs") return abs_young();
    throw std::invalid_argument("make_young: unknown catalog entry '" + spec + "'");
}

double delta2_constant(const YoungFunction& phi, const Eigen::ArrayXd& grid) {
    if (grid.size() == 0) throw std::invalid_argument("delta2_constant: empty grid");
    double k = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        const double x = grid(i);
        const double px = phi.eval(x);
        if (px == 0.0) throw std::domain_error("delta2_constant: Phi(x)=0 on grid");
        k = std::max(k, phi.eval(2 * x) / px);
    }
    // eq. sandwich Phi <= x Phi' <= (K-1) Phi must hold with that constant
    for (int i = 0; i < grid.size(); ++i) {
        const double x = grid(i);
        const double px = phi.eval(x), xp = x * phi.deriv1(x);
        if (xp < px * (1 - 1e-8) || xp > (k - 1) * px * (1 + 1e-8))
            throw std::runtime_error("delta2_constant: sandwich violated for " + phi.name);
    }
    return k;
}

YoungReport validate_young(const YoungFunction& phi, const Eigen::ArrayXd& grid,
                           double tol) {
    YoungReport rep;
    rep.zero_at_zero = std::abs(phi.eval(0.0)) <= tol;
    rep.even = true;
    for (int i = 0; i < grid.size(); ++i) {
        const double x = grid(i);
        if (std::abs(phi.eval(x) - phi.eval(-x)) > tol * (1 + std::abs(phi.eval(x)))) {
            rep.even = false;
            break;
        }
    }
    rep.convex = true;
    rep.worst_convexity = 0.0;
    for (int i = 1; i + 1 < grid.size(); ++i) {
        const double xl = grid(i - 1), xm = grid(i), xr = grid(i + 1);
        // divided second difference; nonuniform grids allowed
        const double dd = (phi.eval(xr) - phi.eval(xm)) / (xr - xm) -
                          (phi.eval(xm) - phi.eval(xl)) / (xm - xl);
        const double scale = 1 + std::abs(phi.eval(xm));
        rep.worst_convexity = std::min(rep.worst_convexity, dd / scale);
        if (dd / scale < -tol) rep.convex = false;
    }
    const double xl = grid(0), xr = grid(grid.size() - 1);
    rep.ratio_at_left = phi.eval(xl) / xl;
    rep.ratio_at_right = phi.eval(xr) / xr;
    rep.nice = rep.ratio_at_left < 0.2 && rep.ratio_at_right > 5.0;
    return rep;
}

}  // namespace orlab
