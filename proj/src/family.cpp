#include "orlab/family.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

RealFn f_log() {
    return [](double x) { return std::log(x); };
}
RealFn f_log_prime() {
    return [](double x) { return 1.0 / x; };
}

RealFn f_beta(double beta) {
    const double c = std::pow(std::log(2.0), beta);
    return [beta, c](double x) { return std::pow(std::log1p(x), beta) - c; };
}
RealFn f_beta_prime(double beta) {
    return [beta](double x) {
        return beta * std::pow(std::log1p(x), beta - 1) / (1 + x);
    };
}

RealFn lam_linear(double alpha) {
    return [alpha](double t) { return alpha * t; };
}
RealFn lam_linear_prime(double alpha) {
    return [alpha](double) { return alpha; };
}

RealFn lam_gross(double rho) {
    return [rho](double t) { return std::log(0.5 * (1 + std::exp(4.0 / rho * t))); };
}
RealFn lam_gross_prime(double rho) {
    return [rho](double t) {
        const double e = std::exp(4.0 / rho * t);
        return (4.0 / rho) * e / (1 + e);
    };
}

double StandardOrliczFamily::f_near_one(double eps, double side) const {
    // F(1 + side*eps) = F'(1) side eps + F''(1)/2 eps^2 + O(eps^3)
    return side * eps * (fp1_ + side * eps * 0.5 * fpp1_);
}

double StandardOrliczFamily::f_safe(double y) const {
    const double d = y - 1.0;
    if (std::abs(d) < opt_.junction_eps) return f_near_one(std::abs(d), d < 0 ? -1.0 : 1.0);
    return spec_.F(y);
}

StandardOrliczFamily build_family(const FamilySpec& spec, const BuildOptions& opt) {
    StandardOrliczFamily fam;
    fam.spec_ = spec;
    fam.opt_ = opt;
    fam.x0_ = spec.phi0.inverse(1.0);
    fam.fp1_ = spec.Fprime(1.0);
    if (!(fam.fp1_ > 0)) throw std::invalid_argument("build_family: F'(1) must be positive");
    {
        const double h = 1e-5;
        fam.fpp1_ = (spec.Fprime(1 + h) - spec.Fprime(1 - h)) / (2 * h);
    }
    if (std::abs(spec.lambda(0.0)) > 1e-12)
        throw std::invalid_argument("build_family: lambda(0) must be 0");

    const StandardOrliczFamily* self = &fam;  // for f_safe in the integrands
    const double log_half = std::log(0.5);
    const double vlo = std::log(opt.v_floor);

    auto p1 = [&spec](double u) { return 1.0 / spec.F(std::exp(u)); };
    auto q1 = [self](double v) {
        const double ev = std::exp(v);
        return -ev / ((1.0 - ev) * self->f_safe(1.0 - ev));
    };
    auto q2 = [self](double v) {
        const double ev = std::exp(v);
        return ev / ((1.0 + ev) * self->f_safe(1.0 + ev));
    };
    auto p2 = [&spec](double u) { return 1.0 / spec.F(std::exp(u)); };

    fam.b1u_ = HermiteTable::cumulative(p1, -opt.u_span, log_half, opt.u_cells);
    fam.b1v_ = HermiteTable::cumulative(q1, vlo, log_half, opt.v_cells);
    fam.b2v_ = HermiteTable::cumulative(q2, vlo, 0.0, opt.v_cells);
    fam.b2u_ = HermiteTable::cumulative(p2, std::log(2.0), opt.u_span, opt.u_cells);

    // anchors: variant 0 puts F1(1/2)=0 and F2(e)=0; variant 1 uses
    // F1(1/4)=0 and F2(4)=0 (the construction must not depend on this)
    if (opt.anchor_variant == 0) {
        fam.b1u_.shift(-fam.b1u_.back_value());
    } else {
        fam.b1u_.shift(-fam.b1u_(std::log(0.25)));
    }
    fam.b1v_.shift(fam.b1u_.back_value() - fam.b1v_.back_value());  // agree at y=1/2
    if (opt.anchor_variant == 0) {
        fam.b2u_.shift(-fam.b2u_(1.0));  // F2(e)=0
    } else {
        fam.b2u_.shift(-fam.b2u_(std::log(4.0)));
    }
    fam.b2v_.shift(fam.b2u_.front_value() - fam.b2v_.back_value());  // agree at y=2

    // the hypotheses make 1/(xF) non-integrable at 0, 1 and infinity: the
    // primitives must still be accumulating at the table ends
    auto still_diverging = [](double far, double mid) { return std::abs(far - mid) > 1e-3; };
    if (!still_diverging(fam.b1u_.front_value(), fam.b1u_(-opt.u_span / 2)))
        throw std::runtime_error("build_family: primitive converges at 0 (spec error)");
    if (!still_diverging(fam.b2u_.back_value(), fam.b2u_(opt.u_span / 2)))
        throw std::runtime_error("build_family: primitive converges at infinity (spec error)");
    if (!still_diverging(fam.b1v_.front_value(), fam.b1v_(vlo / 2)) ||
        !still_diverging(fam.b2v_.front_value(), fam.b2v_(vlo / 2)))
        throw std::runtime_error("build_family: primitive converges at 1 (spec error)");

    // reconstruction residual over the tabulation range
    for (const HermiteTable* tb : {&fam.b1u_, &fam.b1v_, &fam.b2v_, &fam.b2u_}) {
        const double lo = std::min(tb->front_value(), tb->back_value());
        const double hi = std::max(tb->front_value(), tb->back_value());
        for (int k = 1; k < 64; ++k) {
            const double z = lo + (hi - lo) * k / 64.0;
            const double r = std::abs((*tb)(tb->inverse(z)) - z);
            if (r > 1e-9 * std::max(1.0, std::abs(z)))
                throw std::runtime_error("build_family: reconstruction residual too large");
        }
    }
    return fam;
}

double StandardOrliczFamily::primitive1(double y) const {
    if (!(y > 0 && y < 1)) throw std::domain_error("primitive1: y in (0,1) required");
    if (y <= 0.5) return b1u_(std::log(y));
    return b1v_(std::log(1.0 - y));
}

double StandardOrliczFamily::primitive2(double y) const {
    if (!(y > 1)) throw std::domain_error("primitive2: y > 1 required");
    if (y >= 2.0) return b2u_(std::log(y));
    return b2v_(std::log(y - 1.0));
}

double StandardOrliczFamily::primitive1_inv(double z) const {
    if (z >= b1u_.back_value()) {  // y <= 1/2 side (F1 decreasing)
        if (z > b1u_.front_value()) return 0.0;  // deeper than the table: Phi_t underflows
        return std::exp(b1u_.inverse(z));
    }
    if (!b1v_.value_in_range(z))
        throw std::domain_error("primitive1_inv: shift beyond tabulated range near 1");
    return 1.0 - std::exp(b1v_.inverse(z));
}

double StandardOrliczFamily::primitive2_inv(double z) const {
    if (z >= b2u_.front_value()) {
        if (z > b2u_.back_value()) return std::numeric_limits<double>::infinity();
        return std::exp(b2u_.inverse(z));
    }
    if (!b2v_.value_in_range(z))
        throw std::domain_error("primitive2_inv: shift beyond tabulated range near 1");
    return 1.0 + std::exp(b2v_.inverse(z));
}

double StandardOrliczFamily::shift_value(double y0, double lam) const {
    if (y0 == 0.0) return 0.0;
    if (std::isinf(y0)) return y0;
    if (y0 == 1.0) return 1.0;
    const double z0 = y0 - 1.0;
    if (std::abs(z0) < opt_.junction_eps) {
        const double a = fp1_, b = fp1_ + 0.5 * fpp1_;
        const double r = std::exp(a * lam);
        return 1.0 + a * z0 * r / (a + b * z0 * (1.0 - r));
    }
    if (y0 < 1.0) return primitive1_inv(primitive1(y0) + lam);
    return primitive2_inv(primitive2(y0) + lam);
}

double StandardOrliczFamily::shift_deriv(double y0, double lam, int order) const {
    const double z0 = y0 - 1.0;
    if (std::abs(z0) < opt_.junction_eps) {
        const double a = fp1_, b = fp1_ + 0.5 * fpp1_;
        const double r = std::exp(a * lam);
        const double den = a + b * z0 * (1.0 - r);
        if (order == 1) return a * a * r / (den * den);
        return 2.0 * a * a * r * b * (r - 1.0) / (den * den * den);
    }
    const double yt = shift_value(y0, lam);
    const double g0 = y0 * f_safe(y0);
    const double gt = yt * f_safe(yt);
    const double ratio = gt / g0;
    if (order == 1) return ratio;
    // d2: ratio * (G'(yt) - G'(y0)) / G(y0), G' = F + yF'
    const double gp0 = f_safe(y0) + y0 * spec_.Fprime(y0);
    const double gpt = f_safe(yt) + yt * spec_.Fprime(yt);
    return ratio * (gpt - gp0) / g0;
}

double StandardOrliczFamily::eval(double t, double x) const {
    x = std::abs(x);
    if (x == 0.0) return 0.0;
    const double lam = spec_.lambda(t);
    const double y0 = spec_.phi0.eval(x);
    if (lam == 0.0) return y0;
    return shift_value(y0, lam);
}

double StandardOrliczFamily::deriv1(double t, double x) const {
    x = std::abs(x);
    const double lam = spec_.lambda(t);
    if (lam == 0.0) return spec_.phi0.deriv1(x);
    const double y0 = spec_.phi0.eval(x);
    return shift_deriv(y0, lam, 1) * spec_.phi0.deriv1(x);
}

double StandardOrliczFamily::deriv2(double t, double x) const {
    x = std::abs(x);
    const double lam = spec_.lambda(t);
    if (lam == 0.0) return spec_.phi0.deriv2(x);
    const double y0 = spec_.phi0.eval(x);
    const double p1 = spec_.phi0.deriv1(x);
    const double s1 = shift_deriv(y0, lam, 1);
    const double s2 = shift_deriv(y0, lam, 2);
    return s2 * p1 * p1 + s1 * spec_.phi0.deriv2(x);
}

double StandardOrliczFamily::inverse(double t, double y) const {
    if (y < 0) throw std::domain_error("family inverse: y >= 0 required");
    if (y == 0.0) return 0.0;
    const double lam = spec_.lambda(t);
    if (lam == 0.0 || y == 1.0) return spec_.phi0.inverse(y);
    return spec_.phi0.inverse(shift_value(y, -lam));
}

double StandardOrliczFamily::dot(double t, double x) const {
    const double yt = eval(t, x);
    if (yt == 0.0) return 0.0;
    if (std::isinf(yt)) return yt;
    return spec_.lambda_prime(t) * yt * f_safe(yt);
}

YoungFunction StandardOrliczFamily::young_at(double t) const {
    YoungFunction y;
    y.name = spec_.name + "@t";
    const StandardOrliczFamily* self = this;
    y.eval = [self, t](double x) { return self->eval(t, x); };
    y.deriv1 = [self, t](double x) { return self->deriv1(t, x); };
    y.deriv2 = [self, t](double x) { return self->deriv2(t, x); };
    y.inverse = [self, t](double v) { return self->inverse(t, v); };
    y.bracket_lo = x0_ * 1e-6;
    y.bracket_hi = x0_ * 1e6;
    return y;
}

double family_eval(const StandardOrliczFamily& fam, double t, double x, FamilyOrder order) {
    switch (order) {
        case FamilyOrder::value: return fam.eval(t, x);
        case FamilyOrder::d1: return fam.deriv1(t, x);
        case FamilyOrder::d2: return fam.deriv2(t, x);
        case FamilyOrder::inv: return fam.inverse(t, x);
        case FamilyOrder::dot: return fam.dot(t, x);
    }
    throw std::invalid_argument("family_eval: bad order");
}

SpecValidation validate_family_spec(const FamilySpec& spec, const Eigen::ArrayXd& x_grid) {
    SpecValidation out;
    auto second_diff_min = [&](const RealFn& g) {
        double worst = 0.0;
        for (int i = 1; i + 1 < x_grid.size(); ++i) {
            const double xl = x_grid(i - 1), xm = x_grid(i), xr = x_grid(i + 1);
            const double dd = (g(xr) - g(xm)) / (xr - xm) - (g(xm) - g(xl)) / (xm - xl);
            worst = std::min(worst, dd / (1 + std::abs(g(xm))));
        }
        return worst;
    };
    out.worst_xF = second_diff_min([&spec](double x) { return x * spec.F(x); });
    out.xF_convex = out.worst_xF >= -1e-9;
    out.xFx2_convex =
        second_diff_min([&spec](double x) { return x * spec.F(x * x); }) >= -1e-9;

    // x -> (Phi0 Phi0''/Phi0'^2 - 1) F(Phi0) - Phi0 F'(Phi0) must be non-increasing
    auto mono = [&spec](double x) {
        const double p = spec.phi0.eval(x), p1 = spec.phi0.deriv1(x), p2 = spec.phi0.deriv2(x);
        return (p * p2 / (p1 * p1) - 1.0) * spec.F(p) - p * spec.Fprime(p);
    };
    double worst_incr = 0.0;
    for (int i = 0; i + 1 < x_grid.size(); ++i) {
        const double a = mono(x_grid(i)), b = mono(x_grid(i + 1));
        worst_incr = std::min(worst_incr, (a - b) / (1 + std::abs(a)));
    }
    out.worst_monotone = worst_incr;
    out.monotone_hypothesis = worst_incr >= -1e-9;
    return out;
}

FamilyValidation validate_family(const StandardOrliczFamily& fam,
                                 const std::vector<double>& t_grid,
                                 const Eigen::ArrayXd& x_grid) {
    FamilyValidation out;
    const double hx = 1e-4;
    for (double t : t_grid) {
        // (iii) via finite differences in t against lambda'(t) w F(w)
        for (int i = 0; i < x_grid.size(); ++i) {
            const double w = fam.eval(t, x_grid(i));
            if (w <= 0 || !std::isfinite(w) || std::abs(w - 1.0) < 1e-8) continue;
            const double xi = x_grid(i);
            const double ht = std::max(1e-6, 1e-6 * t);
            const double fd = (fam.eval(t + ht, xi) - fam.eval(std::max(0.0, t - ht), xi)) /
                              (t - ht >= 0 ? 2 * ht : ht);
            const double rhs = fam.spec().lambda_prime(t) * w * fam.spec().F(w);
            const double scale = std::max({1.0, std::abs(fd), std::abs(rhs)});
            out.max_iii_residual = std::max(out.max_iii_residual, std::abs(fd - rhs) / scale);
        }
        // convexity of Phi_t on the x grid
        for (int i = 1; i + 1 < x_grid.size(); ++i) {
            const double xl = x_grid(i - 1), xm = x_grid(i), xr = x_grid(i + 1);
            const double dd = (fam.eval(t, xr) - fam.eval(t, xm)) / (xr - xm) -
                              (fam.eval(t, xm) - fam.eval(t, xl)) / (xm - xl);
            if (std::isfinite(dd))
                out.worst_convexity =
                    std::min(out.worst_convexity, dd / (1 + std::abs(fam.eval(t, xm))));
        }
    }
    // (iv): Phi_t''/Phi_t'^2 o Phi_t^{-1} non-decreasing in t, pointwise in w
    for (size_t a = 0; a + 1 < t_grid.size(); ++a) {
        const double s = t_grid[a], t = t_grid[a + 1];
        for (int i = 0; i < x_grid.size(); ++i) {
            const double w = x_grid(i);
            if (!(w > 0) || std::abs(w - 1.0) < 1e-10) continue;
            auto ratio = [&fam, w](double tt) {
                const double xi = fam.inverse(tt, w);
                const double d1 = fam.deriv1(tt, xi);
                return fam.deriv2(tt, xi) / (d1 * d1);
            };
            const double rs = ratio(s), rt = ratio(t);
            out.worst_iv = std::min(out.worst_iv, (rt - rs) / (1 + std::abs(rs)));
        }
    }
    // junction regularity across x0
    const double t_probe = t_grid.empty() ? 1.0 : t_grid.back();
    const double xl = fam.inverse(t_probe, 1.0 - 10 * hx);
    const double xr = fam.inverse(t_probe, 1.0 + 10 * hx);
    const double d1l = fam.deriv1(t_probe, xl), d1r = fam.deriv1(t_probe, xr);
    const double d2l = fam.deriv2(t_probe, xl), d2r = fam.deriv2(t_probe, xr);
    out.junction_c1_gap = std::abs(d1r - d1l) / (std::abs(d1l) + std::abs(d1r));
    out.junction_c2_gap = std::abs(d2r - d2l) / (std::abs(d2l) + std::abs(d2r));
    return out;
}

}  // namespace orlab
