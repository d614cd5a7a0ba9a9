#include "orlab/semigroup.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

namespace {

/// Tridiagonal system (I - w L) u = rhs solved by the Thomas algorithm.
/// L is the conservative discrete generator; sub/sup/diag are its bands.
struct Tridiag {
    Eigen::ArrayXd sub, diag, sup;  // bands of (I - w L)
    Eigen::ArrayXd cp;              // scratch for elimination

    void factor_identity_minus(const Eigen::ArrayXd& lsub, const Eigen::ArrayXd& ldiag,
                               const Eigen::ArrayXd& lsup, double w) {
        diag = 1.0 - w * ldiag;
        sub = -w * lsub;
        sup = -w * lsup;
        cp.resize(diag.size());
    }

    Eigen::ArrayXd solve(const Eigen::ArrayXd& rhs) {
        const int n = static_cast<int>(diag.size());
        Eigen::ArrayXd x(n);
        cp(0) = sup(0) / diag(0);
        x(0) = rhs(0) / diag(0);
        for (int i = 1; i < n; ++i) {
            const double m = diag(i) - sub(i - 1) * cp(i - 1);
            cp(i) = i + 1 < n ? sup(i) / m : 0.0;
            x(i) = (rhs(i) - sub(i - 1) * x(i - 1)) / m;
        }
        for (int i = n - 2; i >= 0; --i) x(i) -= cp(i) * x(i + 1);
        return x;
    }
};

/// Conservative bands of L = e^{V}(e^{-V} u')' on the uniform grid with
/// no-flux ends: symmetric against m_i = e^{-V_i} dx, row sums zero.
void generator_bands(const RealFn& V, double a, double dx, int n,
                     Eigen::ArrayXd& sub, Eigen::ArrayXd& diag, Eigen::ArrayXd& sup) {
    Eigen::ArrayXd vm(n - 1), vnode(n);
    for (int i = 0; i < n; ++i) vnode(i) = V(a + i * dx);
    for (int i = 0; i + 1 < n; ++i) vm(i) = V(a + (i + 0.5) * dx);
    const double vref = vm.minCoeff();
    sub.resize(n - 1);
    sup.resize(n - 1);
    diag = Eigen::ArrayXd::Zero(n);
    for (int i = 0; i + 1 < n; ++i) {
        const double edge = std::exp(-(vm(i) - vref)) / (dx * dx);
        sup(i) = edge * std::exp(vnode(i) - vref);
        sub(i) = edge * std::exp(vnode(i + 1) - vref);
        diag(i) -= sup(i);
        diag(i + 1) -= sub(i);
    }
}

}  // namespace

Propagator Propagator::mehler(const Potential& gauss, int hermite_order, int grid_points) {
    if (!gauss.rule.gaussian)
        throw std::invalid_argument("Propagator::mehler: needs the Gaussian potential");
    Propagator p;
    p.kind_ = PropagatorKind::mehler_ou;
    p.pot_ = gauss;
    p.npoints_ = grid_points;
    p.hermite_ = gauss_hermite_prob(hermite_order);
    return p;
}

Propagator Propagator::grid_cn(const Potential& pot, int grid_points, int steps, int rannacher) {
    Propagator p;
    p.kind_ = PropagatorKind::grid_cn;
    p.pot_ = pot;
    p.npoints_ = grid_points;
    p.steps_ = steps;
    p.rannacher_ = rannacher;
    return p;
}

double Propagator::apply_at(const RealFn& f, double t, double x) const {
    if (kind_ != PropagatorKind::mehler_ou)
        throw std::logic_error("apply_at: pointwise evaluation is Mehler-only");
    const double e = std::exp(-t);
    const double s = std::sqrt(std::max(0.0, 1.0 - e * e));
    double acc = 0.0;
    for (int j = 0; j < hermite_.nodes.size(); ++j)
        acc += hermite_.weights(j) * f(e * x + s * hermite_.nodes(j));
    if (!std::isfinite(acc)) throw std::runtime_error("mehler: quadrature overflow");
    return acc;
}

GridFunction Propagator::cn_march(Eigen::ArrayXd u, double t) const {
    const double a = -pot_.half_width, b = pot_.half_width;
    const int n = npoints_;
    const double dx = (b - a) / (n - 1);
    Eigen::ArrayXd lsub, ldiag, lsup;
    generator_bands(pot_.V, a, dx, n, lsub, ldiag, lsup);

    const double dt = t / steps_;
    auto mul_L = [&](const Eigen::ArrayXd& v) {
        Eigen::ArrayXd out = ldiag * v;
        out.head(n - 1) += lsup * v.tail(n - 1);
        out.tail(n - 1) += lsub * v.head(n - 1);
        return out;
    };

    Tridiag ie, cn;
    ie.factor_identity_minus(lsub, ldiag, lsup, dt / 2);   // implicit Euler half-steps
    cn.factor_identity_minus(lsub, ldiag, lsup, dt / 2);   // CN implicit part
    int step = 0;
    for (int r = 0; r < rannacher_ && step < steps_; ++r, ++step) {
        u = ie.solve(u);
        u = ie.solve(u);
    }
    for (; step < steps_; ++step) {
        const Eigen::ArrayXd rhs = u + (dt / 2) * mul_L(u);
        u = cn.solve(rhs);
    }
    return GridFunction(a, b, std::move(u));
}

GridFunction Propagator::apply(const RealFn& f, double t) const {
    const double a = -pot_.half_width, b = pot_.half_width;
    if (kind_ == PropagatorKind::mehler_ou) {
        Eigen::ArrayXd v(npoints_);
        const double dx = (b - a) / (npoints_ - 1);
        for (int i = 0; i < npoints_; ++i) v(i) = apply_at(f, t, a + i * dx);
        return GridFunction(a, b, std::move(v));
    }
    Eigen::ArrayXd u(npoints_);
    const double dx = (b - a) / (npoints_ - 1);
    for (int i = 0; i < npoints_; ++i) u(i) = f(a + i * dx);
    if (t == 0.0) return GridFunction(a, b, std::move(u));
    return cn_march(std::move(u), t);
}

std::vector<GridFunction> Propagator::trajectory(const RealFn& f,
                                                 const std::vector<double>& times) const {
    std::vector<GridFunction> out;
    out.reserve(times.size());
    if (kind_ == PropagatorKind::mehler_ou) {
        for (double t : times) out.push_back(apply(f, t));
        return out;
    }
    const double a = -pot_.half_width, b = pot_.half_width;
    const int n = npoints_;
    const double dx = (b - a) / (n - 1);
    Eigen::ArrayXd lsub, ldiag, lsup;
    generator_bands(pot_.V, a, dx, n, lsub, ldiag, lsup);
    auto mul_L = [&](const Eigen::ArrayXd& v) {
        Eigen::ArrayXd r = ldiag * v;
        r.head(n - 1) += lsup * v.tail(n - 1);
        r.tail(n - 1) += lsub * v.head(n - 1);
        return r;
    };
    Eigen::ArrayXd u(n);
    for (int i = 0; i < n; ++i) u(i) = f(a + i * dx);
    const double t_end = times.back();
    const double dt = t_end > 0 ? t_end / steps_ : 1.0;
    Tridiag ie, cn;
    ie.factor_identity_minus(lsub, ldiag, lsup, dt / 2);
    cn.factor_identity_minus(lsub, ldiag, lsup, dt / 2);
    size_t next = 0;
    double tcur = 0.0;
    int step = 0;
    while (next < times.size() && times[next] <= tcur + 1e-14) {
        out.emplace_back(a, b, u);
        ++next;
    }
    while (next < times.size()) {
        if (step < rannacher_) {
            u = ie.solve(u);
            u = ie.solve(u);
        } else {
            const Eigen::ArrayXd rhs = u + (dt / 2) * mul_L(u);
            u = cn.solve(rhs);
        }
        ++step;
        tcur = step * dt;
        while (next < times.size() && times[next] <= tcur + 1e-9 * t_end) {
            out.emplace_back(a, b, u);
            ++next;
        }
    }
    return out;
}

GridFunction frozen_apply(const RealFn& f, double s, double t_freeze,
                          const PotentialFamily& fam, int grid_points, int steps) {
    const Potential pot = fam.at(t_freeze);
    Propagator p = Propagator::grid_cn(pot, grid_points, steps);
    return p.apply(f, s);
}

GradientBoundReport gradient_bound_check(const RealFn& f, const RealFn& df,
                                         const std::optional<WeightW>& W,
                                         const Propagator& prop, double t, double tol) {
    GradientBoundReport rep;
    const Potential& pot = prop.potential();
    const double rho = pot.hessian_lb;
    const double a = -pot.half_width, b = pot.half_width;
    const int n = 2049;
    const double dx = (b - a) / (n - 1);

    double c = 0.0;
    if (W) {
        for (int i = 0; i < n; ++i) {
            const double x = a + i * dx;
            const double w = W->w(x);
            c = std::max(c, 2.0 * std::abs(W->dw(x)));
            if (w != 0.0) {
                const double lw = W->d2w(x) - pot.dV(x) * W->dw(x);
                const double val = lw / w - rho;
                c = std::max(c, std::max(-val, 0.0));
            }
            if (!std::isfinite(c)) {
                rep.c_finite = false;
                return rep;
            }
        }
    }
    rep.c = c;

    auto wfn = [&W](double x) { return W ? W->w(x) : 0.0; };
    auto lhs_fn = [&](double x) { return std::abs(df(x)) + wfn(x) * f(x); };
    const GridFunction pt_lhs = prop.apply(lhs_fn, t);
    const GridFunction pt_f = prop.apply(f, t);
    const GridFunction dpt_f = pt_f.derivative();

    const double factor = std::exp((c - rho) * t);
    double min_slack = std::numeric_limits<double>::infinity();
    // stay clear of the truncation boundary where the kernel is clipped
    const double margin = 0.15 * (b - a);
    for (int i = 0; i < n; ++i) {
        const double x = a + i * dx;
        if (x < a + margin || x > b - margin) continue;
        const double slack = factor * pt_lhs(x) - (std::abs(dpt_f(x)) + wfn(x) * pt_f(x));
        min_slack = std::min(min_slack, slack);
    }
    rep.min_slack = min_slack;
    rep.pass = min_slack >= -tol;
    return rep;
}

}  // namespace orlab
