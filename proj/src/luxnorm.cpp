#include "orlab/luxnorm.hpp"

#include <cmath>
#include <stdexcept>

#include "orlab/family.hpp"

namespace orlab {

namespace {

/// Modular int Phi(|f|/lambda) dmu; +inf samples propagate to +inf.
double modular(const RealFn& f, const YoungFunction& phi, const Potential& mu,
               double lambda) {
    double acc = 0.0;
    const Eigen::ArrayXd& nodes = mu.rule.gaussian ? mu.rule.hermite.nodes : mu.mu_nodes;
    const Eigen::ArrayXd& weights = mu.rule.gaussian ? mu.rule.hermite.weights : mu.mu_weights;
    for (int i = 0; i < nodes.size(); ++i) {
        const double v = phi.eval(std::abs(f(nodes(i))) / lambda);
        if (std::isnan(v)) throw std::runtime_error("luxembourg_norm: NaN integrand");
        acc += weights(i) * v;
        if (std::isinf(acc)) return acc;
    }
    return acc;
}

}  // namespace

NormResult luxembourg_norm(const RealFn& f, const YoungFunction& phi,
                           const Potential& mu, double tol) {
    NormResult res;
    double hi = 1.0;
    int doublings = 0;
    while (!(modular(f, phi, mu, hi) < 1.0)) {
        hi *= 2.0;
        if (++doublings > 200) {
            res.infinite = true;
            res.value = std::numeric_limits<double>::infinity();
            return res;
        }
    }
    double lo = hi;
    int halvings = 0;
    while (modular(f, phi, mu, lo) < 1.0) {
        lo *= 0.5;
        if (++halvings > 600) {
            res.zero = true;  // modular stays < 1 for arbitrarily small lambda
            res.value = 0.0;
            return res;
        }
    }
    // monotonicity certificate on the bracket endpoints
    if (modular(f, phi, mu, lo) < modular(f, phi, mu, hi) - 1e-12)
        throw std::runtime_error("luxembourg_norm: modular not non-increasing on bracket");
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    double best = hi;  // smallest lambda seen with modular <= 1
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double m = modular(f, phi, mu, mid);
        ++res.iterations;
        if (m <= 1.0) {
            hi = mid;
            best = mid;
        } else {
            lo = mid;
        }
        if (std::abs(m - 1.0) <= tol && m <= 1.0) break;
        if (hi - lo <= 1e-15 * hi) break;
    }
    res.value = best;
    res.residual = std::abs(modular(f, phi, mu, best) - 1.0);
    return res;
}

RealFn isometry_transport(const RealFn& f, const StandardOrliczFamily& family,
                          double s, double t, const Potential& mu) {
    const NormResult nt = luxembourg_norm(f, family.young_at(t), mu);
    if (nt.zero || nt.infinite)
        throw std::domain_error("isometry_transport: ||f||_{Phi_t} must be finite and positive");
    const double n = nt.value;
    return [f, &family, s, t, n](double x) {
        const double v = f(x);
        if (v == 0.0) return 0.0;
        const double sign = v < 0 ? -1.0 : 1.0;
        return sign * n * family.inverse(s, family.eval(t, std::abs(v) / n));
    };
}

LinftyLimitResult linfty_limit(const RealFn& f, double f_sup,
                               const StandardOrliczFamily& family,
                               const std::vector<double>& t_grid,
                               const Potential& mu, double tol) {
    LinftyLimitResult out;
    out.t_grid = t_grid;
    out.target = f_sup / family.x0();
    double prev = -std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (double t : t_grid) {
        const NormResult r = luxembourg_norm(f, family.young_at(t), mu);
        out.norms.push_back(r.value);
        if (r.value < prev - 1e-9) monotone = false;
        prev = r.value;
    }
    out.approached = monotone && std::abs(out.norms.back() - out.target) <= tol * (1 + out.target);
    return out;
}

}  // namespace orlab
