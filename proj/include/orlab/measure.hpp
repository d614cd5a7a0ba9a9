#ifndef ORLAB_MEASURE_HPP
#define ORLAB_MEASURE_HPP

#include <functional>
#include <string>

#include "orlab/grid.hpp"
#include "orlab/quadrature.hpp"

namespace orlab {

/// Quadrature attached to a probability measure on the line: composite
/// Gauss-Legendre panels on the truncation interval [-R,R], dyadically
/// refinable, plus a Gauss-Hermite specialization for the Gaussian.
struct QuadratureRule {
    PanelRule panels;
    GaussRule hermite;       // used when `gaussian` is set
    bool gaussian = false;
    int level = 0;

    QuadratureRule refined() const;
};

/// mu(dx) = e^{-V(x)} dx / Z on [-R, R]; V need not be normalized, the
/// normalization Z is computed once at construction. Immutable afterwards.
struct Potential {
    std::string name;
    RealFn V;
    RealFn dV;          // V'
    double hessian_lb = 0.0;  // rho with V'' >= rho
    double half_width = 0.0;  // R
    double log_Z = 0.0;       // log int e^{-V} dx
    QuadratureRule rule;

    // weights against d mu at rule.panels.nodes (or hermite nodes)
    Eigen::ArrayXd mu_weights;
    Eigen::ArrayXd mu_nodes;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// General-purpose potential construction. R defaults to the solution of
/// V(R)-min V >= 40 (rounded up); Z by quadrature.
Potential make_potential(std::string name, RealFn V, RealFn dV,
                         double hessian_lb, double half_width = 0.0,
                         int panels = 256, int order = 12);

/// Standard Gaussian gamma_1 (V = x^2/2 + log sqrt(2 pi)), with the
/// Gauss-Hermite specialization enabled.
Potential gaussian_potential(int hermite_order = 200);

/// The smooth |x|^alpha potential: |x|^alpha outside [-1,1] and the
/// matching quartic inside, C^1 at the seam.  alpha in (1,2).
Potential build_u_alpha(double alpha);

double u_alpha_value(double alpha, double x);
double u_alpha_deriv(double alpha, double x);

/// int g d mu with a Richardson error estimate from one refinement.
IntegralResult integrate(const RealFn& g, const Potential& mu);

/// Same against the raw (unnormalized) density e^{-U} dx.
IntegralResult integrate_raw(const RealFn& g, const RealFn& U, double half_width,
                             int panels = 512, int order = 12);

/// Ent_mu(g) = int g log g d mu - (int g) log(int g), g >= 0.
double entropy(const RealFn& g, const Potential& mu);

/// One-parameter family of potentials t -> V_t with time derivatives.
/// Vdot and its space derivatives follow the unnormalized potential; the
/// centered version (derivative of the normalized potential) is
/// vdot(t,x) - mu_t(vdot).
struct PotentialFamily {
    std::string name;
    std::function<double(double, double)> V, dV, d2V;          // (t,x)
    std::function<double(double, double)> Vdot, dVdot, d2Vdot; // (t,x)
    double half_width = 0.0;

    Potential at(double t, int panels = 256, int order = 12) const;
};

/// V_t = x^2/2 + alpha(t) (1+x^2)^{beta/2}, alpha(t) = rate * t.
PotentialFamily builtin_inhomog_family(double beta, double rate);

/// mu_t(vdot): mean of the unnormalized Vdot, so that
/// vdot_centered = Vdot - mean is the derivative of the normalized V_t.
double vdot_mean(const PotentialFamily& fam, double t, const Potential& frozen);

}  // namespace orlab

#endif
