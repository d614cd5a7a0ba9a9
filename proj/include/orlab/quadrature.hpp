#ifndef ORLAB_QUADRATURE_HPP
#define ORLAB_QUADRATURE_HPP

#include <Eigen/Dense>

namespace orlab {

/// Nodes and weights of a Gauss rule. Weights are positive.
struct GaussRule {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

/// Gauss-Legendre rule of order n on [-1,1] (Golub-Welsch).
GaussRule gauss_legendre(int n);

/// Gauss-Hermite rule of order n for the standard Gaussian probability
/// measure: sum_i w_i f(x_i) ~ int f dgamma_1, weights summing to 1.
GaussRule gauss_hermite_prob(int n);

/// Composite Gauss-Legendre rule: `panels` equal panels of the given
/// order covering [a,b]. Integrates sum_i w_i f(x_i) ~ int_a^b f dx.
struct PanelRule {
    double a = 0.0, b = 0.0;
    int panels = 0, order = 0;
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;

    PanelRule refined() const;  // doubles the panel count
};

PanelRule composite_legendre(double a, double b, int panels, int order = 12);

}  // namespace orlab

#endif
