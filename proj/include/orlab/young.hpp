#ifndef ORLAB_YOUNG_HPP
#define ORLAB_YOUNG_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>

#include "orlab/grid.hpp"

namespace orlab {

/// An even convex function with Phi(0)=0, vanishing only at 0, together
/// with its derivatives on (0,inf) and its inverse on the x>=0 branch.
/// Values are immutable after construction.
struct YoungFunction {
    std::string name;
    RealFn eval;     // Phi(|x|)
    RealFn deriv1;   // Phi' on (0,inf)
    RealFn deriv2;   // Phi'' on (0,inf)
    RealFn inverse;  // Phi^{-1} on [0,inf)
    double bracket_lo = 1e-8;  // root-find bracket hint
    double bracket_hi = 1e8;
    std::optional<double> delta2_K;
    bool nice_flag = true;  // N-function: Phi(x)/x -> 0 at 0 and -> inf at inf
};

enum class YoungOrder { value, d1, d2, inv };

double young_eval(const YoungFunction& phi, YoungOrder order, double x);

/// Builds derivatives by central differences (step max(1e-5, 1e-5|x|))
/// and the inverse by bracketed bisection grown geometrically from the
/// domain hint, when only the evaluation map is available.
YoungFunction young_from_eval(std::string name, RealFn eval,
                              double bracket_lo = 1e-8, double bracket_hi = 1e8,
                              bool nice = true);

// ---- catalog -------------------------------------------------------------

YoungFunction power_young(double p);      // |x|^p
YoungFunction l1logl1_young();            // 2x log x + 1 for |x|>=1, x^2 below
YoungFunction nlog_young();               // x^2 log(1+x^2)
YoungFunction u_young();                  // U = Phi o H^{-1}, Phi the L1logL1 function
YoungFunction exp_young(double delta);    // e^{|x|^delta} - 1
YoungFunction abs_young();                // |x| (convex, not nice)

/// H(x) = int_0^x sqrt(Phi'') for the L1logL1 function, and its inverse.
double h_transform(double x);
double h_transform_inv(double y);

/// Catalog lookup from a "name" or "name:param" string
/// (lp:p | l1logl1 | nlog | ubg | exp:delta | abs).
YoungFunction make_young(const std::string& spec);

// ---- validation ----------------------------------------------------------

/// Empirical Delta_2 constant max_grid Phi(2x)/Phi(x). Asserts the
/// sandwich Phi(x) <= x Phi'(x) <= (K-1) Phi(x) on the grid.
double delta2_constant(const YoungFunction& phi, const Eigen::ArrayXd& grid);

struct YoungReport {
    bool zero_at_zero = false;
    bool even = false;
    bool convex = false;
    bool nice = false;          // N-function limits at the grid endpoints
    double worst_convexity = 0; // most negative second difference seen
    double ratio_at_left = 0;   // Phi(x)/x at the smallest grid point
    double ratio_at_right = 0;  // Phi(x)/x at the largest grid point
    bool all_ok() const { return zero_at_zero && even && convex; }
};

YoungReport validate_young(const YoungFunction& phi, const Eigen::ArrayXd& grid,
                           double tol = 1e-9);

}  // namespace orlab

#endif
