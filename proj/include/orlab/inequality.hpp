#ifndef ORLAB_INEQUALITY_HPP
#define ORLAB_INEQUALITY_HPP

#include <map>
#include <string>

#include "orlab/family.hpp"
#include "orlab/luxnorm.hpp"
#include "orlab/measure.hpp"
#include "orlab/semigroup.hpp"
#include "orlab/testfunctions.hpp"
#include "orlab/young.hpp"

namespace orlab {

/// One evaluated functional inequality: both sides, slack and the
/// constants that entered. Evaluators report; they only enforce the
/// unconditional inequalities.
struct IneqEval {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;   // rhs - lhs
    double ratio = 0.0;   // lhs / rhs where meaningful
    std::map<std::string, double> constants;
    std::string f_id;
    double t = 0.0;
    double tol = 0.0;
};

double log_plus(double x);
double neg_part(double x);   // max(-x, 0)
double pos_part(double x);

/// ||f||^2 int d/dt Phi_t(f/||f||) dmu  vs  int Phi_t''(f/||f||) |f'|^2 dmu.
IneqEval eval_eq_f(const StandardOrliczFamily& fam, double t, const TestFunction& f,
                   const Potential& mu);

/// ||f||^2 int Phi0(g) F(Phi0(g)) dmu  vs  int Phi0''(g) |f'|^2 dmu, g = f/||f||.
IneqEval eval_fsobolev(const RealFn& F, const YoungFunction& phi0,
                       const TestFunction& f, const Potential& mu);

/// int f^2 (|U'|^2 - 2U'') e^{-U}  <=  4 int |f'|^2 e^{-U}  (unconditional).
IneqEval eval_ubound(const TestFunction& f, const RealFn& U, const RealFn& dU,
                     const RealFn& d2U, double half_width);

/// int f Phi'(f) log(f / Psi^{-1}(Phi(f))) dmu
///   vs  t_o int Phi''(f)|f'|^2 dmu + (K-1) log C, for f >= 0, ||f||_Phi = 1.
IneqEval eval_hks(const TestFunction& f, const YoungFunction& phi,
                  const YoungFunction& psi, double t_o, double C, const Potential& mu);

/// int f^2 log_+(f^2/||f||_U^2) theta_+(U(f/||f||_U)) dmu
///   vs  c (int |f'|^2 dmu + ||f||_U^2); reports the required c.
IneqEval eval_covid(const TestFunction& f, const RealFn& theta_plus, const Potential& mu);

enum class RothausMode { classical, f_version };

/// Classical: Ent(f^2) <= Ent(ftilde^2) + 2 int ftilde^2 (unconditional).
/// F-version: reports the minimal empirical b.
IneqEval eval_rothaus(const TestFunction& f, RothausMode mode, const Potential& mu,
                      const RealFn* F = nullptr);

/// Var(f) vs C_P int |f'|^2; the constant is reported as the ratio.
IneqEval eval_poincare(const TestFunction& f, const Potential& mu);

struct NashPipeline {
    Eigen::ArrayXd xs;      // tabulation abscissae (>= 1)
    Eigen::ArrayXd theta;   // theta(x) = sup_{s>=1} alpha(s)(x-s) / (8c)
    Eigen::ArrayXd n_vals;  // n(x) = int_x^inf 1/theta
    double tail_coeff = 0.0;  // empirical c with theta >= c x (log x)^2 on the tail
    double x_max = 0.0;

    double theta_at(double x) const;
    double n_at(double t) const;
    double m_at(double t) const;  // m = n^{-1}
};

/// Nash -> ultracontractivity: theta by envelope maximization, n by
/// quadrature plus an analytic tail, m by monotone inversion.
NashPipeline nash_ultra_pipeline(const RealFn& alpha, double c, double x_max = 1e8,
                                 int npts = 2048);

}  // namespace orlab

#endif
