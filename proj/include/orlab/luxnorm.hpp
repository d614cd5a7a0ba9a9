#ifndef ORLAB_LUXNORM_HPP
#define ORLAB_LUXNORM_HPP

#include <vector>

#include "orlab/measure.hpp"
#include "orlab/young.hpp"

namespace orlab {

class StandardOrliczFamily;  // family.hpp

struct NormResult {
    double value = 0.0;       // lambda*
    double residual = 0.0;    // |modular(lambda*) - 1|
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
    bool infinite = false;    // no finite bracket: norm = +infinity
    bool zero = false;        // f = 0 mu-a.e.
};

/// inf{ lambda>0 : int Phi(|f|/lambda) dmu <= 1 } by monotone bisection.
/// The modular at lambda* is within tol of 1 (except in the zero/infinite
/// cases, which are flagged).
NormResult luxembourg_norm(const RealFn& f, const YoungFunction& phi,
                           const Potential& mu, double tol = 1e-10);

/// Orlicz-norm isometry: I_{s,t}(f) = ||f||_t Phi_s^{-1}(Phi_t(f/||f||_t)),
/// sign-preserved. Guarantees ||I_{s,t}(f)||_{Phi_s} = ||f||_{Phi_t}.
RealFn isometry_transport(const RealFn& f, const StandardOrliczFamily& family,
                          double s, double t, const Potential& mu);

struct LinftyLimitResult {
    std::vector<double> t_grid;
    std::vector<double> norms;
    double target = 0.0;       // ||f||_inf / x0
    bool approached = false;   // last norm within tol of target, approach monotone
};

/// ||f||_{Phi_t} along an increasing t grid with lambda(t) -> infinity;
/// checks the approach to ||f||_inf / x0.
LinftyLimitResult linfty_limit(const RealFn& f, double f_sup,
                               const StandardOrliczFamily& family,
                               const std::vector<double>& t_grid,
                               const Potential& mu, double tol = 1e-3);

}  // namespace orlab

#endif
