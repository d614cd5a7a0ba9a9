#ifndef ORLAB_FAMILY_HPP
#define ORLAB_FAMILY_HPP

#include <string>
#include <vector>

#include "orlab/interp.hpp"
#include "orlab/young.hpp"

namespace orlab {

/// Ingredients of the standard family: an increasing C^2 function F with
/// F(1)=0 whose reciprocal 1/(xF(x)) is non-integrable at 0, 1 and
/// infinity; a nice C^2 Young function Phi0; and an increasing time change
/// lambda with lambda(0)=0.
struct FamilySpec {
    std::string name;
    RealFn F;
    RealFn Fprime;
    YoungFunction phi0;
    RealFn lambda;
    RealFn lambda_prime;
};

// F catalog
RealFn f_log();
RealFn f_log_prime();
RealFn f_beta(double beta);        // log(1+x)^beta - log(2)^beta
RealFn f_beta_prime(double beta);

// lambda catalog
RealFn lam_linear(double alpha);
RealFn lam_linear_prime(double alpha);
RealFn lam_gross(double rho);      // log((1+e^{(4/rho)t})/2)
RealFn lam_gross_prime(double rho);

struct BuildOptions {
    int u_cells = 1 << 18;
    int v_cells = 1 << 15;
    double u_span = 700.0;         // log-variable reach; e^{+-u_span} must stay representable
    double v_floor = 1e-14;        // tables stop at |y-1| = v_floor
    double junction_eps = 1e-6;    // series zone around y=1
    int anchor_variant = 0;        // alternative anchors prove anchor-independence
};

/// Family member evaluation orders mirroring the Young ones plus the time
/// derivative of the family.
enum class FamilyOrder { value, d1, d2, inv, dot };

/// Phi_t built by shifting the primitives of 1/(xF(x)) by lambda(t) on
/// each side of the anchor x0 (Phi0(x0)=1). Immutable after build.
class StandardOrliczFamily {
  public:
    double x0() const { return x0_; }
    const FamilySpec& spec() const { return spec_; }

    double eval(double t, double x) const;
    double deriv1(double t, double x) const;
    double deriv2(double t, double x) const;
    double inverse(double t, double y) const;
    double dot(double t, double x) const;          // d/dt Phi_t(x)

    YoungFunction young_at(double t) const;

    // primitive access (x0-anchored branches); mainly for validation
    double primitive1(double y) const;             // F_1 on (0,1)
    double primitive2(double y) const;             // F_2 on (1,inf)
    double primitive1_inv(double z) const;
    double primitive2_inv(double z) const;

    /// Core shift map F_i^{-1}(F_i(y0) + lam) on the branch of y0; the
    /// Bernoulli flow of dy/dlam = yF(y) near the y=1 pole.
    double shift_value(double y0, double lam) const;

    friend StandardOrliczFamily build_family(const FamilySpec&, const BuildOptions&);

  private:
    FamilySpec spec_;
    BuildOptions opt_;
    double x0_ = 1.0;
    double fp1_ = 1.0;   // F'(1)
    double fpp1_ = 0.0;  // F''(1)
    HermiteTable b1u_, b1v_, b2v_, b2u_;

    double f_near_one(double eps, double side) const;  // F(1 + side*eps) series
    double f_safe(double y) const;
    double shift_deriv(double y0, double lam, int order) const;  // d^k/dy0^k of the shift

    friend struct FamilyAccess;
};

StandardOrliczFamily build_family(const FamilySpec& spec, const BuildOptions& opt = {});

double family_eval(const StandardOrliczFamily& fam, double t, double x, FamilyOrder order);

struct SpecValidation {
    bool xF_convex = false;
    bool xFx2_convex = false;        // the x^2 relaxation of the hypothesis
    bool monotone_hypothesis = false;
    double worst_xF = 0.0;
    double worst_monotone = 0.0;
};

SpecValidation validate_family_spec(const FamilySpec& spec, const Eigen::ArrayXd& x_grid);

struct FamilyValidation {
    double max_iii_residual = 0.0;   // |FD-in-t of Phi_t - lambda' x F(x)| relative
    double worst_iv = 0.0;           // most negative gap in the (iv) monotonicity
    double worst_convexity = 0.0;    // most negative second difference of any Phi_t
    double junction_c1_gap = 0.0;    // relative first-derivative gap across x0
    double junction_c2_gap = 0.0;
    bool pass(double tol_iii = 1e-5, double tol_iv = 1e-8) const {
        return max_iii_residual <= tol_iii && worst_iv >= -tol_iv && worst_convexity >= -1e-8;
    }
};

FamilyValidation validate_family(const StandardOrliczFamily& fam,
                                 const std::vector<double>& t_grid,
                                 const Eigen::ArrayXd& x_grid);

}  // namespace orlab

#endif
