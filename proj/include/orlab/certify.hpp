#ifndef ORLAB_CERTIFY_HPP
#define ORLAB_CERTIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "orlab/family.hpp"
#include "orlab/inequality.hpp"
#include "orlab/luxnorm.hpp"
#include "orlab/measure.hpp"
#include "orlab/semigroup.hpp"
#include "orlab/testfunctions.hpp"

namespace orlab {

int worker_count();  // ORLAB_WORKERS, default 1
void parallel_for_ordered(int n, const std::function<void(int)>& body);

// ---- homogeneous hypercontractivity -------------------------------------

struct HyperExperiment {
    const StandardOrliczFamily* family = nullptr;
    const Potential* mu = nullptr;
    const Propagator* prop = nullptr;
    std::vector<TestFunction> fs;
    std::vector<double> t_grid;  // increasing, starting at 0
    double eps_mono = 0.0;       // 0 = auto: 5x the measured error estimate
};

struct MonotoneRow {
    double t = 0.0;
    double norm = 0.0;
};

struct GrossFunctionResult {
    std::string f_id;
    std::vector<MonotoneRow> rows;
    double worst_drop = 0.0;  // min over steps of N(t_{i+1}) - N(t_i); <= 0 wanted
    double err_est = 0.0;
    bool pass = false;
};

struct GrossReport {
    std::vector<GrossFunctionResult> per_function;
    double eps_mono = 0.0;
    double fsob_c = 0.0;            // 1/lambda'(0), the (ii)=>(i) constant
    double fsob_worst_ratio = 0.0;  // max_f lhs/(c rhs) of the F-Sobolev form
    bool fsob_pass = false;
    bool pass = false;
};

/// Norm trajectories N(t) = ||P_t f||_{Phi_t} for every test function,
/// certified non-increasing, plus the t=0 functional-inequality direction.
GrossReport gross_orlicz_verify(const HyperExperiment& exp);

// ---- hyper-boundedness ---------------------------------------------------

struct DEpsilonResult {
    double value = 0.0;
    double worst_violation = 0.0;  // of F_{b'}(x) <= eps F_b(x) + D on the grid
    bool grid_ok = false;
};

DEpsilonResult d_epsilon(double beta, double beta_prime, double eps, int grid_n = 240);

struct HyperboundResult {
    double m_closed = 0.0;
    double m_numeric = 0.0;
    double rel_gap = 0.0;
    double max_slope_dev = 0.0;  // deviation of the optimal path from constant slope
    bool within_1pct = false;
};

/// Closed-form hyper-boundedness factor for the F_beta pair, cross-checked
/// against numeric minimization over piecewise-linear exponent paths.
HyperboundResult hyperbound_factor(double beta, double beta_prime, double c,
                                   double s, double t, int segments = 64);

// ---- perturbation of families --------------------------------------------

struct PerturbReport {
    std::string f_id;
    double lhs = 0.0, rhs = 0.0;
    bool pass = false;
};

/// ||P_t f||_{Psi_t o F} <= ||f||_{Psi_0 o F} given Psi-hypercontractivity.
PerturbReport perturb_transport_check(const StandardOrliczFamily& psi_fam,
                                      const YoungFunction& F, const TestFunction& f,
                                      const Potential& mu, const Propagator& prop,
                                      double t, double tol = 1e-8);

// ---- inhomogeneous -------------------------------------------------------

struct InhomogConstants {
    std::vector<double> t_grid;
    std::vector<double> a, b, c, rho, rho_bar;
};

/// Sup-norm constants of the time derivative of the potential family on a
/// spatial grid (extrema refined by golden section).
InhomogConstants inhomog_constants(const PotentialFamily& fam,
                                   const std::vector<double>& t_grid, int grid_n = 8193);

double rho_bar_bakry_emery(double rho);
double rho_bar_holley_stroock(double base, double osc);

struct QmResult {
    double q_s = 0.0, q_t = 0.0, m = 0.0;
};

/// q(t) = 1 + (p-1) exp int_0^t 2/rho_bar and the factor m(s,t).
QmResult inhomog_qm(double p, const InhomogConstants& k, double s, double t);

/// Time-dependent coefficient set for the general inhomogeneous bound.
struct Main2Coefficients {
    RealFn b, rho, rho_bar;
    RealFn B, C, D, E, delta, Fc;
    RealFn c_sup;                  // mode (i): ||W_t||_inf
    RealFn c_prime, delta_p, Fp;   // mode (ii)
};

/// m(s,t) under mode (i) or (ii); throws naming the violated hypothesis.
double inhomog_qm_general(const Main2Coefficients& k, int mode, double s, double t,
                          int quad_n = 512);

struct InhomogVerifyRow {
    std::string f_id;
    double lhs = 0.0, rhs = 0.0;
    bool pass = false;
};

struct InhomogVerifyReport {
    std::vector<InhomogVerifyRow> rows;
    double q_s = 0.0, q_t = 0.0, m = 0.0;
    bool pass = false;
};

/// ||P_t^{(t)} f||_{q(t), mu_t} <= m(s,t) ||P_s^{(s)} f||_{q(s), mu_s}.
InhomogVerifyReport inhomog_verify(const PotentialFamily& fam, double p,
                                   const std::vector<TestFunction>& fs, double s, double t,
                                   int t_samples = 201, double tol = 1e-6);

// ---- L1 log L1 continuity and tails ---------------------------------------

struct TailRow {
    double s = 0.0;
    double gamma_level = 0.0;  // gamma({P_t fhat >= s})
    double product = 0.0;      // s (log s)^{3/2} gamma_level
    double markov = 0.0;       // s gamma_level
};

struct TailReport {
    std::string f_id;
    std::vector<TailRow> rows;
    double sup_product = 0.0;
    double markov_max = 0.0;
    double mass = 0.0;  // int fhat dgamma for the normalized function
};

/// Level-set tails of P_t(f/||f||_Phi) under the Gaussian, Phi = L1 log L1.
TailReport talagrand_tail(const TestFunction& f, double t, const std::vector<double>& s_grid,
                          const Potential& gauss, const Propagator& prop,
                          int grid_points = 8193);

struct WitnessRow {
    double a = 0.0;
    double norm_psi = 0.0;  // ||P_t f_a||_Psi
    double norm_phi = 0.0;  // ||f_a||_Phi
    double ratio = 0.0;
};

/// The e^{a x/2} witness ratios showing no fixed continuity constant works.
std::vector<WitnessRow> non_continuity_witness(const YoungFunction& psi, double t,
                                               const std::vector<double>& a_grid,
                                               const Potential& gauss,
                                               const Propagator& prop);

}  // namespace orlab

#endif
