#ifndef ORLAB_SEMIGROUP_HPP
#define ORLAB_SEMIGROUP_HPP

#include <optional>
#include <vector>

#include "orlab/grid.hpp"
#include "orlab/measure.hpp"

namespace orlab {

enum class PropagatorKind { mehler_ou, grid_cn };

/// Applies P_t for the diffusion generator u'' - V' u' to grid functions.
/// The Mehler realization is exact for the Ornstein-Uhlenbeck case; the
/// grid realization is Crank-Nicolson with a conservative (no-flux)
/// discretization that is exactly reversible for the discrete measure.
class Propagator {
  public:
    static Propagator mehler(const Potential& gauss, int hermite_order = 160,
                             int grid_points = 4097);
    static Propagator grid_cn(const Potential& pot, int grid_points = 4097,
                              int steps = 1024, int rannacher = 2);

    PropagatorKind kind() const { return kind_; }
    double half_width() const { return pot_.half_width; }
    const Potential& potential() const { return pot_; }

    GridFunction apply(const RealFn& f, double t) const;

    /// One continuous march with snapshots at the requested times
    /// (times must be non-decreasing, starting at >= 0).
    std::vector<GridFunction> trajectory(const RealFn& f, const std::vector<double>& times) const;

    /// Pointwise Mehler evaluation (exact OU kernel quadrature).
    double apply_at(const RealFn& f, double t, double x) const;

  private:
    PropagatorKind kind_ = PropagatorKind::mehler_ou;
    Potential pot_;
    int npoints_ = 4097;
    int steps_ = 1024;
    int rannacher_ = 2;
    GaussRule hermite_;

    GridFunction cn_march(Eigen::ArrayXd u, double t) const;
};

/// P_s^{(t)} f: semigroup of the generator frozen at family time t, run
/// for duration s.
GridFunction frozen_apply(const RealFn& f, double s, double t_freeze,
                          const PotentialFamily& fam, int grid_points = 4097,
                          int steps = 1024);

/// A nonnegative weight W with its derivatives, for the gradient bound.
struct WeightW {
    RealFn w;
    RealFn dw;
    RealFn d2w;
};

struct GradientBoundReport {
    double c = 0.0;          // max(2||grad W||_inf, sup_{W!=0} (LW/W - rho)_-)
    double min_slack = 0.0;  // min of e^{(c-rho)t} P_t(|f'| + W f) - (|(P_t f)'| + W P_t f)
    bool pass = false;
    bool c_finite = true;
};

/// Pointwise commutation bound check for nonnegative f.
GradientBoundReport gradient_bound_check(const RealFn& f, const RealFn& df,
                                         const std::optional<WeightW>& W,
                                         const Propagator& prop, double t,
                                         double tol = 1e-8);

}  // namespace orlab

#endif
