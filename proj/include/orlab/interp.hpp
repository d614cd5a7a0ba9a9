#ifndef ORLAB_INTERP_HPP
#define ORLAB_INTERP_HPP

#include <Eigen/Dense>

#include "orlab/grid.hpp"

namespace orlab {

/// Cumulative primitive of a one-signed integrand on a uniform mesh,
/// interpolated by monotone cubic Hermite with the exact slopes (the
/// integrand at the nodes), Fritsch-Carlson clipped as a safeguard.
/// Strictly monotone by construction, hence invertible.
class HermiteTable {
  public:
    HermiteTable() = default;

    /// T(x) = int_a^x g, g evaluated per cell with an 8-point Gauss rule.
    static HermiteTable cumulative(const RealFn& integrand, double a, double b, int cells);

    double operator()(double x) const;
    double deriv(double x) const;

    /// Solves T(x) = y. Newton within the bracketing cell, bisection guarded.
    double inverse(double y) const;

    void shift(double c) { val_ += c; }

    double a() const { return a_; }
    double b() const { return a_ + (val_.size() - 1) * h_; }
    double front_value() const { return val_(0); }
    double back_value() const { return val_(val_.size() - 1); }
    bool increasing() const { return increasing_; }
    bool in_range(double x) const { return x >= a_ && x <= b(); }
    bool value_in_range(double y) const;

  private:
    double a_ = 0.0, h_ = 1.0;
    Eigen::ArrayXd val_, slope_;
    bool increasing_ = true;

    double eval_cell(int i, double t) const;
};

}  // namespace orlab

#endif
