#ifndef ORLAB_GRID_HPP
#define ORLAB_GRID_HPP

#include <Eigen/Dense>
#include <functional>

namespace orlab {

using RealFn = std::function<double(double)>;

/// A function sampled on a uniform grid over [a,b], evaluatable anywhere
/// on the interval through local cubic Hermite interpolation (slopes from
/// fourth-order finite differences). Outside [a,b] the boundary value is
/// returned.
class GridFunction {
  public:
    GridFunction() = default;
    GridFunction(double a, double b, Eigen::ArrayXd values);

    static GridFunction sample(const RealFn& f, double a, double b, int npoints);

    double operator()(double x) const;

    /// Centered differences in the interior, one-sided at the ends.
    GridFunction derivative() const;

    double a() const { return a_; }
    double b() const { return b_; }
    double dx() const { return dx_; }
    int size() const { return static_cast<int>(v_.size()); }
    const Eigen::ArrayXd& values() const { return v_; }
    Eigen::ArrayXd& values() { return v_; }
    Eigen::ArrayXd xs() const;

  private:
    double a_ = 0.0, b_ = 1.0, dx_ = 1.0;
    Eigen::ArrayXd v_;

    double slope_at(int i) const;
};

}  // namespace orlab

#endif
