#include "orlab/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

GridFunction::GridFunction(double a, double b, Eigen::ArrayXd values)
    : a_(a), b_(b), v_(std::move(values)) {
    if (v_.size() < 2) throw std::invalid_argument("GridFunction: need >= 2 points");
    if (!(b > a)) throw std::invalid_argument("GridFunction: empty interval");
    dx_ = (b_ - a_) / (v_.size() - 1);
}

GridFunction GridFunction::sample(const RealFn& f, double a, double b, int npoints) {
    Eigen::ArrayXd v(npoints);
    const double h = (b - a) / (npoints - 1);
    for (int i = 0; i < npoints; ++i) v(i) = f(a + i * h);
    return GridFunction(a, b, std::move(v));
}

Eigen::ArrayXd GridFunction::xs() const {
    return Eigen::ArrayXd::LinSpaced(v_.size(), a_, b_);
}

double GridFunction::slope_at(int i) const {
    const int n = size();
    if (i == 0) return (v_(1) - v_(0)) / dx_;
    if (i == n - 1) return (v_(n - 1) - v_(n - 2)) / dx_;
    if (i == 1 || i == n - 2) return (v_(i + 1) - v_(i - 1)) / (2.0 * dx_);
    return (8.0 * (v_(i + 1) - v_(i - 1)) - (v_(i + 2) - v_(i - 2))) / (12.0 * dx_);
}

double GridFunction::operator()(double x) const {
    if (x <= a_) return v_(0);
    if (x >= b_) return v_(size() - 1);
    int i = static_cast<int>((x - a_) / dx_);
    if (i > size() - 2) i = size() - 2;
    const double t = (x - (a_ + i * dx_)) / dx_;
    const double m0 = slope_at(i) * dx_;
    const double m1 = slope_at(i + 1) * dx_;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * v_(i) + (t3 - 2 * t2 + t) * m0 +
           (-2 * t3 + 3 * t2) * v_(i + 1) + (t3 - t2) * m1;
}

GridFunction GridFunction::derivative() const {
    const int n = size();
    Eigen::ArrayXd d(n);
    d(0) = (v_(1) - v_(0)) / dx_;
    d(n - 1) = (v_(n - 1) - v_(n - 2)) / dx_;
    for (int i = 1; i + 1 < n; ++i) d(i) = (v_(i + 1) - v_(i - 1)) / (2.0 * dx_);
    return GridFunction(a_, b_, std::move(d));
}

}  // namespace orlab
