#include "orlab/interp.hpp"

#include <cmath>
#include <stdexcept>

#include "orlab/quadrature.hpp"

namespace orlab {

HermiteTable HermiteTable::cumulative(const RealFn& integrand, double a, double b,
                                      int cells) {
    if (!(b > a) || cells < 2) throw std::invalid_argument("HermiteTable: bad mesh");
    HermiteTable t;
    t.a_ = a;
    t.h_ = (b - a) / cells;
    t.val_.resize(cells + 1);
    t.slope_.resize(cells + 1);
    const GaussRule g8 = gauss_legendre(8);
    t.val_(0) = 0.0;
    for (int i = 0; i < cells; ++i) {
        const double lo = a + i * t.h_;
        double acc = 0.0;
        for (int k = 0; k < 8; ++k)
            acc += g8.weights(k) * integrand(lo + 0.5 * t.h_ * (g8.nodes(k) + 1.0));
        t.val_(i + 1) = t.val_(i) + 0.5 * t.h_ * acc;
        if (!std::isfinite(t.val_(i + 1)))
            throw std::runtime_error("HermiteTable: non-finite primitive");
    }
    for (int i = 0; i <= cells; ++i) t.slope_(i) = integrand(a + i * t.h_);
    t.increasing_ = t.val_(cells) > t.val_(0);
    // Fritsch-Carlson safeguard: clip slopes to 3x the adjacent secants
    const double sgn = t.increasing_ ? 1.0 : -1.0;
    for (int i = 0; i <= cells; ++i) {
        double cap = std::numeric_limits<double>::infinity();
        if (i > 0) cap = std::min(cap, 3.0 * sgn * (t.val_(i) - t.val_(i - 1)) / t.h_);
        if (i < cells) cap = std::min(cap, 3.0 * sgn * (t.val_(i + 1) - t.val_(i)) / t.h_);
        const double m = sgn * t.slope_(i);
        if (m < 0.0) t.slope_(i) = 0.0;
        else if (m > cap) t.slope_(i) = sgn * cap;
    }
    return t;
}

double HermiteTable::eval_cell(int i, double u) const {
    const double m0 = slope_(i) * h_, m1 = slope_(i + 1) * h_;
    const double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * val_(i) + (u3 - 2 * u2 + u) * m0 +
           (-2 * u3 + 3 * u2) * val_(i + 1) + (u3 - u2) * m1;
}

double HermiteTable::operator()(double x) const {
    const int cells = static_cast<int>(val_.size()) - 1;
    if (x < a_ - 1e-12 * std::abs(a_) || x > a_ + cells * h_ + 1e-9)
        throw std::domain_error("HermiteTable: evaluation outside tabulated range");
    int i = static_cast<int>((x - a_) / h_);
    i = std::clamp(i, 0, cells - 1);
    return eval_cell(i, (x - (a_ + i * h_)) / h_);
}

double HermiteTable::deriv(double x) const {
    const int cells = static_cast<int>(val_.size()) - 1;
    int i = static_cast<int>((x - a_) / h_);
    i = std::clamp(i, 0, cells - 1);
    const double u = (x - (a_ + i * h_)) / h_;
    const double m0 = slope_(i) * h_, m1 = slope_(i + 1) * h_;
    const double u2 = u * u;
    return ((6 * u2 - 6 * u) * val_(i) + (3 * u2 - 4 * u + 1) * m0 +
            (-6 * u2 + 6 * u) * val_(i + 1) + (3 * u2 - 2 * u) * m1) / h_;
}

bool HermiteTable::value_in_range(double y) const {
    const double lo = std::min(front_value(), back_value());
    const double hi = std::max(front_value(), back_value());
    return y >= lo && y <= hi;
}

double HermiteTable::inverse(double y) const {
    const int cells = static_cast<int>(val_.size()) - 1;
    if (!value_in_range(y))
        throw std::domain_error("HermiteTable: inverse target outside tabulated range");
    // bracketing cell by binary search on the monotone node values
    int lo = 0, hi = cells;
    const double sgn = increasing_ ? 1.0 : -1.0;
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        if (sgn * val_(mid) <= sgn * y)
            lo = mid;
        else
            hi = mid;
    }
    double ulo = 0.0, uhi = 1.0;
    const double span = val_(hi) - val_(lo);
    double u = span != 0.0 ? (y - val_(lo)) / span : 0.5;  // secant start
    u = std::clamp(u, 0.0, 1.0);
    const double m0 = slope_(lo) * h_, m1 = slope_(lo + 1) * h_;
    for (int it = 0; it < 100; ++it) {
        const double fu = eval_cell(lo, u) - y;
        if (sgn * fu > 0)
            uhi = u;
        else
            ulo = u;
        const double d = (6 * u * u - 6 * u) * val_(lo) + (3 * u * u - 4 * u + 1) * m0 +
                         (-6 * u * u + 6 * u) * val_(lo + 1) + (3 * u * u - 2 * u) * m1;
        double unew = d != 0.0 ? u - fu / d : 0.5 * (ulo + uhi);
        if (!(unew > ulo && unew < uhi)) unew = 0.5 * (ulo + uhi);  // bisection guard
        if (std::abs(unew - u) <= 1e-16) {
            u = unew;
            break;
        }
        u = unew;
        if (uhi - ulo <= 1e-16) break;
    }
    return a_ + (lo + u) * h_;
}

}  // namespace orlab
