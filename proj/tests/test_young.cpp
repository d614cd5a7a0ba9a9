#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orlab/quadrature.hpp"
#include "orlab/young.hpp"

using namespace orlab;

namespace {

Eigen::ArrayXd log_grid(double lo, double hi, int n) {
    Eigen::ArrayXd g(n);
    for (int i = 0; i < n; ++i)
        g(i) = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

}  // namespace

TEST_CASE("gauss rules reproduce known integrals") {
    const GaussRule gl = gauss_legendre(16);
    double acc = 0.0;
    for (int i = 0; i < 16; ++i) acc += gl.weights(i) * gl.nodes(i) * gl.nodes(i);
    CHECK(acc == doctest::Approx(2.0 / 3.0).epsilon(1e-13));

    const GaussRule gh = gauss_hermite_prob(40);
    CHECK(gh.weights.sum() == doctest::Approx(1.0).epsilon(1e-13));
    double m2 = 0.0, m4 = 0.0;
    for (int i = 0; i < 40; ++i) {
        m2 += gh.weights(i) * gh.nodes(i) * gh.nodes(i);
        m4 += gh.weights(i) * std::pow(gh.nodes(i), 4);
    }
    CHECK(m2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m4 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("young_eval on the power function") {
    const YoungFunction p2 = power_young(2.0);
    CHECK(young_eval(p2, YoungOrder::value, 3.0) == doctest::Approx(9.0));
    CHECK(young_eval(p2, YoungOrder::d1, 3.0) == doctest::Approx(6.0));
    CHECK(young_eval(p2, YoungOrder::d2, 3.0) == doctest::Approx(2.0));
    CHECK(young_eval(p2, YoungOrder::inv, 9.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(young_eval(p2, YoungOrder::inv, -1.0), std::domain_error);
}

TEST_CASE("l1logl1 branches agree at the seam") {
    const YoungFunction phi = l1logl1_young();
    CHECK(phi.eval(1.0) == doctest::Approx(1.0));  // 2*1*log1+1 = 1^2
    CHECK(phi.eval(0.5) == doctest::Approx(0.25));
    CHECK(phi.eval(2.0) == doctest::Approx(4 * std::log(2.0) + 1));
    // C^2 at the seam
    CHECK(phi.deriv1(1.0 - 1e-9) == doctest::Approx(phi.deriv1(1.0 + 1e-9)).epsilon(1e-6));
    CHECK(phi.deriv2(1.0 - 1e-9) == doctest::Approx(phi.deriv2(1.0 + 1e-9)).epsilon(1e-6));
}

TEST_CASE("U inverse matches brute-force bisection on the composite") {
    const YoungFunction u = u_young();
    // independent oracle: bisection directly on U = Phi o H^{-1}
    const YoungFunction phi = l1logl1_young();
    auto u_direct = [&](double x) { return phi.eval(h_transform_inv(x)); };
    double lo = 0.0, hi = 64.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (u_direct(mid) < 1.0 ? lo : hi) = mid;
    }
    CHECK(u.inverse(1.0) == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-10));
    CHECK(u.inverse(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    // derivative orders agree with finite differences of order 0
    for (double x : {0.3, 0.9, 1.7, 3.0, 8.0}) {
        const double h = 1e-5 * std::max(1.0, x);
        const double fd1 = (u.eval(x + h) - u.eval(x - h)) / (2 * h);
        const double fd2 = (u.eval(x + h) - 2 * u.eval(x) + u.eval(x - h)) / (h * h);
        CHECK(u.deriv1(x) == doctest::Approx(fd1).epsilon(1e-6));
        CHECK(u.deriv2(x) == doctest::Approx(fd2).epsilon(1e-4));
    }
}

TEST_CASE("U lower bounds from the tail analysis") {
    const YoungFunction u = u_young();
    const Eigen::ArrayXd grid = log_grid(1e-3, 1e4, 200);
    for (int i = 0; i < grid.size(); ++i) {
        const double x = grid(i);
        CHECK(u.eval(x) >= 0.5 * x * x * (1 - 1e-12));
        const double lp = x * x > 1 ? std::log(x * x) : 0.0;
        CHECK(u.eval(x) >= 0.125 * x * x * lp * (1 - 1e-12));
    }
}

TEST_CASE("delta2 constants") {
    const Eigen::ArrayXd grid = log_grid(0.1, 100.0, 400);
    CHECK(delta2_constant(power_young(2.0), grid) == doctest::Approx(4.0));
    CHECK(delta2_constant(power_young(3.0), grid) == doctest::Approx(8.0));

    const YoungFunction phi = l1logl1_young();
    const double k = delta2_constant(phi, grid);
    CHECK(k <= 4.0 + 1e-12);
    // dense brute-force oracle
    double k_dense = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double x = 0.1 * std::pow(1000.0, i / 19999.0);
        k_dense = std::max(k_dense, phi.eval(2 * x) / phi.eval(x));
    }
    CHECK(k == doctest::Approx(k_dense).epsilon(1e-3));
}

TEST_CASE("delta2 sandwich on the catalog") {
    const Eigen::ArrayXd grid = log_grid(0.05, 50.0, 300);
    for (const auto& phi : {power_young(2.0), power_young(4.0), l1logl1_young(), nlog_young()}) {
        const double k = delta2_constant(phi, grid);
        for (int i = 0; i < grid.size(); ++i) {
            const double x = grid(i);
            const double lhs = phi.eval(x), mid = x * phi.deriv1(x);
            CHECK(mid >= lhs * (1 - 1e-9));
            CHECK(mid <= (k - 1) * lhs * (1 + 1e-9));
        }
    }
}

TEST_CASE("validate_young classifies the catalog") {
    const Eigen::ArrayXd grid = log_grid(1e-4, 1e4, 300);
    Eigen::ArrayXd sym(2 * grid.size());
    sym << -grid.reverse(), grid;

    const YoungReport p1 = validate_young(power_young(1.0), grid);
    CHECK(p1.convex);
    CHECK_FALSE(p1.nice);  // Phi(x)/x -> 1, not 0

    const YoungReport e2 = validate_young(exp_young(2.0), log_grid(1e-4, 5.0, 200));
    CHECK(e2.convex);
    CHECK(e2.nice);

    const YoungReport ab = validate_young(abs_young(), grid);
    CHECK(ab.convex);
    CHECK_FALSE(ab.nice);

    for (const auto& phi : {power_young(2.0), l1logl1_young(), nlog_young(), u_young()}) {
        const YoungReport r = validate_young(phi, grid);
        CHECK(r.zero_at_zero);
        CHECK(r.even);
        CHECK(r.convex);
        CHECK(r.nice);
    }
}

TEST_CASE("inverse is increasing and a right inverse") {
    const Eigen::ArrayXd ys = log_grid(1e-6, 1e6, 120);
    for (const auto& phi : {power_young(2.5), l1logl1_young(), nlog_young(), u_young()}) {
        double prev = -1.0;
        for (int i = 0; i < ys.size(); ++i) {
            const double x = phi.inverse(ys(i));
            CHECK(x > prev);
            prev = x;
            CHECK(phi.eval(x) == doctest::Approx(ys(i)).epsilon(1e-8));
        }
    }
}

TEST_CASE("young_from_eval finite differences match analytic derivatives") {
    const YoungFunction ref = power_young(3.0);
    const YoungFunction fd = young_from_eval("fd-cube", ref.eval);
    for (double x : {0.2, 1.0, 4.0}) {
        CHECK(fd.deriv1(x) == doctest::Approx(ref.deriv1(x)).epsilon(1e-6));
        CHECK(fd.deriv2(x) == doctest::Approx(ref.deriv2(x)).epsilon(1e-4));
        CHECK(fd.inverse(ref.eval(x)) == doctest::Approx(x).epsilon(1e-9));
    }
}

TEST_CASE("catalog lookup") {
    CHECK(make_young("lp:4").eval(2.0) == doctest::Approx(16.0));
    CHECK(make_young("l1logl1").eval(1.0) == doctest::Approx(1.0));
    CHECK_THROWS(make_young("nosuch"));
}
