#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orlab/measure.hpp"

using namespace orlab;

namespace {

/// Independent Simpson oracle for int g dgamma_1 on [-12,12].
double simpson_gauss(const RealFn& g, int n = 48000) {
    const double a = -12.0, b = 12.0, h = (b - a) / n;
    auto w = [&](double x) {
        return g(x) * std::exp(-0.5 * x * x) / std::sqrt(2 * M_PI);
    };
    double acc = w(a) + w(b);
    for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * w(a + i * h);
    return acc * h / 3.0;
}

}  // namespace

TEST_CASE("gaussian normalization and moments") {
    const Potential mu = gaussian_potential();
    CHECK(integrate([](double) { return 1.0; }, mu).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return x * x; }, mu).value ==
          doctest::Approx(1.0).epsilon(1e-12));
    const IntegralResult m4 = integrate([](double x) { return std::pow(x, 4); }, mu);
    CHECK(m4.value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(m4.value == doctest::Approx(simpson_gauss([](double x) { return std::pow(x, 4); }))
                          .epsilon(1e-10));
    CHECK(m4.error_estimate < 1e-10);
}

TEST_CASE("richardson error estimate is honest on a rough integrand") {
    const Potential mu = gaussian_potential();
    const IntegralResult r = integrate([](double x) { return std::abs(x); }, mu);
    const double exact = std::sqrt(2.0 / M_PI);
    CHECK(std::abs(r.value - exact) <= std::max(1e-6, 20 * r.error_estimate));
}

TEST_CASE("u_alpha seam values and derivatives") {
    // alpha -> 2 limit: quartic term vanishes, quadratic term is x^2
    CHECK(u_alpha_value(2.0, 0.5) == doctest::Approx(0.25));
    CHECK(u_alpha_value(2.0, 0.0) == doctest::Approx(0.0));

    // both branch formulas at |x| = 1
    const double alpha = 1.5;
    const double inner = alpha * (alpha - 2) / 8 + alpha * (4 - alpha) / 4 +
                         (1 - 0.75 * alpha + 0.125 * alpha * alpha);
    CHECK(inner == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u_alpha_value(alpha, 1.0) == doctest::Approx(1.0));

    // C^1 at the seam: derivative 1.5 from both sides
    const double quartic_d = alpha * (alpha - 2) / 2 + alpha * (4 - alpha) / 2;
    CHECK(quartic_d == doctest::Approx(alpha).epsilon(1e-14));
    CHECK(u_alpha_deriv(alpha, 1.0 - 1e-9) == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(u_alpha_deriv(alpha, 1.0 + 1e-9) == doctest::Approx(1.5).epsilon(1e-6));

    const Potential mu = build_u_alpha(alpha);
    CHECK(integrate([](double) { return 1.0; }, mu).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(mu.hessian_lb > 0.0);
    CHECK_THROWS_AS(build_u_alpha(2.5), std::invalid_argument);
}

TEST_CASE("entropy oracle values") {
    const Potential mu = gaussian_potential();
    // constants have zero entropy
    CHECK(entropy([](double) { return 4.0; }, mu) == doctest::Approx(0.0).epsilon(1e-12));
    // f = e^{x/2}: Ent(f^2) = (1/2) e^{1/2}
    auto f2 = [](double x) { return std::exp(x); };
    CHECK(entropy(f2, mu) == doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-9));
    // smoothed indicator against a double-resolution quadrature oracle
    auto g = [](double x) {
        const double s = 0.5 * (1 + std::tanh(1.5 * x));
        return s * s + 1e-4;
    };
    auto glg = [&](double x) { return g(x) * std::log(g(x)); };
    const double mass = simpson_gauss(g);
    const double oracle = simpson_gauss(glg) - mass * std::log(mass);
    CHECK(entropy(g, mu) == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("entropy nonnegativity and degree-one homogeneity") {
    const Potential mu = gaussian_potential();
    auto g = [](double x) { return std::exp(-x) + 0.2 * x * x; };
    const double e1 = entropy(g, mu);
    CHECK(e1 >= 0.0);
    for (double c : {0.5, 2.0, 7.0}) {
        auto gc = [&, c](double x) { return c * g(x); };
        CHECK(entropy(gc, mu) == doctest::Approx(c * e1).epsilon(1e-9));
    }
    CHECK_THROWS_AS(entropy([](double) { return 0.0; }, mu), std::domain_error);
}

TEST_CASE("gaussian log-Sobolev saturation by exponentials") {
    const Potential mu = gaussian_potential();
    for (double a : {0.5, 1.0, 2.0}) {
        auto f2 = [a](double x) { return std::exp(a * x); };
        auto grad2 = [a](double x) { return 0.25 * a * a * std::exp(a * x); };
        const double ent = entropy(f2, mu);
        const double dirichlet = 2.0 * integrate(grad2, mu).value;
        CHECK(ent == doctest::Approx(dirichlet).epsilon(1e-6));
    }
}

TEST_CASE("potential family freezing") {
    const PotentialFamily fam = builtin_inhomog_family(0.5, 0.1);
    const Potential p0 = fam.at(0.0);
    CHECK(integrate([](double) { return 1.0; }, p0).value == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(p0.hessian_lb == doctest::Approx(1.0).epsilon(1e-9));
    const Potential p1 = fam.at(1.0);
    CHECK(p1.hessian_lb < 1.0);
    CHECK(p1.hessian_lb > 0.99);

    // finite difference of V in t matches Vdot (unnormalized convention)
    const double h = 1e-5;
    for (double x : {-2.0, 0.3, 1.7}) {
        const double fd = (fam.V(1.0 + h, x) - fam.V(1.0 - h, x)) / (2 * h);
        CHECK(fd == doctest::Approx(fam.Vdot(1.0, x)).epsilon(1e-7));
    }
    // centered derivative integrates to zero against the frozen measure
    const double mean = vdot_mean(fam, 1.0, p1);
    const double centered =
        integrate([&](double x) { return fam.Vdot(1.0, x) - mean; }, p1).value;
    CHECK(centered == doctest::Approx(0.0).epsilon(1e-10));
}
