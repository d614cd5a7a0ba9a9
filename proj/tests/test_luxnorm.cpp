#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "orlab/family.hpp"
#include "orlab/luxnorm.hpp"

using namespace orlab;

TEST_CASE("norms of constants and linear functions") {
    const Potential mu = gaussian_potential();
    // constant c under Phi = x^2: norm = c (x0 = 1)
    const NormResult rc = luxembourg_norm([](double) { return 3.0; }, power_young(2.0), mu);
    CHECK(rc.value == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(rc.residual < 1e-9);
    // f(x) = x under x^2: int x^2 dgamma = 1
    const NormResult rx = luxembourg_norm([](double x) { return x; }, power_young(2.0), mu);
    CHECK(rx.value == doctest::Approx(1.0).epsilon(1e-9));
    // f(x) = x under x^4: fourth-moment oracle 3^{1/4}
    const NormResult r4 = luxembourg_norm([](double x) { return x; }, power_young(4.0), mu);
    CHECK(r4.value == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-9));
    // constant under a Young function with Phi(x0)=1: norm = c / x0
    const YoungFunction u = u_young();
    const double x0 = u.inverse(1.0);
    const NormResult ru = luxembourg_norm([](double) { return 5.0; }, u, mu);
    CHECK(ru.value == doctest::Approx(5.0 / x0).epsilon(1e-9));
}

TEST_CASE("zero and infinite norms signaled distinctly") {
    const Potential mu = gaussian_potential();
    const NormResult rz = luxembourg_norm([](double) { return 0.0; }, power_young(2.0), mu);
    CHECK(rz.zero);
    CHECK(rz.value == 0.0);
    // e^{x^2} fails int Phi(alpha f) < inf for every alpha under exp-type Phi
    const NormResult ri =
        luxembourg_norm([](double x) { return std::exp(x * x); }, exp_young(2.0), mu);
    CHECK(ri.infinite);
}

TEST_CASE("norm axioms on a test set") {
    const Potential mu = gaussian_potential();
    const YoungFunction phi = l1logl1_young();
    auto f = [](double x) { return std::cos(x) + 2 * x; };
    auto g = [](double x) { return x * x - 0.5; };
    const double nf = luxembourg_norm(f, phi, mu).value;
    const double ng = luxembourg_norm(g, phi, mu).value;
    for (double c : {0.3, 2.0, 11.0}) {
        const double ncf = luxembourg_norm([&](double x) { return c * f(x); }, phi, mu).value;
        CHECK(ncf == doctest::Approx(c * nf).epsilon(1e-9));
    }
    const double nfg = luxembourg_norm([&](double x) { return f(x) + g(x); }, phi, mu).value;
    CHECK(nfg <= nf + ng + 1e-8);
}

TEST_CASE("pointwise domination of Young functions is norm monotone") {
    const Potential mu = gaussian_potential();
    // x^2 <= x^2 + x^4 = psi pointwise
    const YoungFunction psi = young_from_eval(
        "p2p4", [](double x) { return x * x + std::pow(x, 4); }, 1e-8, 1e4);
    for (auto f : {RealFn([](double x) { return x; }),
                   RealFn([](double x) { return std::exp(x / 2); })}) {
        const double n2 = luxembourg_norm(f, power_young(2.0), mu).value;
        const double np = luxembourg_norm(f, psi, mu).value;
        CHECK(n2 <= np + 1e-9);
    }
}

TEST_CASE("bg sandwich between the 2-norm, U-norm and N-norm") {
    const Potential mu = gaussian_potential();
    const YoungFunction u = u_young(), n = nlog_young(), p2 = power_young(2.0);
    auto hs = {RealFn([](double x) { return x; }),
               RealFn([](double x) { return std::exp(x / 2); }),
               RealFn([](double x) { return std::abs(x) + 0.1; }),
               RealFn([](double x) { return x * x - 1; })};
    for (const auto& h : hs) {
        const double h2 = luxembourg_norm(h, p2, mu).value;
        const double hu = luxembourg_norm(h, u, mu).value;
        const double hn = luxembourg_norm(h, n, mu).value;
        CHECK(h2 / std::sqrt(2.0) <= hu * (1 + 1e-9));
        CHECK(hu <= std::sqrt(2.0) * hn * (1 + 1e-9));
    }
}

TEST_CASE("fa norms obey the 2a e^{a^2/4} bound") {
    const Potential mu = gaussian_potential();
    const YoungFunction u = u_young();
    for (double a : {1.0, 2.0, 3.0, 4.0}) {
        auto fa = [a](double x) { return std::exp(0.5 * a * x); };
        const double nu = luxembourg_norm(fa, u, mu).value;
        CHECK(nu <= 2 * a * std::exp(0.25 * a * a) * (1 + 1e-9));
    }
}

namespace {

StandardOrliczFamily gross_lp_family() {
    FamilySpec spec;
    spec.name = "lp-gross";
    spec.F = f_log();
    spec.Fprime = f_log_prime();
    spec.phi0 = power_young(2.0);
    spec.lambda = lam_gross(2.0);
    spec.lambda_prime = lam_gross_prime(2.0);
    return build_family(spec);
}

}  // namespace

TEST_CASE("isometry transport preserves norms") {
    const Potential mu = gaussian_potential();
    const StandardOrliczFamily fam = gross_lp_family();
    auto f = [](double x) { return x + 0.3 * x * x; };

    // s = t: identity transport
    const RealFn id = isometry_transport(f, fam, 0.7, 0.7, mu);
    for (double x : {-1.2, 0.4, 2.0}) CHECK(id(x) == doctest::Approx(f(x)).epsilon(1e-8));

    // L_p family: I_{s,t}(f) = ||f||^{1-q(t)/q(s)} |f|^{q(t)/q(s)} sgn f
    const double s = 0.3, t = 1.1;
    auto q = [](double tt) { return 1 + std::exp(2 * tt); };
    const double nt = luxembourg_norm(f, fam.young_at(t), mu).value;
    const RealFn tr = isometry_transport(f, fam, s, t, mu);
    for (double x : {-1.2, 0.4, 2.0}) {
        const double ratio = q(t) / q(s);
        const double expect = (f(x) < 0 ? -1.0 : 1.0) * std::pow(nt, 1 - ratio) *
                              std::pow(std::abs(f(x)), ratio);
        CHECK(tr(x) == doctest::Approx(expect).epsilon(1e-6));
    }
    const double ns = luxembourg_norm(tr, fam.young_at(s), mu).value;
    CHECK(ns == doctest::Approx(nt).epsilon(1e-7));

    // constants transport to scaled constants with equal norms (x0 = 1 here)
    const RealFn trc = isometry_transport([](double) { return 2.0; }, fam, s, t, mu);
    CHECK(trc(0.0) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("norms tend to the sup norm over x0") {
    const Potential mu = gaussian_potential();
    const StandardOrliczFamily fam = gross_lp_family();

    // constants: every norm equals c / x0 = c
    const LinftyLimitResult rc =
        linfty_limit([](double) { return 1.0; }, 1.0, fam, {0.0, 1.0, 2.0}, mu);
    for (double n : rc.norms) CHECK(n == doctest::Approx(1.0).epsilon(1e-8));

    // capped |x|: norms increase to 2
    auto capped = [](double x) { return std::min(std::abs(x), 2.0); };
    const LinftyLimitResult r =
        linfty_limit(capped, 2.0, fam, {0.0, 1.0, 2.0, 3.0, 4.0, 5.0}, mu, 2e-3);
    CHECK(r.approached);
    CHECK(r.norms.back() == doctest::Approx(2.0).epsilon(2e-3));

    // smoothed indicator of [-1,1]: limit 1/x0 = 1
    auto ind = [](double x) {
        return 0.5 * (std::tanh(6 * (x + 1)) - std::tanh(6 * (x - 1)));
    };
    const LinftyLimitResult ri = linfty_limit(ind, 1.0, fam, {0.0, 1.5, 3.0, 4.5, 6.0}, mu, 5e-3);
    CHECK(ri.norms.back() == doctest::Approx(1.0).epsilon(5e-3));
}
