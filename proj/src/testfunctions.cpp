#include "orlab/testfunctions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace orlab {

TestFunction tf_const(double c) {
    std::ostringstream id;
    id << "const:" << c;
    return {id.str(), [c](double) { return c; }, [](double) { return 0.0; }};
}

TestFunction tf_expahalf(double a) {
    std::ostringstream id;
    id << "exp:" << a;
    return {id.str(), [a](double x) { return std::exp(0.5 * a * x); },
            [a](double x) { return 0.5 * a * std::exp(0.5 * a * x); }};
}

TestFunction tf_identity() {
    return {"x", [](double x) { return x; }, [](double) { return 1.0; }};
}

TestFunction tf_hermite(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("tf_hermite: n in 1..4");
    std::ostringstream id;
    id << "hermite:" << n;
    RealFn f, df;
    switch (n) {
        case 1: f = [](double x) { return x; }; df = [](double) { return 1.0; }; break;
        case 2:
            f = [](double x) { return x * x - 1; };
            df = [](double x) { return 2 * x; };
            break;
        case 3:
            f = [](double x) { return x * x * x - 3 * x; };
            df = [](double x) { return 3 * x * x - 3; };
            break;
        default:
            f = [](double x) { return x * x * x * x - 6 * x * x + 3; };
            df = [](double x) { return 4 * x * x * x - 12 * x; };
    }
    return {id.str(), f, df};
}

TestFunction tf_affine(double a, double b) {
    std::ostringstream id;
    id << "affine:" << a << ":" << b;
    return {id.str(), [a, b](double x) { return a + b * x; }, [b](double) { return b; }};
}

TestFunction tf_smooth_indicator(double halfwidth, double sharp) {
    std::ostringstream id;
    id << "indicator:" << halfwidth;
    auto sig = [sharp](double u) { return 0.5 * (1 + std::tanh(sharp * u)); };
    auto dsig = [sharp](double u) {
        const double c = std::cosh(sharp * u);
        return 0.5 * sharp / (c * c);
    };
    return {id.str(),
            [=](double x) { return sig(x + halfwidth) - sig(x - halfwidth); },
            [=](double x) { return dsig(x + halfwidth) - dsig(x - halfwidth); }};
}

TestFunction tf_soft_abs() {
    return {"softabs", [](double x) { return std::sqrt(1 + x * x); },
            [](double x) { return x / std::sqrt(1 + x * x); }};
}

TestFunction tf_cos_shift() {
    return {"cos", [](double x) { return std::cos(x) + 2.0; },
            [](double x) { return -std::sin(x); }};
}

TestFunction tf_gauss_bump() {
    return {"bump", [](double x) { return std::exp(-0.5 * x * x) + 0.5; },
            [](double x) { return -x * std::exp(-0.5 * x * x); }};
}

TestFunction tf_capped_abs(double cap) {
    std::ostringstream id;
    id << "capped:" << cap;
    // smooth approximation cap * tanh(sqrt(1+x^2)-1-ish) keeps |f| <= cap;
    // here: cap * tanh(|x|_soft / cap) with |x|_soft = sqrt(x^2 + 1e-4)
    return {id.str(),
            [cap](double x) {
                const double s = std::sqrt(x * x + 1e-4);
                return cap * std::tanh(s / cap);
            },
            [cap](double x) {
                const double s = std::sqrt(x * x + 1e-4);
                const double c = std::cosh(s / cap);
                return (x / s) / (c * c);
            }};
}

std::vector<TestFunction> standard_set() {
    return {
        tf_const(1.0),
        tf_expahalf(0.5),
        tf_expahalf(1.0),
        tf_expahalf(2.0),
        tf_identity(),
        tf_hermite(2),
        tf_hermite(3),
        tf_affine(1.0, 0.1),
        tf_smooth_indicator(1.0, 4.0),
        tf_soft_abs(),
        tf_cos_shift(),
        tf_gauss_bump(),
    };
}

TestFunction make_test_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    double param = 0.0;
    if (colon != std::string::npos) param = std::stod(spec.substr(colon + 1));
    if (head == "const") return tf_const(param);
    if (head == "exp") return tf_expahalf(param);
    if (head == "x") return tf_identity();
    if (head == "hermite") return tf_hermite(static_cast<int>(param));
    if (head == "affine") return tf_affine(1.0, param);
    if (head == "indicator") return tf_smooth_indicator(param > 0 ? param : 1.0, 4.0);
    if (head == "softabs") return tf_soft_abs();
    if (head == "cos") return tf_cos_shift();
    if (head == "bump") return tf_gauss_bump();
    if (head == "capped") return tf_capped_abs(param > 0 ? param : 2.0);
    throw std::invalid_argument("make_test_function: unknown spec '" + spec + "'");
}

}  // namespace orlab
