#ifndef ORLAB_TESTFUNCTIONS_HPP
#define ORLAB_TESTFUNCTIONS_HPP

#include <string>
#include <vector>

#include "orlab/grid.hpp"

namespace orlab {

/// A smooth test function with its analytic derivative.
struct TestFunction {
    std::string id;
    RealFn f;
    RealFn df;
};

TestFunction tf_const(double c);
TestFunction tf_expahalf(double a);      // e^{a x / 2}
TestFunction tf_identity();              // x
TestFunction tf_hermite(int n);          // probabilists' Hermite polynomial
TestFunction tf_affine(double a, double b);
TestFunction tf_smooth_indicator(double halfwidth, double sharp);  // ~1_{[-h,h]}
TestFunction tf_soft_abs();              // sqrt(1+x^2)
TestFunction tf_cos_shift();             // cos(x) + 2
TestFunction tf_gauss_bump();            // e^{-x^2/2} + 1/2
TestFunction tf_capped_abs(double cap);  // min(|x|, cap), smoothed

/// The bundled 12-function experiment set.
std::vector<TestFunction> standard_set();

/// Lookup by "name" or "name:param" (const:c | exp:a | x | hermite:n |
/// affine:eps | indicator | softabs | cos | bump | capped:m).
TestFunction make_test_function(const std::string& spec);

}  // namespace orlab

#endif
