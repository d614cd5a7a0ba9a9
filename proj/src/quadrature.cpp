#include "orlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace orlab {

namespace {

// Nodes/weights from the symmetric tridiagonal Jacobi matrix of the
// orthogonal-polynomial recurrence (Golub-Welsch). `offdiag[k]` holds
// b_{k+1}; `mu0` is the total mass of the weight function.
GaussRule golub_welsch(const Eigen::VectorXd& offdiag, double mu0) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        jacobi(k, k + 1) = offdiag(k);
        jacobi(k + 1, k) = offdiag(k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigensolver failed");
    GaussRule rule;
    rule.nodes = es.eigenvalues().array();
    rule.weights = mu0 * es.eigenvectors().row(0).array().square();
    return rule;
}

}  // namespace

GaussRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    Eigen::VectorXd off(n - 1);
    for (int k = 1; k < n; ++k)
        off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    return golub_welsch(off, 2.0);
}

GaussRule gauss_hermite_prob(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite_prob: order must be >= 1");
    Eigen::VectorXd off(n - 1);
    for (int k = 1; k < n; ++k)
        off(k - 1) = std::sqrt(static_cast<double>(k));
    GaussRule rule = golub_welsch(off, 1.0);  // probability normalization
    // The eigenvector components behind the extreme-node weights drown in
    // eigensolver noise (the true weights are ~e^{-x^2/2}); recompute every
    // weight from the Christoffel function 1/sum_k p_k(x)^2 with the
    // orthonormal recurrence p_{k+1} = (x p_k - sqrt(k) p_{k-1})/sqrt(k+1).
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes(i);
        double pkm1 = 0.0, pk = 1.0, sum = 1.0;
        for (int k = 0; k + 1 < n; ++k) {
            const double pkp1 = (x * pk - std::sqrt(static_cast<double>(k)) * pkm1) /
                                std::sqrt(static_cast<double>(k + 1));
            pkm1 = pk;
            pk = pkp1;
            sum += pk * pk;
        }
        rule.weights(i) = std::isfinite(sum) ? 1.0 / sum : 0.0;
    }
    return rule;
}

PanelRule composite_legendre(double a, double b, int panels, int order) {
    if (!(b > a)) throw std::invalid_argument("composite_legendre: empty interval");
    if (panels < 1) throw std::invalid_argument("composite_legendre: panels must be >= 1");
    const GaussRule base = gauss_legendre(order);
    PanelRule rule;
    rule.a = a;
    rule.b = b;
    rule.panels = panels;
    rule.order = order;
    rule.nodes.resize(panels * order);
    rule.weights.resize(panels * order);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        rule.nodes.segment(p * order, order) = lo + 0.5 * h * (base.nodes + 1.0);
        rule.weights.segment(p * order, order) = 0.5 * h * base.weights;
    }
    return rule;
}

PanelRule PanelRule::refined() const {
    return composite_legendre(a, b, panels * 2, order);
}

}  // namespace orlab
