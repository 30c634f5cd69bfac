#include "dunkl/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double QuadratureRule::integrate(const std::function<double(double)>& f) const
{
    double s = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i)
        s += weights[i] * f(nodes[i]);
    return s;
}

QuadratureRule gauss_legendre(int n, double a, double b)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre: need n >= 1");
    if (!(a < b))
        throw std::invalid_argument("gauss_legendre: need a < b");

    QuadratureRule rule;
    rule.a = a;
    rule.b = b;
    rule.exactness = 2 * n - 1;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double xm = 0.5 * (a + b);
    const double xl = 0.5 * (b - a);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15)
                break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

// Golub-Welsch from the monic Jacobi-polynomial recurrence coefficients.
QuadratureRule golub_welsch(int n, double alpha, double beta, double mu0)
{
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double apb = alpha + beta;
    for (int k = 0; k < n; ++k) {
        double ak;
        if (k == 0)
            ak = (beta - alpha) / (apb + 2.0);
        else
            ak = (beta * beta - alpha * alpha) /
                 ((2.0 * k + apb) * (2.0 * k + apb + 2.0));
        J(k, k) = ak;
        if (k + 1 < n) {
            double bk;
            if (k == 0)
                bk = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                     ((2.0 + apb) * (2.0 + apb) * (3.0 + apb));
            else {
                double m = k + 1;
                bk = 4.0 * m * (m + alpha) * (m + beta) * (m + apb) /
                     ((2.0 * m + apb) * (2.0 * m + apb) * (2.0 * m + apb + 1.0) *
                      (2.0 * m + apb - 1.0));
            }
            double sb = std::sqrt(bk);
            J(k, k + 1) = sb;
            J(k + 1, k) = sb;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.a = -1.0;
    rule.b = 1.0;
    rule.exactness = 2 * n - 1;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

} // namespace

QuadratureRule gauss_jacobi(int n, double alpha, double beta)
{
    if (n < 1 || alpha <= -1.0 || beta <= -1.0)
        throw std::invalid_argument("gauss_jacobi: need n >= 1 and alpha, beta > -1");
    const double mu0 = std::exp((alpha + beta + 1.0) * std::numbers::ln2 +
                                std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                                std::lgamma(alpha + beta + 2.0));
    return golub_welsch(n, alpha, beta, mu0);
}

QuadratureRule gauss_jacobi01(int n, double a, double b)
{
    QuadratureRule base = gauss_jacobi(n, a, b);
    QuadratureRule rule;
    rule.a = 0.0;
    rule.b = 1.0;
    rule.exactness = base.exactness;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // x = (1+t)/2 maps the weight (1-t)^a (1+t)^b to 2^{a+b+1} (1-x)^a x^b.
    const double scale = std::pow(2.0, -(a + b + 1.0));
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + base.nodes[i]);
        rule.weights[i] = scale * base.weights[i];
    }
    return rule;
}

QuadratureRule composite_gauss(const std::vector<double>& bounds, int g)
{
    if (bounds.size() < 2)
        throw std::invalid_argument("composite_gauss: need at least one panel");
    QuadratureRule proto = gauss_legendre(g, 0.0, 1.0);
    QuadratureRule rule;
    rule.a = bounds.front();
    rule.b = bounds.back();
    rule.exactness = 2 * g - 1;
    rule.nodes.reserve((bounds.size() - 1) * g);
    rule.weights.reserve((bounds.size() - 1) * g);
    for (size_t p = 0; p + 1 < bounds.size(); ++p) {
        const double a = bounds[p], h = bounds[p + 1] - bounds[p];
        if (!(h > 0.0))
            throw std::invalid_argument("composite_gauss: bounds must increase");
        for (int i = 0; i < g; ++i) {
            rule.nodes.push_back(a + h * proto.nodes[i]);
            rule.weights.push_back(h * proto.weights[i]);
        }
    }
    return rule;
}

std::vector<double> geometric_bounds(double r_min, double r_max, int per_decade)
{
    if (!(r_min > 0.0) || !(r_max > r_min) || per_decade < 1)
        throw std::invalid_argument("geometric_bounds: bad parameters");
    std::vector<double> bounds;
    bounds.push_back(0.0);
    const double decades = std::log10(r_max / r_min);
    const int panels = std::max(1, static_cast<int>(std::ceil(decades * per_decade)));
    for (int i = 0; i <= panels; ++i)
        bounds.push_back(r_min * std::pow(10.0, decades * i / panels));
    bounds.back() = r_max;
    return bounds;
}

double RadialQuadrature::phase_cap() const
{
    return nodes_per_panel * per_decade / std::numbers::ln10;
}

RadialQuadrature RadialQuadrature::make(double r_min, double r_max, int per_decade, int g)
{
    RadialQuadrature q;
    q.per_decade = per_decade;
    q.nodes_per_panel = g;
    q.rule = composite_gauss(geometric_bounds(r_min, r_max, per_decade), g);
    return q;
}

} // namespace dunkl
