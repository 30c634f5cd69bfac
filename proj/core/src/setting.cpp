#include "dunkl/setting.hpp"

#include "dunkl/bessel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dunkl {

MultiplicitySetting::MultiplicitySetting(int d, std::vector<double> multiplicities)
    : d_(d), k_(std::move(multiplicities))
{
    if (d_ < 1)
        throw std::invalid_argument("MultiplicitySetting: dimension must be >= 1");
    if (static_cast<int>(k_.size()) != d_)
        throw std::invalid_argument("MultiplicitySetting: need one multiplicity per coordinate");
    gamma_ = 0.0;
    for (double k : k_) {
        if (k < 0.0)
            throw std::invalid_argument("MultiplicitySetting: multiplicities must be >= 0");
        gamma_ += k;
    }
    homdim_ = 2.0 * gamma_ + d_;
    lambda_ = gamma_ + 0.5 * d_ - 1.0;

    // c_k from the per-coordinate integral  int |x|^{2k} e^{-x^2/2} dx = 2^{k+1/2} Gamma(k+1/2).
    double log_ck = 0.0;
    for (double k : k_)
        log_ck -= (k + 0.5) * std::numbers::ln2 + std::lgamma(k + 0.5);
    mehta_ = std::exp(log_ck);
    c_gamma_ = std::exp(-(gamma_ + 0.5 * d_ - 1.0) * std::numbers::ln2 -
                        std::lgamma(gamma_ + 0.5 * d_));
    sphere_mass_ = c_gamma_ / mehta_;
}

MultiplicitySetting MultiplicitySetting::rank1(double k)
{
    return MultiplicitySetting(1, {k});
}

double MultiplicitySetting::weight(std::span<const double> x) const
{
    if (static_cast<int>(x.size()) != d_)
        throw std::invalid_argument("weight: point has wrong dimension");
    double w = 1.0;
    for (int i = 0; i < d_; ++i)
        if (k_[i] != 0.0)
            w *= std::pow(std::abs(x[i]), 2.0 * k_[i]);
    return w;
}

std::string MultiplicitySetting::describe() const
{
    std::ostringstream os;
    os << "d=" << d_ << ",k=";
    for (int i = 0; i < d_; ++i)
        os << (i ? "," : "") << k_[i];
    return os.str();
}

double mehta_constant_quadrature(const MultiplicitySetting& s, int n)
{
    // Each coordinate integral int |x|^{2k} e^{-x^2/2} dx = int_0^inf u^{k-1/2} e^{-u/2} du
    // after u = x^2; push the exponential into a scaled Jacobi-type rule via
    // u = -2 log(1 - t) ... simpler: integrate on [0, R] with composite GL and
    // the even substitution kept explicit.
    double integral = 1.0;
    for (double k : s.multiplicities()) {
        QuadratureRule rule = composite_gauss(geometric_bounds(1e-6, 12.0, 6), n / 6 + 4);
        double one_d = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            double x = rule.nodes[i];
            one_d += rule.weights[i] * std::pow(x, 2.0 * k) * std::exp(-0.5 * x * x);
        }
        integral *= 2.0 * one_d;
    }
    return 1.0 / integral;
}

double dunkl_operator_rank1(double k, const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double x)
{
    if (x == 0.0)
        return df(0.0) * (1.0 + 2.0 * k);
    return df(x) + k * (f(x) - f(-x)) / x;
}

std::complex<double> dunkl_kernel_rank1(double k, double x, double y)
{
    if (k < 0.0)
        throw std::domain_error("dunkl_kernel_rank1: multiplicity must be >= 0");
    const double u = x * y;
    const double re = normalized_bessel(k - 0.5, std::abs(u));
    const double im = u / (2.0 * k + 1.0) * normalized_bessel(k + 0.5, std::abs(u));
    return {re, im};
}

namespace {

// Recursive tensor construction of the weighted sphere rule.  A point of
// S^{n-1} splits as (sin(phi) y', cos(phi)) with y' in S^{n-2}; the phi
// integral carries the weight |cos|^{2k_n} sin^{2 gamma' + n - 2}, which a
// Gauss-Jacobi rule in u = cos^2(phi) integrates exactly.
void build_sphere(const std::vector<double>& mult, int n, int angular_nodes,
                  std::vector<std::vector<double>>& pts, std::vector<double>& wts)
{
    if (n == 1) {
        pts = {{1.0}, {-1.0}};
        wts = {1.0, 1.0};
        return;
    }
    std::vector<std::vector<double>> sub_pts;
    std::vector<double> sub_w;
    std::vector<double> sub_mult(mult.begin(), mult.begin() + (n - 1));
    build_sphere(sub_mult, n - 1, angular_nodes, sub_pts, sub_w);

    double gamma_sub = 0.0;
    for (double k : sub_mult)
        gamma_sub += k;
    const double a = 0.5 * (2.0 * gamma_sub + n - 3.0); // (1-u)^a
    const double b = mult[n - 1] - 0.5;                 // u^b
    QuadratureRule phi = gauss_jacobi01(angular_nodes, a, b);

    pts.clear();
    wts.clear();
    pts.reserve(2 * phi.nodes.size() * sub_pts.size());
    for (size_t i = 0; i < phi.nodes.size(); ++i) {
        const double u = phi.nodes[i];
        const double c = std::sqrt(u), s = std::sqrt(1.0 - u);
        for (int sign = -1; sign <= 1; sign += 2) {
            for (size_t j = 0; j < sub_pts.size(); ++j) {
                std::vector<double> p(n);
                for (int m = 0; m < n - 1; ++m)
                    p[m] = s * sub_pts[j][m];
                p[n - 1] = sign * c;
                pts.push_back(std::move(p));
                wts.push_back(0.5 * phi.weights[i] * sub_w[j]);
            }
        }
    }
}

} // namespace

WeightedPolarMeasure::WeightedPolarMeasure(MultiplicitySetting s, double r_max,
                                           int radial_per_decade, int radial_nodes,
                                           int angular_nodes)
    : setting_(std::move(s))
{
    radial_ = composite_gauss(geometric_bounds(1e-6 * r_max, r_max, radial_per_decade),
                              radial_nodes);
    build_sphere(setting_.multiplicities(), setting_.dimension(), angular_nodes,
                 sph_pts_, sph_w_);
}

double WeightedPolarMeasure::integrate(
    const std::function<double(std::span<const double>)>& f) const
{
    const double dpow = setting_.homogeneous_dimension() - 1.0;
    const int d = setting_.dimension();
    std::vector<double> x(d);
    double total = 0.0;
    for (size_t i = 0; i < radial_.nodes.size(); ++i) {
        const double r = radial_.nodes[i];
        double shell = 0.0;
        for (size_t j = 0; j < sph_pts_.size(); ++j) {
            for (int m = 0; m < d; ++m)
                x[m] = r * sph_pts_[j][m];
            shell += sph_w_[j] * f(x);
        }
        total += radial_.weights[i] * std::pow(r, dpow) * shell;
    }
    return total;
}

double WeightedPolarMeasure::integrate_radial(const std::function<double(double)>& F) const
{
    const double dpow = setting_.homogeneous_dimension() - 1.0;
    double total = 0.0;
    for (size_t i = 0; i < radial_.nodes.size(); ++i)
        total += radial_.weights[i] * std::pow(radial_.nodes[i], dpow) * F(radial_.nodes[i]);
    return setting_.sphere_mass() * total;
}

} // namespace dunkl
