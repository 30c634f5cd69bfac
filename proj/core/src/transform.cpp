#include "dunkl/transform.hpp"

#include "dunkl/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dunkl {

double sphere_transform(const MultiplicitySetting& s, double r)
{
    return s.sphere_constant() * normalized_bessel(s.bessel_order(), r);
}

double sphere_transform_radial_derivative(const MultiplicitySetting& s, double r)
{
    const double lam = s.bessel_order();
    // (1/r) d/dr j_lambda(r) = -j_{lambda+1}(r) / (2(lambda+1))
    return -s.sphere_constant() / (2.0 * (lam + 1.0)) *
           normalized_bessel(lam + 1.0, r);
}

TransformEngine::TransformEngine(MultiplicitySetting setting,
                                 std::shared_ptr<const RadialGrid> grid,
                                 int quad_per_decade, int quad_nodes_per_panel)
    : setting_(std::move(setting)), grid_(std::move(grid)),
      quad_(RadialQuadrature::make(grid_->r_min(), grid_->r_max(), quad_per_decade,
                                   quad_nodes_per_panel))
{
    const double lam = setting_.bessel_order();
    const double dpow = setting_.homogeneous_dimension() - 1.0;
    const size_t nq = quad_.rule.nodes.size();
    const int n = grid_->size();

    weight_pow_.resize(nq);
    for (size_t q = 0; q < nq; ++q)
        weight_pow_[q] = quad_.rule.weights[q] * std::pow(quad_.rule.nodes[q], dpow);

    // Constant from the Gaussian fixed point at frequency zero:
    // C * int e^{-r^2/2} r^{D-1} dr = 1.
    double gauss_moment = 0.0;
    for (size_t q = 0; q < nq; ++q)
        gauss_moment += weight_pow_[q] * std::exp(-0.5 * quad_.rule.nodes[q] *
                                                  quad_.rule.nodes[q]);
    constant_ = 1.0 / gauss_moment;

    NormalizedBessel j(lam);
    kernel_.resize(static_cast<size_t>(n) * nq);
    for (int i = 0; i < n; ++i) {
        const double r = (*grid_)[i];
        double* row = kernel_.data() + static_cast<size_t>(i) * nq;
        for (size_t q = 0; q < nq; ++q)
            row[q] = weight_pow_[q] * j(r * quad_.rule.nodes[q]);
    }
}

void TransformEngine::check_tail(const RadialFunction& f) const
{
    // The integrand must have decayed by r_max.
    const double scale = f.max_abs();
    if (scale == 0.0)
        return;
    double tail = 0.0;
    const double r_edge = grid_->r_max() / std::sqrt(10.0);
    for (int i = grid_->size() - 1; i >= 0 && (*grid_)[i] > r_edge; --i)
        tail = std::max(tail, std::abs(f.samples()[i]));
    if (tail > 1e-9 * scale)
        throw std::runtime_error(
            "transform: profile has not decayed below 1e-9 of its scale by r_max; "
            "tail integral untrusted");
}

std::vector<double> TransformEngine::spectrum(const RadialFunction& f) const
{
    RadialFunction g = forward(f);
    const auto& x = quad_.rule.nodes;
    std::vector<double> s(x.size());
    for (size_t q = 0; q < x.size(); ++q)
        s[q] = g(x[q]);
    return s;
}

RadialFunction TransformEngine::transform_impl(const RadialFunction& f) const
{
    const auto& x = quad_.rule.nodes;
    const size_t nq = x.size();
    std::vector<double> fq(nq);
    for (size_t q = 0; q < nq; ++q)
        fq[q] = f(x[q]);

    const int n = grid_->size();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double* row = kernel_.data() + static_cast<size_t>(i) * nq;
        double acc = 0.0;
        for (size_t q = 0; q < nq; ++q)
            acc += row[q] * fq[q];
        out[i] = constant_ * acc;
    }
    double v0 = 0.0;
    for (size_t q = 0; q < nq; ++q)
        v0 += weight_pow_[q] * fq[q];
    v0 *= constant_;
    return RadialFunction(grid_, std::move(out), v0);
}

RadialFunction TransformEngine::forward(const RadialFunction& f) const
{
    if (f.grid_ptr().get() != grid_.get())
        throw std::invalid_argument("transform: profile lives on a different grid");
    check_tail(f);
    return transform_impl(f);
}

RadialFunction TransformEngine::inverse(const RadialFunction& g) const
{
    return forward(g);
}

RadialFunction TransformEngine::synthesize(const std::vector<double>& gq) const
{
    const size_t nq = quad_.rule.nodes.size();
    if (gq.size() != nq)
        throw std::invalid_argument("synthesize: value count does not match quadrature");
    const int n = grid_->size();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double* row = kernel_.data() + static_cast<size_t>(i) * nq;
        double acc = 0.0;
        for (size_t q = 0; q < nq; ++q)
            acc += row[q] * gq[q];
        out[i] = constant_ * acc;
    }
    double v0 = 0.0;
    for (size_t q = 0; q < nq; ++q)
        v0 += weight_pow_[q] * gq[q];
    v0 *= constant_;
    return RadialFunction(grid_, std::move(out), v0);
}

RadialFunction TransformEngine::apply_multiplier(const RadialFunction& f,
                                                 const std::function<double(double)>& m) const
{
    std::vector<double> s = spectrum(f);
    const auto& x = quad_.rule.nodes;
    for (size_t q = 0; q < x.size(); ++q)
        s[q] *= m(x[q]);
    return synthesize(s);
}

RadialFunction TransformEngine::convolve(const RadialFunction& f,
                                         const RadialFunction& g) const
{
    if (f.grid_ptr().get() != g.grid_ptr().get())
        throw std::invalid_argument("convolve: profiles live on different grids");
    std::vector<double> sf = spectrum(f);
    std::vector<double> sg = spectrum(g);
    for (size_t q = 0; q < sf.size(); ++q)
        sf[q] *= sg[q];
    return synthesize(sf);
}

const RadialFunction& TransformEngine::ball_multiplier() const
{
    if (!ball_) {
        // Transform of the unit-ball indicator, integrated on [0,1] directly so
        // the jump never meets an interpolation stencil; normalized to b(0)=1.
        auto one = [](double) { return 1.0; };
        const double at0 = setting_.sphere_constant() / setting_.homogeneous_dimension();
        std::vector<double> v(grid_->size());
        for (int i = 0; i < grid_->size(); ++i)
            v[i] = synthesize_banded(setting_, one, 1.0, (*grid_)[i]) / at0;
        ball_ = std::make_unique<RadialFunction>(grid_, std::move(v), 1.0);
    }
    return *ball_;
}

double synthesize_banded(const MultiplicitySetting& s,
                         const std::function<double(double)>& g, double band, double x,
                         int nodes_per_panel)
{
    if (!(band > 0.0))
        throw std::invalid_argument("synthesize_banded: need band > 0");
    const double lam = s.bessel_order();
    const double dpow = s.homogeneous_dimension() - 1.0;
    NormalizedBessel j(lam);

    // Panels no wider than the kernel's zero spacing pi/x, geometric near 0.
    std::vector<double> bounds;
    bounds.push_back(0.0);
    const double width_cap = std::numbers::pi / std::max(x, 1.0);
    double lo = std::min(band * 1e-4, width_cap);
    bounds.push_back(lo);
    while (bounds.back() < band) {
        double next = std::min(band, bounds.back() + std::min(width_cap, bounds.back()));
        bounds.push_back(next);
    }
    QuadratureRule proto = gauss_legendre(nodes_per_panel, 0.0, 1.0);
    double acc = 0.0;
    for (size_t p = 0; p + 1 < bounds.size(); ++p) {
        const double a = bounds[p], h = bounds[p + 1] - bounds[p];
        for (int i = 0; i < nodes_per_panel; ++i) {
            const double xi = a + h * proto.nodes[i];
            acc += h * proto.weights[i] * g(xi) * j(x * xi) * std::pow(xi, dpow);
        }
    }
    return s.sphere_constant() * acc;
}

} // namespace dunkl
