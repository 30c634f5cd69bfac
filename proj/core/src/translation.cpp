#include "dunkl/translation.hpp"

#include "dunkl/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

Rank1Translator::Rank1Translator(double k, std::shared_ptr<const RadialGrid> grid,
                                 int quad_per_decade, int quad_nodes_per_panel)
    : k_(k),
      even_engine_(MultiplicitySetting::rank1(k), grid, quad_per_decade,
                   quad_nodes_per_panel),
      odd_engine_(MultiplicitySetting::rank1(k + 1.0), grid, quad_per_decade,
                  quad_nodes_per_panel)
{
}

LineFunction Rank1Translator::translate(const RadialFunction& f, double x) const
{
    if (f.odd())
        throw std::invalid_argument("translate: expected an even (radial) profile");
    const auto& xi = even_engine_.quadrature().rule.nodes;
    // Both engines share the panel layout, so one spectrum serves both.
    std::vector<double> spec = even_engine_.spectrum(f);

    NormalizedBessel j_even(k_ - 0.5);
    NormalizedBessel j_odd(k_ + 0.5);
    std::vector<double> a(spec.size()), bp(spec.size());
    const double c = x / (2.0 * k_ + 1.0);
    for (size_t q = 0; q < spec.size(); ++q) {
        const double u = x * xi[q];
        a[q] = j_even(u) * spec[q];
        bp[q] = c * j_odd(u) * spec[q];
    }

    RadialFunction even = even_engine_.synthesize(a);
    RadialFunction odd_core = odd_engine_.synthesize(bp);
    std::vector<double> odd_samples(odd_core.samples().size());
    const RadialGrid& g = *f.grid_ptr();
    for (int i = 0; i < g.size(); ++i)
        odd_samples[i] = -g[i] * odd_core.samples()[i];
    RadialFunction odd(f.grid_ptr(), std::move(odd_samples), 0.0, std::nullopt, true);
    return {std::move(even), std::move(odd)};
}

double Rank1Translator::mass(const RadialFunction& even_part) const
{
    const RadialGrid& g = even_part.grid();
    QuadratureRule rule =
        composite_gauss(geometric_bounds(g.r_min(), g.r_max(), 24), 12);
    double acc = 0.0;
    const double dpow = 2.0 * k_;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * even_part(rule.nodes[i]) * std::pow(rule.nodes[i], dpow);
    return 2.0 * acc;
}

double Rank1Translator::lp_norm(const LineFunction& u, double p) const
{
    if (p < 1.0)
        throw std::domain_error("lp_norm: need p >= 1");
    const RadialGrid& g = u.even.grid();
    QuadratureRule rule =
        composite_gauss(geometric_bounds(g.r_min(), g.r_max(), 24), 12);
    const double dpow = 2.0 * k_;
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        const double e = u.even(r), o = u.odd(r);
        acc += rule.weights[i] * std::pow(r, dpow) *
               (std::pow(std::abs(e + o), p) + std::pow(std::abs(e - o), p));
    }
    return std::pow(acc, 1.0 / p);
}

double Rank1Translator::pairing(const LineFunction& u, const RadialFunction& g) const
{
    const RadialGrid& gr = u.even.grid();
    QuadratureRule rule =
        composite_gauss(geometric_bounds(gr.r_min(), gr.r_max(), 24), 12);
    const double dpow = 2.0 * k_;
    double acc = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = rule.nodes[i];
        acc += rule.weights[i] * std::pow(r, dpow) * u.even(r) * g(r);
    }
    return 2.0 * acc;
}

} // namespace dunkl
