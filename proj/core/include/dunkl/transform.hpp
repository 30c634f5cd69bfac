// The radial Dunkl transform: a Hankel-type reduction of order lambda with the
// normalization pinned by the Gaussian fixed point, plus the sphere-measure
// transform and the Dunkl convolution of radial profiles.
#pragma once

#include "dunkl/quadrature.hpp"
#include "dunkl/radial_function.hpp"
#include "dunkl/setting.hpp"

#include <functional>
#include <memory>

namespace dunkl {

// Radial profile of F_k(sigma): c_gamma * j_lambda(r).
double sphere_transform(const MultiplicitySetting& s, double r);
// (1/r) d/dr of the above, via the analytic Bessel derivative; finite at r=0.
double sphere_transform_radial_derivative(const MultiplicitySetting& s, double r);

class TransformEngine {
public:
    TransformEngine(MultiplicitySetting setting, std::shared_ptr<const RadialGrid> grid,
                    int quad_per_decade = 32, int quad_nodes_per_panel = 16);

    const MultiplicitySetting& setting() const { return setting_; }
    const RadialGrid& grid() const { return *grid_; }
    std::shared_ptr<const RadialGrid> grid_ptr() const { return grid_; }
    const RadialQuadrature& quadrature() const { return quad_; }

    // The transform constant, fixed so the Gaussian e^{-r^2/2} is a fixed
    // point; agrees with the closed form c_gamma to quadrature accuracy.
    double transform_constant() const { return constant_; }

    // F_hat(rho) = C int_0^inf F(r) j_lambda(r rho) r^{D-1} dr on the grid.
    // Throws std::runtime_error when the integrand has not decayed at r_max.
    RadialFunction forward(const RadialFunction& f) const;
    // Same kernel (real radial data); round-trips to the identity.
    RadialFunction inverse(const RadialFunction& g) const;

    // Spectrum of f at the quadrature nodes (for multiplier application).
    std::vector<double> spectrum(const RadialFunction& f) const;
    // C sum_q w_q g_q j_lambda(r x_q) x_q^{D-1} evaluated on the grid.
    RadialFunction synthesize(const std::vector<double>& values_at_quad) const;
    // inverse( m(xi) * forward(f)(xi) ) without materializing intermediates.
    RadialFunction apply_multiplier(const RadialFunction& f,
                                    const std::function<double(double)>& m) const;

    // Dunkl convolution of radial profiles via the product of transforms.
    RadialFunction convolve(const RadialFunction& f, const RadialFunction& g) const;

    // Normalized ball-indicator multiplier b with b(0)=1, obtained by
    // transforming the unit-ball indicator numerically once and cached.
    const RadialFunction& ball_multiplier() const;

private:
    MultiplicitySetting setting_;
    std::shared_ptr<const RadialGrid> grid_;
    RadialQuadrature quad_;
    double constant_;
    std::vector<double> kernel_;      // [i * nq + q] = w_q j(r_i x_q) x_q^{D-1}
    std::vector<double> weight_pow_;  // w_q x_q^{D-1}
    mutable std::unique_ptr<RadialFunction> ball_;

    void check_tail(const RadialFunction& f) const;
    RadialFunction transform_impl(const RadialFunction& f) const;
};

// Band-limited synthesis with oscillation-tied panels: for a spectrum g
// supported in [0, band], evaluates C int_0^band g(xi) j_lambda(x xi) xi^{D-1} dxi
// with panel widths <= pi / max(x, 1) so any phase x*xi is resolved.  Exact
// bookkeeping for kernels evaluated far outside a shared matrix's phase cap.
double synthesize_banded(const MultiplicitySetting& s,
                         const std::function<double(double)>& g, double band, double x,
                         int nodes_per_panel = 8);

} // namespace dunkl
