// Spherical means S_r, the spherical maximal function M, and the
// Hardy-Littlewood maximal function M_k, for radial profiles.
//
// The multiplier of S_r on radial data is j_lambda(r |xi|); the same operator
// evaluated in the space domain is the Gegenbauer average
//   S_r F(x) = B(lambda) int_0^pi F(sqrt(x^2 + r^2 - 2 x r cos t)) sin^{2 lambda} t dt,
// which stays exact at dilations far outside any quadrature's phase range.
// Both routes are provided; profile sweeps use the space-domain one.
#pragma once

#include "dunkl/radial_function.hpp"
#include "dunkl/setting.hpp"
#include "dunkl/transform.hpp"

#include <vector>

namespace dunkl {

// Space-domain spherical mean (Gauss-Gegenbauer in cos t).  Requires D >= 2.
class SphericalMeanOperator {
public:
    SphericalMeanOperator(MultiplicitySetting s, int angular_nodes = 48);

    const MultiplicitySetting& setting() const { return setting_; }

    double operator()(const RadialFunction& f, double x, double r) const;
    RadialFunction profile(const RadialFunction& f, double r) const;

private:
    MultiplicitySetting setting_;
    std::vector<double> cos_nodes_, weights_; // normalized: weights sum to 1
};

// Spectral spherical mean: inverse transform of F_k f * j_lambda(r .).
RadialFunction spherical_mean(const TransformEngine& engine, const RadialFunction& f,
                              double r);

// Ball average A_r f = (1/nu_k B_r) int_{B_r} tau_x f d nu_k, spectrally via the
// cached normalized ball-indicator multiplier.
RadialFunction ball_average(const TransformEngine& engine, const RadialFunction& f,
                            double r);

// S(x_i, t_j) on an abscissa set x and dilation grid t; the base object behind
// every maximal sweep (sup in t), ball average (cumulative average in t), and
// piecewise convolution (correlation along t).
class SProfile {
public:
    SProfile(const SphericalMeanOperator& op, const RadialFunction& f,
             std::vector<double> x, std::vector<double> t);

    const std::vector<double>& abscissae() const { return x_; }
    const std::vector<double>& dilations() const { return t_; }
    double at(int ix, int it) const { return s_[static_cast<size_t>(ix) * t_.size() + it]; }
    // Cubic interpolation along the (geometric) dilation axis; clamps to the
    // small-t limit f(x) below the grid and to 0 above it.
    double interp(int ix, double t) const;

private:
    std::vector<double> x_, t_, s_;
    std::vector<double> limit0_; // f(x), the t -> 0 limit
    double log_t0_, inv_dlog_;
};

struct MaximalProfile {
    std::vector<double> x;
    std::vector<double> values;
    int refinement_passes = 0;
    std::string dilation_id; // grid provenance

    double max() const;
};

struct DilationGrid {
    double t_min = 1e-3;
    double t_max = 1e3;
    int per_decade = 512;

    std::vector<double> radii() const { return geometric_radii(t_min, t_max, per_decade); }
    std::string id() const;
};

// M f(x) = sup_r |S_r f(x)| over the dilation grid, plus one golden-section
// refinement around the per-point argmax.  Requires D >= 2 and a nonempty grid.
MaximalProfile spherical_maximal(const SphericalMeanOperator& op, const RadialFunction& f,
                                 const std::vector<double>& x, const DilationGrid& dil,
                                 int refinement_passes = 1);

// M_k f(x) = sup_r |ball average|, from the cumulative integral of the
// spherical mean profile in t.
MaximalProfile hl_maximal(const SphericalMeanOperator& op, const RadialFunction& f,
                          const std::vector<double>& x, const DilationGrid& dil);

// Both maximal profiles from a single S-profile (the sweeps share it).
struct MaximalPair {
    MaximalProfile spherical;
    MaximalProfile hardy_littlewood;
};
MaximalPair maximal_pair(const SphericalMeanOperator& op, const RadialFunction& f,
                         const std::vector<double>& x, const DilationGrid& dil,
                         int refinement_passes = 1);

// Per-point argmax dilations of |S_t f| over the grid (for the sup
// well-posedness checks).
std::vector<double> argmax_dilations(const SphericalMeanOperator& op,
                                     const RadialFunction& f,
                                     const std::vector<double>& x,
                                     const DilationGrid& dil);

} // namespace dunkl
