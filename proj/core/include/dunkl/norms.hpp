// Weighted L^p norms, superlevel-set measures, weak-type ratios, and empirical
// operator-norm estimation over test families.
#pragma once

#include "dunkl/radial_function.hpp"
#include "dunkl/setting.hpp"
#include "dunkl/spherical.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace dunkl {

constexpr double p_infinity = std::numeric_limits<double>::infinity();

// || f ||_{p,k} = (d_k int_0^inf |F|^p r^{D-1} dr)^{1/p}; sup norm for p = inf.
// Throws std::runtime_error when the tail has not decayed (divergence) and
// std::domain_error for p < 1.
double lp_norm(const MultiplicitySetting& s, const RadialFunction& f, double p);

// Same norm for a profile sampled on explicit abscissae (trapezoid in log r at
// the profile's own resolution).
double lp_norm(const MultiplicitySetting& s, const std::vector<double>& x,
               const std::vector<double>& values, double p);

// nu_k { x : v(x) > alpha } for a sampled profile (linear-in-log crossings).
double superlevel_measure(const MultiplicitySetting& s, const std::vector<double>& x,
                          const std::vector<double>& values, double alpha);

// sup over the alpha grid of alpha * nu_k{ v > alpha } / ||f||_1.
double weak_type_ratio(const MultiplicitySetting& s, const MaximalProfile& profile,
                       double l1_norm, const std::vector<double>& alpha_grid);
// Default alpha grid: geometric, [peak*1e-5, peak).
std::vector<double> default_alpha_grid(double peak, int n = 64);

struct NormReport {
    std::string operator_id;
    std::string setting;
    double d = 0, gamma = 0, homogeneous_dimension = 0;
    double p = 0;
    int level = -1; // dyadic level j, or -1
    double estimate = 0;
    std::string argmax_member;
    int family_size = 0;
    std::string family_id;
    std::string grid_id;
    unsigned long long seed = 0;
};

struct FamilyMember; // family.hpp

// sup over the family of ||T f||_p / ||f||_p for a profile-valued operator.
// In strict mode, the full spherical maximal operator refuses exponents
// outside (D/(D-1), D), the hypothesis of the boundedness theorem.
NormReport operator_norm_estimate(
    const std::string& operator_id,
    const std::function<std::pair<std::vector<double>, std::vector<double>>(
        const RadialFunction&)>& apply, // returns (abscissae, |values|)
    const MultiplicitySetting& s, double p, const std::vector<FamilyMember>& family,
    bool strict = false, int level = -1);

} // namespace dunkl
