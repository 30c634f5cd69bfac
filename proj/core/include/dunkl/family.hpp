// Deterministic, seeded test families: Gaussians, smooth bumps, truncated power
// profiles probing the critical exponent, and random smooth mixtures.
#pragma once

#include "dunkl/radial_function.hpp"
#include "dunkl/setting.hpp"

#include <memory>
#include <string>
#include <vector>

namespace dunkl {

struct FamilyMember {
    std::string name;
    RadialFunction f;
};

struct FamilySpec {
    int gaussians = 5;
    int bumps = 5;
    int powers = 5;      // r^{-beta} chi_{r<=1}, beta -> D/p from below
    int mixtures = 5;
    double p_for_powers = 2.0;
    double width_min = 0.25;
    double width_max = 4.0;
    unsigned long long seed = 12345;
    bool l1_normalized = false;

    int size() const { return gaussians + bumps + powers + mixtures; }
    std::string id() const;
};

// The C-infinity cutoff profile exp(-1/(1 - (r/s)^2)) on [0, s).
double smooth_bump(double r, double s);

std::vector<FamilyMember> make_family(const MultiplicitySetting& s,
                                      std::shared_ptr<const RadialGrid> grid,
                                      const FamilySpec& spec);

} // namespace dunkl
