// Rank-1 Dunkl translation, computed spectrally: F_k(tau_x f) = E_k(ix, .) F_k f.
// A translated even profile splits into an even and an odd part on the half
// line; the two parts are synthesized through Hankel transforms of orders
// lambda = k - 1/2 and lambda + 1.
#pragma once

#include "dunkl/radial_function.hpp"
#include "dunkl/setting.hpp"
#include "dunkl/transform.hpp"

#include <memory>

namespace dunkl {

// A function on the real line stored as even/odd profiles on r > 0:
// u(y) = even(|y|) + sgn(y) * odd(|y|).
struct LineFunction {
    RadialFunction even;
    RadialFunction odd;

    double operator()(double y) const
    {
        const double e = even(std::abs(y));
        const double o = odd(std::abs(y));
        return y >= 0.0 ? e + o : e - o;
    }
};

class Rank1Translator {
public:
    Rank1Translator(double k, std::shared_ptr<const RadialGrid> grid,
                    int quad_per_decade = 32, int quad_nodes_per_panel = 16);

    double multiplicity() const { return k_; }
    const MultiplicitySetting& setting() const { return even_engine_.setting(); }
    const TransformEngine& even_engine() const { return even_engine_; }

    // tau_x f for an even profile f.
    LineFunction translate(const RadialFunction& f, double x) const;

    // int u d nu_k over the line (the odd part integrates to zero).
    double mass(const RadialFunction& even_part) const;
    // || u ||_{p,k} on the line, p >= 1.
    double lp_norm(const LineFunction& u, double p) const;
    // int u g d nu_k for even g.
    double pairing(const LineFunction& u, const RadialFunction& g) const;

private:
    double k_;
    TransformEngine even_engine_; // order lambda = k - 1/2, homogeneous dim D
    TransformEngine odd_engine_;  // order lambda + 1, homogeneous dim D + 2
};

} // namespace dunkl
