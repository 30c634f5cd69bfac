#include "dunkl/spherical.hpp"

#include "dunkl/bessel.hpp"
#include "dunkl/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dunkl {

namespace {

void require_maximal_theory(const MultiplicitySetting& s)
{
    if (!s.admits_maximal_theory())
        throw std::domain_error(
            "spherical means need homogeneous dimension 2*gamma + d >= 2; got " +
            std::to_string(s.homogeneous_dimension()));
}

} // namespace

SphericalMeanOperator::SphericalMeanOperator(MultiplicitySetting s, int angular_nodes)
    : setting_(std::move(s))
{
    require_maximal_theory(setting_);
    const double lam = setting_.bessel_order();
    QuadratureRule rule = gauss_jacobi(angular_nodes, lam - 0.5, lam - 0.5);
    cos_nodes_ = rule.nodes;
    weights_ = rule.weights;
    double total = 0.0;
    for (double w : weights_)
        total += w;
    for (double& w : weights_)
        w /= total;
}

double SphericalMeanOperator::operator()(const RadialFunction& f, double x, double r) const
{
    if (!(r > 0.0))
        throw std::domain_error("spherical mean: radius must be > 0");
    const double q = x * x + r * r;
    const double c = 2.0 * x * r;
    double acc = 0.0;
    for (size_t i = 0; i < cos_nodes_.size(); ++i)
        acc += weights_[i] * f(std::sqrt(std::max(0.0, q - c * cos_nodes_[i])));
    return acc;
}

RadialFunction SphericalMeanOperator::profile(const RadialFunction& f, double r) const
{
    const RadialGrid& g = f.grid();
    std::vector<double> v(g.size());
    for (int i = 0; i < g.size(); ++i)
        v[i] = (*this)(f, g[i], r);
    return RadialFunction(f.grid_ptr(), std::move(v), (*this)(f, 0.0, r));
}

RadialFunction spherical_mean(const TransformEngine& engine, const RadialFunction& f,
                              double r)
{
    require_maximal_theory(engine.setting());
    if (!(r > 0.0))
        throw std::domain_error("spherical mean: radius must be > 0");
    NormalizedBessel j(engine.setting().bessel_order());
    return engine.apply_multiplier(f, [&](double xi) { return j(r * xi); });
}

RadialFunction ball_average(const TransformEngine& engine, const RadialFunction& f,
                            double r)
{
    require_maximal_theory(engine.setting());
    if (!(r > 0.0))
        throw std::domain_error("ball average: radius must be > 0");
    const RadialFunction& b = engine.ball_multiplier();
    return engine.apply_multiplier(f, [&](double xi) { return b(r * xi); });
}

SProfile::SProfile(const SphericalMeanOperator& op, const RadialFunction& f,
                   std::vector<double> x, std::vector<double> t)
    : x_(std::move(x)), t_(std::move(t))
{
    if (t_.size() < 4)
        throw std::invalid_argument("SProfile: dilation grid too small");
    log_t0_ = std::log(t_.front());
    inv_dlog_ = (t_.size() - 1) / (std::log(t_.back()) - log_t0_);
    s_.resize(x_.size() * t_.size());
    limit0_.resize(x_.size());
    parallel_for(static_cast<int>(x_.size()), [&](int ix) {
        double* row = s_.data() + static_cast<size_t>(ix) * t_.size();
        for (size_t it = 0; it < t_.size(); ++it)
            row[it] = op(f, x_[ix], t_[it]);
        limit0_[ix] = f(x_[ix]);
    });
}

double SProfile::interp(int ix, double t) const
{
    const double* row = s_.data() + static_cast<size_t>(ix) * t_.size();
    const int nt = static_cast<int>(t_.size());
    if (t <= t_.front())
        return limit0_[ix] + (row[0] - limit0_[ix]) * (t / t_.front());
    if (t >= t_.back())
        return 0.0;
    int i = static_cast<int>(std::floor((std::log(t) - log_t0_) * inv_dlog_)) - 1;
    i = std::clamp(i, 0, nt - 4);
    const double lt = std::log(t);
    double acc = 0.0;
    for (int a = 0; a < 4; ++a) {
        double l = 1.0;
        const double ta = std::log(t_[i + a]);
        for (int b = 0; b < 4; ++b)
            if (b != a)
                l *= (lt - std::log(t_[i + b])) / (ta - std::log(t_[i + b]));
        acc += l * row[i + a];
    }
    return acc;
}

double MaximalProfile::max() const
{
    double m = 0.0;
    for (double v : values)
        m = std::max(m, v);
    return m;
}

std::string DilationGrid::id() const
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "t%.0e:%.0e@%d", t_min, t_max, per_decade);
    return buf;
}

namespace {

// Golden-section sweep for max of |S_t f(x)| on [lo, hi] (log axis).
double refine_max(const SphericalMeanOperator& op, const RadialFunction& f, double x,
                  double lo, double hi, double seed_value)
{
    const double gr = 0.6180339887498949;
    double a = std::log(lo), b = std::log(hi);
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = std::abs(op(f, x, std::exp(c)));
    double fd = std::abs(op(f, x, std::exp(d)));
    for (int it = 0; it < 32 && (b - a) > 1e-4; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = std::abs(op(f, x, std::exp(c)));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = std::abs(op(f, x, std::exp(d)));
        }
    }
    return std::max(seed_value, std::max(fc, fd));
}

} // namespace

MaximalPair maximal_pair(const SphericalMeanOperator& op, const RadialFunction& f,
                         const std::vector<double>& x, const DilationGrid& dil,
                         int refinement_passes)
{
    const std::vector<double> t = dil.radii();
    if (t.empty())
        throw std::invalid_argument("maximal operators: empty dilation grid");
    const double D = op.setting().homogeneous_dimension();

    MaximalPair out;
    out.spherical.x = x;
    out.spherical.values.assign(x.size(), 0.0);
    out.spherical.refinement_passes = refinement_passes;
    out.spherical.dilation_id = dil.id();
    out.hardy_littlewood = out.spherical;
    out.hardy_littlewood.refinement_passes = 0;

    const int nt = static_cast<int>(t.size());
    parallel_for(static_cast<int>(x.size()), [&](int ix) {
        std::vector<double> row(nt);
        for (int it = 0; it < nt; ++it)
            row[it] = op(f, x[ix], t[it]);

        // sup_t |S_t| with refinement around the discrete argmax
        double best = std::abs(f(x[ix])); // t -> 0 limit
        int arg = -1;
        for (int it = 0; it < nt; ++it) {
            if (std::abs(row[it]) > best) {
                best = std::abs(row[it]);
                arg = it;
            }
        }
        for (int pass = 0; pass < refinement_passes && arg >= 0; ++pass) {
            const double lo = t[std::max(0, arg - 1)];
            const double hi = t[std::min(nt - 1, arg + 1)];
            best = refine_max(op, f, x[ix], lo, hi, best);
        }
        out.spherical.values[ix] = best;

        // Hardy-Littlewood: running averages D/t^D * int_0^t S_u u^{D-1} du.
        // Trapezoid on the geometric grid in log t; the [0, t_0] head uses the
        // smooth small-t limit.
        double hl = std::abs(f(x[ix])); // t -> 0 limit of the average
        double integral = (0.5 * (f(x[ix]) + row[0])) * std::pow(t[0], D) / D;
        hl = std::max(hl, std::abs(integral * D / std::pow(t[0], D)));
        for (int it = 1; it < nt; ++it) {
            const double dln = std::log(t[it] / t[it - 1]);
            integral += 0.5 * dln *
                        (row[it] * std::pow(t[it], D) + row[it - 1] * std::pow(t[it - 1], D));
            hl = std::max(hl, std::abs(integral * D / std::pow(t[it], D)));
        }
        out.hardy_littlewood.values[ix] = hl;
    });
    return out;
}

MaximalProfile spherical_maximal(const SphericalMeanOperator& op, const RadialFunction& f,
                                 const std::vector<double>& x, const DilationGrid& dil,
                                 int refinement_passes)
{
    return maximal_pair(op, f, x, dil, refinement_passes).spherical;
}

MaximalProfile hl_maximal(const SphericalMeanOperator& op, const RadialFunction& f,
                          const std::vector<double>& x, const DilationGrid& dil)
{
    return maximal_pair(op, f, x, dil, 0).hardy_littlewood;
}

std::vector<double> argmax_dilations(const SphericalMeanOperator& op,
                                     const RadialFunction& f,
                                     const std::vector<double>& x,
                                     const DilationGrid& dil)
{
    const std::vector<double> t = dil.radii();
    std::vector<double> arg(x.size());
    parallel_for(static_cast<int>(x.size()), [&](int ix) {
        double best = -1.0, at = t.front();
        for (double tt : t) {
            const double v = std::abs(op(f, x[ix], tt));
            if (v > best) {
                best = v;
                at = tt;
            }
        }
        arg[ix] = at;
    });
    return arg;
}

} // namespace dunkl
