// Sampled radial profiles on a shared log-spaced grid, with cubic interpolation
// in log r and an even (or odd) series patch at the origin.
#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

class RadialGrid {
public:
    static std::shared_ptr<const RadialGrid> make(int n, double r_min, double r_max);

    int size() const { return n_; }
    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double operator[](int i) const { return r_[i]; }
    const std::vector<double>& radii() const { return r_; }

    // Base index for a 4-point interpolation stencil around r (clamped).
    int stencil(double r) const;

    std::string id() const;

    RadialGrid(int n, double r_min, double r_max);

private:
    int n_;
    double r_min_, r_max_;
    double log_min_, inv_dlog_;
    std::vector<double> r_;
};

class RadialFunction {
public:
    RadialFunction() = default;
    RadialFunction(std::shared_ptr<const RadialGrid> grid, std::vector<double> samples,
                   double value_at_zero, std::optional<double> support = std::nullopt,
                   bool odd = false);

    static RadialFunction sample(std::shared_ptr<const RadialGrid> grid,
                                 const std::function<double(double)>& f,
                                 std::optional<double> support = std::nullopt);

    const RadialGrid& grid() const { return *grid_; }
    std::shared_ptr<const RadialGrid> grid_ptr() const { return grid_; }
    const std::vector<double>& samples() const { return v_; }
    std::vector<double>& samples() { return v_; }
    double value_at_zero() const { return v0_; }
    std::optional<double> support() const { return support_; }
    bool odd() const { return odd_; }

    // Piecewise cubic in log r; agrees with the samples at the nodes exactly.
    // Series patch below the first node, zero beyond the grid or the declared
    // support radius.
    double operator()(double r) const;

    double max_abs() const;

    RadialFunction& scale(double c);
    // Profile of x -> f(x/a) on the same grid.
    RadialFunction dilate(double a) const;

    void write_csv(std::ostream& os) const;
    static RadialFunction read_csv(std::istream& is);

private:
    std::shared_ptr<const RadialGrid> grid_;
    std::vector<double> v_;
    double v0_ = 0.0;
    std::optional<double> support_;
    bool odd_ = false;
    // Origin patch: even  v0 + b r^2 + c r^4,  odd  b r + c r^3.
    double patch_b_ = 0.0, patch_c_ = 0.0;

    void build_patch();
};

// Geometric dilation grid for maximal-operator sweeps.
std::vector<double> geometric_radii(double t_min, double t_max, int per_decade);

} // namespace dunkl
