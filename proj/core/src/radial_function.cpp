#include "dunkl/radial_function.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

RadialGrid::RadialGrid(int n, double r_min, double r_max)
    : n_(n), r_min_(r_min), r_max_(r_max)
{
    if (n_ < 8)
        throw std::invalid_argument("RadialGrid: need at least 8 nodes");
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max");
    log_min_ = std::log(r_min_);
    const double dlog = (std::log(r_max_) - log_min_) / (n_ - 1);
    inv_dlog_ = 1.0 / dlog;
    r_.resize(n_);
    for (int i = 0; i < n_; ++i)
        r_[i] = std::exp(log_min_ + dlog * i);
    r_.front() = r_min_;
    r_.back() = r_max_;
}

std::shared_ptr<const RadialGrid> RadialGrid::make(int n, double r_min, double r_max)
{
    return std::make_shared<const RadialGrid>(n, r_min, r_max);
}

int RadialGrid::stencil(double r) const
{
    int i = static_cast<int>(std::floor((std::log(r) - log_min_) * inv_dlog_)) - 1;
    if (i < 0)
        i = 0;
    if (i > n_ - 4)
        i = n_ - 4;
    return i;
}

std::string RadialGrid::id() const
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "g%dx%.0ex%.0e", n_, r_min_, r_max_);
    return buf;
}

RadialFunction::RadialFunction(std::shared_ptr<const RadialGrid> grid,
                               std::vector<double> samples, double value_at_zero,
                               std::optional<double> support, bool odd)
    : grid_(std::move(grid)), v_(std::move(samples)), v0_(value_at_zero),
      support_(support), odd_(odd)
{
    if (!grid_ || static_cast<int>(v_.size()) != grid_->size())
        throw std::invalid_argument("RadialFunction: sample count does not match grid");
    if (odd_ && v0_ != 0.0)
        throw std::invalid_argument("RadialFunction: odd profile must vanish at 0");
    if (support_) {
        for (int i = 0; i < grid_->size(); ++i)
            if ((*grid_)[i] > *support_ && std::abs(v_[i]) > 1e-12)
                throw std::invalid_argument(
                    "RadialFunction: samples exceed 1e-12 beyond the declared support");
    }
    build_patch();
}

RadialFunction RadialFunction::sample(std::shared_ptr<const RadialGrid> grid,
                                      const std::function<double(double)>& f,
                                      std::optional<double> support)
{
    std::vector<double> v(grid->size());
    for (int i = 0; i < grid->size(); ++i)
        v[i] = f((*grid)[i]);
    return RadialFunction(std::move(grid), std::move(v), f(0.0), support);
}

void RadialFunction::build_patch()
{
    const double r1 = (*grid_)[0], r2 = (*grid_)[1];
    const double v1 = v_[0], v2 = v_[1];
    if (odd_) {
        // b r + c r^3 through the first two nodes
        const double det = r1 * r2 * r2 * r2 - r2 * r1 * r1 * r1;
        patch_b_ = (v1 * r2 * r2 * r2 - v2 * r1 * r1 * r1) / det;
        patch_c_ = (v2 * r1 - v1 * r2) / det;
    } else {
        // v0 + b r^2 + c r^4 through the first two nodes
        const double q1 = r1 * r1, q2 = r2 * r2;
        const double det = q1 * q2 * q2 - q2 * q1 * q1;
        patch_b_ = ((v1 - v0_) * q2 * q2 - (v2 - v0_) * q1 * q1) / det;
        patch_c_ = ((v2 - v0_) * q1 - (v1 - v0_) * q2) / det;
    }
}

double RadialFunction::operator()(double r) const
{
    r = std::abs(r);
    if (support_ && r > *support_)
        return 0.0;
    if (r > grid_->r_max())
        return 0.0;
    if (r < (*grid_)[0]) {
        if (odd_)
            return patch_b_ * r + patch_c_ * r * r * r;
        const double q = r * r;
        return v0_ + patch_b_ * q + patch_c_ * q * q;
    }
    const int i = grid_->stencil(r);
    const double t = std::log(r);
    double num = 0.0;
    for (int a = 0; a < 4; ++a) {
        double l = 1.0;
        const double ta = std::log((*grid_)[i + a]);
        for (int b = 0; b < 4; ++b) {
            if (b == a)
                continue;
            l *= (t - std::log((*grid_)[i + b])) / (ta - std::log((*grid_)[i + b]));
        }
        num += l * v_[i + a];
    }
    return num;
}

double RadialFunction::max_abs() const
{
    double m = std::abs(v0_);
    for (double v : v_)
        m = std::max(m, std::abs(v));
    return m;
}

RadialFunction& RadialFunction::scale(double c)
{
    v0_ *= c;
    for (double& v : v_)
        v *= c;
    build_patch();
    return *this;
}

RadialFunction RadialFunction::dilate(double a) const
{
    if (!(a > 0.0))
        throw std::invalid_argument("RadialFunction::dilate: need a > 0");
    std::vector<double> v(grid_->size());
    for (int i = 0; i < grid_->size(); ++i)
        v[i] = (*this)((*grid_)[i] / a);
    std::optional<double> sup;
    if (support_)
        sup = *support_ * a;
    return RadialFunction(grid_, std::move(v), v0_, sup, odd_);
}

void RadialFunction::write_csv(std::ostream& os) const
{
    os << "r,value\n";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "0,%.17g\n", v0_);
    os << buf;
    for (int i = 0; i < grid_->size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", (*grid_)[i], v_[i]);
        os << buf;
    }
}

RadialFunction RadialFunction::read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("r,", 0) != 0)
        throw std::runtime_error("RadialFunction::read_csv: missing 'r,value' header");
    std::vector<double> r, v;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        double a, b;
        char comma;
        if (!(ls >> a >> comma >> b) || comma != ',')
            throw std::runtime_error("RadialFunction::read_csv: bad row '" + line + "'");
        r.push_back(a);
        v.push_back(b);
    }
    if (r.size() < 9 || r.front() != 0.0)
        throw std::runtime_error("RadialFunction::read_csv: need an r=0 row plus a grid");
    const double v0 = v.front();
    r.erase(r.begin());
    v.erase(v.begin());
    const int n = static_cast<int>(r.size());
    // Exported grids are log-uniform; rebuild and verify.
    auto grid = RadialGrid::make(n, r.front(), r.back());
    for (int i = 0; i < n; ++i)
        if (std::abs((*grid)[i] - r[i]) > 1e-9 * r[i])
            throw std::runtime_error("RadialFunction::read_csv: radii are not log-uniform");
    return RadialFunction(std::move(grid), std::move(v), v0);
}

std::vector<double> geometric_radii(double t_min, double t_max, int per_decade)
{
    if (!(t_min > 0.0) || !(t_max > t_min) || per_decade < 1)
        throw std::invalid_argument("geometric_radii: bad parameters");
    const double decades = std::log10(t_max / t_min);
    const int n = static_cast<int>(std::ceil(decades * per_decade)) + 1;
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i)
        t[i] = t_min * std::pow(10.0, decades * i / (n - 1));
    t.back() = t_max;
    return t;
}

} // namespace dunkl
