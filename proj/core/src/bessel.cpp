#include "dunkl/bessel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

// Minimal double-double arithmetic for the series accumulation.  Only what the
// Horner loop needs; products go through std::fma.
struct dd {
    double hi;
    double lo;
};

inline dd two_sum(double a, double b)
{
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline dd quick_two_sum(double a, double b)
{
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b)
{
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b)
{
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(dd a, dd b)
{
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b)
{
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, double b)
{
    double q1 = a.hi / b;
    dd p = two_prod(q1, b);
    double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
    return quick_two_sum(q1, q2);
}

void check_domain(double nu, double x)
{
    if (nu < -0.5)
        throw std::domain_error("normalized_bessel: order must be >= -1/2, got " +
                                std::to_string(nu));
    if (x < 0.0)
        throw std::domain_error("normalized_bessel: argument must be >= 0, got " +
                                std::to_string(x));
}

double series_cutoff(double nu) { return std::max(30.0, 2.0 * nu); }

// Term-recurrence power series in double-double:
//   j_nu(x) = sum t_m,  t_0 = 1,  t_{m+1} = -t_m (x^2/4) / ((m+1)(m+nu+1)).
double series_dd(double nu, double x)
{
    dd q = dd_div(two_prod(x, x), 4.0); // x^2 / 4 exactly-ish
    dd term{1.0, 0.0};
    dd sum{1.0, 0.0};
    for (int m = 0; m < 400; ++m) {
        term = dd_mul(term, q);
        term = dd_div(term, -(double(m) + 1.0) * (double(m) + nu + 1.0));
        sum = dd_add(sum, term);
        if (std::abs(term.hi) < 1e-24)
            break;
    }
    return sum.hi + sum.lo;
}

// Hankel asymptotic expansion for one order with |order| <= 1.5, x >= 28:
//   J_o(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi),  chi = x - (o/2 + 1/4) pi.
double hankel_J(double o, double x)
{
    const double mu = 4.0 * o * o;
    const double inv8x = 1.0 / (8.0 * x);
    double p = 1.0, q = 0.0;
    double a = 1.0;
    double prev = std::abs(a);
    for (int k = 1; k <= 40; ++k) {
        a *= (mu - double(2 * k - 1) * double(2 * k - 1)) * inv8x / double(k);
        double mag = std::abs(a);
        if (mag > prev)
            break; // optimal truncation reached
        prev = mag;
        switch (k % 4) {
        case 1: q += a; break;
        case 2: p -= a; break;
        case 3: q -= a; break;
        default: p += a; break;
        }
        if (mag < 1e-19)
            break;
    }
    const double chi = x - (0.5 * o + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) *
           (p * std::cos(chi) - q * std::sin(chi));
}

// J_nu(x) for x beyond the series cut: Hankel expansion at the base order
// mu = nu - n in [-1/2, 1/2), then forward recurrence J_{o+1} = (2o/x) J_o - J_{o-1}.
double large_x_J(double nu, double x)
{
    int n = static_cast<int>(std::floor(nu + 0.5));
    if (n < 0)
        n = 0;
    double mu = nu - n;
    double jm = hankel_J(mu, x);
    if (n == 0)
        return jm;
    double jc = hankel_J(mu + 1.0, x);
    for (int i = 1; i < n; ++i) {
        double o = mu + i;
        double jn = (2.0 * o / x) * jc - jm;
        jm = jc;
        jc = jn;
    }
    return jc;
}

// j_nu = Gamma(nu+1) (2/x)^nu J_nu, assembled in log space to dodge overflow.
double normalize_from_J(double nu, double x, double J)
{
    if (nu == 0.0)
        return J;
    double scale = std::exp(std::lgamma(nu + 1.0) + nu * (std::numbers::ln2 - std::log(x)));
    return scale * J;
}

} // namespace

namespace detail {

double bessel_series(double nu, double x) { return series_dd(nu, x); }

double bessel_asymptotic(double nu, double x)
{
    return normalize_from_J(nu, x, large_x_J(nu, x));
}

} // namespace detail

double normalized_bessel(double nu, double x)
{
    check_domain(nu, x);
    if (x == 0.0)
        return 1.0;
    if (x <= series_cutoff(nu))
        return series_dd(nu, x);
    return detail::bessel_asymptotic(nu, x);
}

double normalized_bessel_derivative(double nu, double x, int order)
{
    check_domain(nu, x);
    if (order == 1)
        return -x / (2.0 * (nu + 1.0)) * normalized_bessel(nu + 1.0, x);
    if (order == 2)
        return -normalized_bessel(nu + 1.0, x) / (2.0 * (nu + 1.0)) +
               x * x / (4.0 * (nu + 1.0) * (nu + 2.0)) * normalized_bessel(nu + 2.0, x);
    throw std::domain_error("normalized_bessel_derivative: order must be 1 or 2");
}

NormalizedBessel::NormalizedBessel(double nu) : nu_(nu)
{
    check_domain(nu, 0.0);
    series_cut_ = series_cutoff(nu);
    plain_cut_ = 6.0;

    // Series coefficients c_m = (-1)^m / (4^m m! (nu+1)_m), kept until a term at
    // the cutoff argument could still matter.
    dd c{1.0, 0.0};
    const double q2 = series_cut_ * series_cut_;
    double tail = 1.0;
    chi_.push_back(c.hi);
    clo_.push_back(c.lo);
    for (int m = 0; m < 200; ++m) {
        c = dd_div(c, -4.0 * (double(m) + 1.0) * (double(m) + nu + 1.0));
        chi_.push_back(c.hi);
        clo_.push_back(c.lo);
        tail *= q2 / (4.0 * (double(m) + 1.0) * (double(m) + nu + 1.0));
        if (tail < 1e-24 && m > 4)
            break;
    }
}

double NormalizedBessel::operator()(double x) const
{
    if (x < 0.0)
        throw std::domain_error("NormalizedBessel: argument must be >= 0");
    if (x == 0.0)
        return 1.0;
    if (x > series_cut_)
        return detail::bessel_asymptotic(nu_, x);

    const size_t n = chi_.size();
    if (x <= plain_cut_) {
        const double xx = x * x;
        double s = chi_[n - 1];
        for (size_t i = n - 1; i-- > 0;)
            s = s * xx + chi_[i];
        return s;
    }
    const dd xx = two_prod(x, x);
    dd s{chi_[n - 1], clo_[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        s = dd_mul(s, xx);
        s = dd_add(s, dd{chi_[i], clo_[i]});
    }
    return s.hi + s.lo;
}

} // namespace dunkl
