#include "zetacan/zetareg.hpp"
#include "zetacan/kahan.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zetacan::zetareg {

using special::euler_gamma;
using special::hurwitz_zeta;
using special::hurwitz_zeta_prime;
using special::pi;
using special::riemann_zeta;
using special::riemann_zeta_prime;

namespace {

const double log2 = std::log(2.0);
const double log_pi = std::log(pi);
const double log_2pi = std::log(2.0 * pi);

double zeta_prime_0()
{
    return -0.5 * log_2pi;
}

}  // namespace

ZetaPair zeta_from_profile(const numerics::AsymptoticProfile& profile)
{
    if (!profile.certified)
        throw numerics::NumericalError("zeta_from_profile: profile not certified");
    return {-profile.a, -profile.b};
}

// ---------------------------------------------------------------- η and Σ R₂

double eta_function(double s)
{
    if (!(s > 1.0))
        throw std::domain_error("eta_function: series needs s > 1");
    const long N = 200;
    KahanSum<double> sum;
    for (long n = 2; n <= N; ++n)
        sum += special::log_gamma(double(n)) * std::pow(double(n), -2.0 * s);
    // Stirling series for the tail, n > N
    const double a = N + 1.0;
    sum += -hurwitz_zeta_prime(2 * s - 1, a) - hurwitz_zeta(2 * s - 1, a);
    sum += 0.5 * hurwitz_zeta_prime(2 * s, a) + 0.5 * log_2pi * hurwitz_zeta(2 * s, a);
    sum += hurwitz_zeta(2 * s + 1, a) / 12.0 - hurwitz_zeta(2 * s + 3, a) / 360.0 +
           hurwitz_zeta(2 * s + 5, a) / 1260.0;
    return sum.value() - riemann_zeta(2 * s + 1) / 12.0;
}

double stirling_remainder_sum(double s)
{
    if (!(s > -1.0))
        throw std::domain_error("stirling_remainder_sum: needs s > -1");
    const long N = 60;
    KahanSum<double> sum;
    for (long n = 1; n <= N; ++n)
        sum += special::stirling_remainder_R2(n) * std::pow(double(n), -2.0 * s);
    const double a = N + 1.0;
    sum += -hurwitz_zeta(2 * s + 3, a) / 360.0 + hurwitz_zeta(2 * s + 5, a) / 1260.0 -
           hurwitz_zeta(2 * s + 7, a) / 1680.0;
    return sum.value();
}

double stirling_remainder_sum_closed()
{
    return 2.0 * special::zeta_prime_minus_one() - 1.0 / 12.0 - euler_gamma / 12.0 + 0.25 * log_2pi;
}

double eta_decomposed(double s)
{
    return -riemann_zeta_prime(2 * s - 1) - riemann_zeta(2 * s - 1) + 0.5 * riemann_zeta_prime(2 * s) +
           0.5 * log_2pi * riemann_zeta(2 * s) + stirling_remainder_sum(s);
}

double eta_at_zero()
{
    return special::zeta_prime_minus_one() - euler_gamma / 12.0 - 0.25 * log_2pi;
}

// ---------------------------------------------------------------- γ_k

double gamma_k(int k, double s)
{
    if (k < 1)
        throw std::invalid_argument("gamma_k: k must be positive");
    if (!(s > -0.5))
        throw std::domain_error("gamma_k: series needs s > -1/2");
    const long N = std::max(1000L, 50L * k);
    KahanSum<double> sum;
    for (long n = 1; n <= N; ++n) {
        const double x = double(k) / n;
        sum += (std::log1p(x) - x) * std::pow(double(n), -2.0 * s);
    }
    // log(1+x) − x = Σ_{j≥2} (−1)^{j+1} x^j / j for the tail
    double kp = double(k);
    for (int j = 2; j <= 16; ++j) {
        kp *= k;
        const double sign = j % 2 ? 1.0 : -1.0;
        sum += sign * kp / j * hurwitz_zeta(2 * s + j, N + 1.0);
    }
    return sum.value();
}

double gamma_k_at_zero(int k)
{
    return -special::log_gamma(k + 1.0) - euler_gamma * k;
}

// ---------------------------------------------------------------- F components

UniformCorrection g_family_correction(int m)
{
    return {-0.25 * (2.0 * m * m + 2.0 * m + 1.0), 1.0 / 12.0};
}

UniformCorrection dirichlet_correction()
{
    return {1.0 / 8.0, -5.0 / 24.0};
}

UniformCorrection neumann_correction()
{
    return {-3.0 / 8.0, 7.0 / 24.0};
}

namespace {

// s ζ(2s+1), regular at 0
double s_zeta(double s)
{
    if (s == 0.0)
        return 0.5;
    return s * riemann_zeta(2 * s + 1);
}

template <typename Gamma>
double f_with(const UniformCorrection& w, double s, Gamma gamma_fn)
{
    const double k1 = -w.c1, k3 = -w.c3;
    const double sqrt_pi = std::sqrt(pi);
    // sin(πa)Γ(1−a)/π is 1/√π at a = 1/2 and 2/√π at a = 3/2
    const double h = k1 * gamma_fn(0.5 + s) / sqrt_pi + k3 * 2.0 * gamma_fn(1.5 + s) / sqrt_pi;
    return s_zeta(s) / std::exp(special::log_gamma(s + 1.0)) * h;
}

double gamma_quadrature(double x)
{
    // Γ(x) = ∫ exp(x u − e^u) du
    auto f = [x](double u) { return std::exp(x * u - std::exp(u)); };
    const double lo = -40.0 / x;
    return numerics::adaptive_quad(f, lo, 0.0, 1e-15) + numerics::adaptive_quad(f, 0.0, 5.0, 1e-15);
}

}  // namespace

double f_component(const UniformCorrection& w, double s)
{
    return f_with(w, s, [](double x) { return std::exp(special::log_gamma(x)); });
}

ZetaPair f_component_at_zero(const UniformCorrection& w)
{
    const double k1 = -w.c1, k3 = -w.c3;
    const double K = k1 + k3;
    const double psi_half = -euler_gamma - 2.0 * log2;
    const double psi_3half = psi_half + 2.0;
    return {0.5 * K, 1.5 * euler_gamma * K + 0.5 * (k1 * psi_half + k3 * psi_3half)};
}

ZetaPair f_component_quadrature(const UniformCorrection& w)
{
    const double h = 1e-3;
    double v[5];
    for (int i = -2; i <= 2; ++i)
        if (i != 0)
            v[i + 2] = f_with(w, i * h, gamma_quadrature);
    ZetaPair r;
    r.value = (-v[4] + 4.0 * v[3] + 4.0 * v[1] - v[0]) / 6.0;
    r.derivative = (-v[4] + 8.0 * v[3] - 8.0 * v[1] + v[0]) / (12.0 * h);
    return r;
}

// ---------------------------------------------------------------- family components

double A_m(int m, double s)
{
    return riemann_zeta(2 * s - 1) + 0.5 * m * riemann_zeta(2 * s);
}

FamilyComponents family_components(int m)
{
    if (m < 0)
        throw std::invalid_argument("family_components: m must be non-negative");
    FamilyComponents c;
    c.m = m;
    const double zpm1 = special::zeta_prime_minus_one();
    c.A0 = -1.0 / 12.0 - 0.25 * m;
    c.A0_prime = 2.0 * zpm1 + m * zeta_prime_0();
    c.eta0 = eta_at_zero();
    KahanSum<double> gk;
    for (int k = 1; k <= m; ++k) {
        c.gamma_k_0.push_back(gamma_k_at_zero(k));
        gk += c.gamma_k_0.back();
    }
    c.BP_limit = gk.value() + 2.0 * c.eta0 - m * zeta_prime_0() + 2.0 * zpm1 + (m - 1) * zeta_prime_0() +
                 2.0 * log2 * (-1.0 / 12.0) + (m - 1) * log2 * (-0.5) - log_pi * (-0.5);
    const ZetaPair f = f_component_at_zero(g_family_correction(m));
    c.F0 = f.value;
    c.F0_prime = f.derivative;
    return c;
}

ZetaPair zeta_tail_block(int m)
{
    if (m < 0)
        throw std::invalid_argument("zeta_tail_block: m must be non-negative");
    double lg = 0.0;
    for (int k = 1; k <= m; ++k)
        lg += special::log_gamma(k + 1.0);
    ZetaPair r;
    r.value = 1.0 / 6.0 + 0.5 * m + 0.25 * m * m;
    r.derivative = 2.0 * special::zeta_prime_minus_one() - lg + (1.0 / 6.0 - 0.5 * m * (m + 1)) * log2 +
                   0.5 * (m + 1) * log_pi - 1.0 / 12.0;
    return r;
}

// ---------------------------------------------------------------- numeric family route

UniformFamily g_family(int m)
{
    UniformFamily f;
    f.alpha = 2.0;
    f.beta = -m;
    f.delta = 0.0;
    f.w = g_family_correction(m);
    f.order_term = [m](long n) {
        const long double x = n;
        const long double L2 = std::log(2.0L);
        const long double log_l = -(2.0L * x + m - 1.0L) * L2 - std::lgamma(x + m + 1.0L) - std::lgamma(x);
        const long double c = -std::log(3.141592653589793238462643383279502884L) - (2.0L * x + m) * std::log(x) - log_l;
        return c + 2.0L * x * (1.0L - L2) - m * L2;
    };
    return f;
}

UniformFamily dirichlet_family()
{
    UniformFamily f;
    f.alpha = 1.0;
    f.delta = -0.5;
    f.w = dirichlet_correction();
    f.order_term = [](long n) {
        const long double x = n;
        const long double two_pi = 6.283185307179586476925286766559005768L;
        return std::lgamma(x + 1.0L) - x * std::log(x) + x - 0.5L * std::log(two_pi * x);
    };
    return f;
}

UniformFamily neumann_family()
{
    UniformFamily f;
    f.alpha = 1.0;
    f.delta = 0.5;
    f.w = neumann_correction();
    f.order_term = [](long n) {
        const long double x = n;
        const long double two_pi = 6.283185307179586476925286766559005768L;
        return std::lgamma(x) - (x - 1.0L) * std::log(x) + x - 0.5L * std::log(two_pi * x);
    };
    return f;
}

ZetaPair family_zeta_numeric(const UniformFamily& f)
{
    const long double cw = f.w.c1 + f.w.c3;
    const std::vector<long> cuts = {1000, 2000, 4000, 8000, 16000};
    std::vector<double> h, partial;
    KahanSum<long double> acc;
    long n = 1;
    for (long N : cuts) {
        for (; n <= N; ++n)
            acc += f.order_term(n) + cw / n;
        h.push_back(1.0 / double(N));
        partial.push_back(double(acc.value()));
    }
    const double sum = numerics::richardson(h, partial);

    const double zpm1 = special::zeta_prime_minus_one();
    const double psi_half = -euler_gamma - 2.0 * log2;
    const double psi_3half = psi_half + 2.0;
    const double c = f.w.c1 + f.w.c3;
    ZetaPair r;
    r.value = f.alpha / 24.0 - 0.25 * f.beta - 0.25 * f.delta - 0.5 * c;
    r.derivative = sum + f.alpha * ((2.0 - 2.0 * log2) / 24.0 - zpm1) - 0.5 * f.beta * log_pi -
                   0.5 * f.delta * log_2pi -
                   (1.5 * euler_gamma * c + 0.5 * (f.w.c1 * psi_half + f.w.c3 * psi_3half));
    return r;
}

ZetaPair zeta_tail_numeric(int m)
{
    return family_zeta_numeric(g_family(m));
}

// ---------------------------------------------------------------- routes

std::string to_string(Route r)
{
    switch (r) {
    case Route::ClosedForm: return "closed";
    case Route::ProfileFit: return "profile";
    case Route::ContourNumeric: return "contour";
    }
    return "closed";
}

Route route_from_string(const std::string& s)
{
    if (s == "closed")
        return Route::ClosedForm;
    if (s == "profile")
        return Route::ProfileFit;
    if (s == "contour")
        return Route::ContourNumeric;
    throw std::invalid_argument("unknown route: " + s);
}

std::pair<double, double> profile_window(besselx::CrossProductSpec spec)
{
    const besselx::CrossProductSpec c = besselx::canonical(spec);
    const double lo = 40.0 + 10.0 * c.n;
    return {lo, 10.0 * lo};
}

ZetaPair low_order_zeta(besselx::CrossProductSpec spec, Route route, const RouteOptions& opt)
{
    const besselx::CrossProductSpec c = besselx::canonical(spec);
    switch (route) {
    case Route::ClosedForm:
        return zeta_from_profile(besselx::analytic_profile(c));
    case Route::ProfileFit: {
        const int e = besselx::leading_exponent(c);
        const double log_l = besselx::log_leading_coefficient(c);
        auto f = [&](double x) {
            return -(besselx::cross_G_log(c.n, c.m, x).log_magnitude - log_l - e * std::log(x));
        };
        const auto [lo, hi] = profile_window(c);
        return zeta_from_profile(numerics::fit_asymptotic_profile(f, lo, hi, opt.fit));
    }
    case Route::ContourNumeric: {
        auto logp = [c](std::complex<double> z) { return besselx::cross_L_log(c.n, c.m, z); };
        const numerics::ContourZeta z = numerics::contour_zeta_at_zero(logp, opt.contour);
        return {z.zeta0, z.zeta0_prime};
    }
    }
    throw std::invalid_argument("low_order_zeta: bad route");
}

Rational operator+(Rational a, Rational b)
{
    Rational r{a.num * b.den + b.num * a.den, a.den * b.den};
    const long long g = std::gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

Rational operator*(long long k, Rational a)
{
    return Rational{0, 1} + Rational{k * a.num, a.den};
}

bool operator==(Rational a, Rational b)
{
    return a.num * b.den == b.num * a.den;
}

std::string to_string(Rational r)
{
    return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational zeta0_exact(int m)
{
    if (m < 0)
        throw std::invalid_argument("zeta0_exact: m must be non-negative");
    Rational z = 2 * Rational{2 + 6LL * m + 3LL * m * m, 12};
    for (int n = 0; n <= m / 2; ++n) {
        const int e = besselx::leading_exponent(besselx::canonical({n, m}));
        z = z + besselx::multiplicity(n, m) * Rational{-(e + 1), 2};
    }
    return z;
}

ZetaPair canonical_closed_form(int m)
{
    if (m < 0)
        throw std::invalid_argument("canonical_closed_form: m must be non-negative");
    const double log_h = (m + 1) * std::log(m + 2.0) - 2.0 * special::log_gamma(m + 2.0);
    return {-2.0 / 3.0 - 0.5 * m, 4.0 * special::zeta_prime_minus_one() - 1.0 / 6.0 - log_h};
}

RegularizationReport zeta_canonical(int m, Route route, const RouteOptions& opt)
{
    if (m < 0)
        throw std::invalid_argument("zeta_canonical: m must be non-negative");
    RegularizationReport rep;
    rep.m = m;
    rep.route = route;
    rep.components = family_components(m);

    const ZetaPair tail = route == Route::ContourNumeric ? zeta_tail_numeric(m) : zeta_tail_block(m);
    const int low = m / 2 + 1;
    std::vector<ZetaPair> blocks(low);
    numerics::parallel_for(low, [&](int n) { blocks[n] = low_order_zeta({n, m}, route, opt); });

    KahanSum<double> z0, z1;
    z0 += 2.0 * tail.value;
    z1 += 2.0 * tail.derivative;
    for (int n = 0; n < low; ++n) {
        const int mult = besselx::multiplicity(n, m);
        z0 += mult * blocks[n].value;
        z1 += mult * blocks[n].derivative;
    }
    // ζ_Δ(s) = 4^s z_m(s)
    rep.zeta0 = z0.value();
    if (route == Route::ClosedForm) {
        rep.zeta0_exact = zeta0_exact(m);
        rep.zeta0 = rep.zeta0_exact.value();
    }
    rep.zeta0_prime = z1.value() + 2.0 * log2 * z0.value();
    rep.det_reg = std::exp(-rep.zeta0_prime);
    return rep;
}

// ---------------------------------------------------------------- m = 0 blocks

DirichletNeumann dirichlet_neumann_block()
{
    const double zpm1 = special::zeta_prime_minus_one();
    DirichletNeumann r;
    r.dirichlet = {1.0 / 6.0, 2.0 * zpm1 + 0.5 * log_pi + log2 / 6.0 + 5.0 / 12.0};
    r.neumann = {-5.0 / 6.0, 2.0 * zpm1 + log2 / 6.0 - 0.5 * log_pi - 7.0 / 12.0};
    return r;
}

double dirichlet_prime_printed()
{
    return 2.0 * special::zeta_prime_minus_one() + 0.5 * log_2pi + 5.0 / 12.0;
}

DirichletNeumann dirichlet_neumann_numeric(const numerics::ContourSpec& contour)
{
    const ZetaPair zd = family_zeta_numeric(dirichlet_family());
    const ZetaPair zn = family_zeta_numeric(neumann_family());
    const numerics::ContourZeta j0 =
        numerics::contour_zeta_at_zero([](std::complex<double> z) { return special::bessel_j_log(0, z); }, contour);
    // zeros of J_0' are those of J_1
    const numerics::ContourZeta j0p =
        numerics::contour_zeta_at_zero([](std::complex<double> z) { return special::bessel_j_log(1, z); }, contour);
    DirichletNeumann r;
    r.dirichlet = {j0.zeta0 + 2.0 * zd.value, j0.zeta0_prime + 2.0 * zd.derivative};
    r.neumann = {j0p.zeta0 + 2.0 * zn.value, j0p.zeta0_prime + 2.0 * zn.derivative};
    return r;
}

}  // namespace zetacan::zetareg
