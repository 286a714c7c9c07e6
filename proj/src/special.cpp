#include "zetacan/special.hpp"
#include "zetacan/kahan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zetacan::special {

namespace {

using ld = long double;

constexpr ld ld_pi = 3.141592653589793238462643383279502884L;
constexpr ld ld_log_2pi = 1.837877066409345483560659472811235279L;

// B_2, B_4, ..., B_30
constexpr std::array<ld, 15> bernoulli2 = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
};

ld factorial(int k)
{
    ld f = 1.0L;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

// Stirling series for log Γ(x), x >= 15
ld log_gamma_stirling(ld x)
{
    ld r = (x - 0.5L) * std::log(x) - x + 0.5L * ld_log_2pi;
    ld xp = x;
    ld x2 = x * x;
    for (int j = 1; j <= 10; ++j) {
        r += bernoulli2[j - 1] / ((2 * j) * (2 * j - 1) * xp);
        xp *= x2;
    }
    return r;
}

ld log_gamma_ld(ld x)
{
    if (x >= 15.0L)
        return log_gamma_stirling(x);
    ld prod = 1.0L;
    ld shift = 0.0L;
    while (x < 15.0L) {
        prod *= x;
        x += 1.0L;
        if (prod > 1e300L) {
            shift += std::log(prod);
            prod = 1.0L;
        }
    }
    return log_gamma_stirling(x) - std::log(prod) - shift;
}

// Euler–Maclaurin for Hurwitz sums: Σ_{k>=0} (k+a)^{-s} and its s-derivative
struct ZetaPair {
    ld value;
    ld derivative;
};

ZetaPair em_zeta(ld s, ld a)
{
    const int n_direct = std::max(0, 30 - static_cast<int>(a));
    KahanSum<ld> v, d;
    for (int k = 0; k < n_direct; ++k) {
        ld q = k + a;
        ld t = std::pow(q, -s);
        v += t;
        d += -std::log(q) * t;
    }
    const ld N = n_direct + a;
    const ld logN = std::log(N);
    const ld Ns = std::pow(N, -s);
    const ld sm1 = s - 1.0L;
    v += N * Ns / sm1;
    d += -logN * N * Ns / sm1 - N * Ns / (sm1 * sm1);
    v += 0.5L * Ns;
    d += -0.5L * logN * Ns;

    // P_j(s) = s(s+1)...(s+2j-2), carried with its derivative
    ld P = s;
    ld dP = 1.0L;
    ld Npow = Ns / N;  // N^{-s-1}
    for (int j = 1; j <= 15; ++j) {
        if (j > 1) {
            ld f1 = s + (2 * j - 3);
            ld f2 = s + (2 * j - 2);
            dP = dP * f1 * f2 + P * (f1 + f2);
            P = P * f1 * f2;
            Npow /= N * N;
        }
        ld c = bernoulli2[j - 1] / factorial(2 * j);
        ld term = c * P * Npow;
        v += term;
        d += c * (dP - logN * P) * Npow;
        if (std::fabs(term) < 1e-22L * std::fabs(v.value()) && j > 3)
            break;
    }
    return {v.value(), d.value()};
}

}  // namespace

double LogValue::value() const
{
    return sign * std::exp(log_magnitude);
}

LogValue log_add(LogValue a, LogValue b)
{
    if (a.sign == 0)
        return b;
    if (b.sign == 0)
        return a;
    if (a.log_magnitude < b.log_magnitude)
        std::swap(a, b);
    double r = std::exp(b.log_magnitude - a.log_magnitude);
    double f = a.sign == b.sign ? 1.0 + r : 1.0 - r;
    if (f == 0.0)
        return {-std::numeric_limits<double>::infinity(), 0};
    return {a.log_magnitude + std::log(f), a.sign};
}

LogValue log_mul(LogValue a, LogValue b)
{
    return {a.log_magnitude + b.log_magnitude, a.sign * b.sign};
}

double log_gamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    return static_cast<double>(log_gamma_ld(x));
}

double digamma(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("digamma: argument must be positive");
    ld r = 0.0L;
    ld y = x;
    while (y < 15.0L) {
        r -= 1.0L / y;
        y += 1.0L;
    }
    ld y2 = y * y;
    ld yp = y2;
    r += std::log(y) - 0.5L / y;
    for (int j = 1; j <= 10; ++j) {
        r -= bernoulli2[j - 1] / ((2 * j) * yp);
        yp *= y2;
    }
    return static_cast<double>(r);
}

double stirling_remainder_R2(long n)
{
    if (n < 1)
        throw std::domain_error("stirling_remainder_R2: n must be >= 1");
    const ld x = static_cast<ld>(n);
    if (n >= 15) {
        // tail of the Stirling series from the B_4 term on
        ld r = 0.0L;
        ld xp = x * x * x;
        for (int j = 2; j <= 10; ++j) {
            r += bernoulli2[j - 1] / ((2 * j) * (2 * j - 1) * xp);
            xp *= x * x;
        }
        return static_cast<double>(r);
    }
    ld base = x * std::log(x) - x - 0.5L * std::log(x) + 0.5L * ld_log_2pi + 1.0L / (12.0L * x);
    return static_cast<double>(log_gamma_ld(x) - base);
}

double riemann_zeta(double s)
{
    if (s == 1.0)
        throw std::domain_error("riemann_zeta: pole at s = 1");
    return static_cast<double>(em_zeta(s, 1.0L).value);
}

double riemann_zeta_prime(double s)
{
    if (s == 1.0)
        throw std::domain_error("riemann_zeta_prime: pole at s = 1");
    return static_cast<double>(em_zeta(s, 1.0L).derivative);
}

double hurwitz_zeta(double s, double a)
{
    if (s == 1.0)
        throw std::domain_error("hurwitz_zeta: pole at s = 1");
    if (!(a > 0.0))
        throw std::domain_error("hurwitz_zeta: a must be positive");
    return static_cast<double>(em_zeta(s, a).value);
}

double hurwitz_zeta_prime(double s, double a)
{
    if (s == 1.0)
        throw std::domain_error("hurwitz_zeta_prime: pole at s = 1");
    if (!(a > 0.0))
        throw std::domain_error("hurwitz_zeta_prime: a must be positive");
    return static_cast<double>(em_zeta(s, a).derivative);
}

double zeta_prime_minus_one()
{
    static const double v = riemann_zeta_prime(-1.0);
    return v;
}

double log_glaisher()
{
    return 1.0 / 12.0 - zeta_prime_minus_one();
}

// ---------------------------------------------------------------- Bessel J

namespace {

double hankel_cutoff(int n)
{
    return std::max(25.0, 0.5 * double(n) * double(n));
}

// P and Q of the Hankel expansion, real argument
void hankel_pq(int n, ld x, ld& P, ld& Q)
{
    const ld mu = 4.0L * n * n;
    P = 1.0L;
    Q = 0.0L;
    ld term = 1.0L;
    ld last = std::numeric_limits<ld>::infinity();
    for (int k = 1; k < 200; ++k) {
        term *= (mu - ld(2 * k - 1) * (2 * k - 1)) / (ld(k) * 8.0L * x);
        if (std::fabs(term) > last || term == 0.0L)
            break;
        last = std::fabs(term);
        switch (k % 4) {
        case 1: Q += term; break;
        case 2: P -= term; break;
        case 3: Q -= term; break;
        default: P += term; break;
        }
        if (std::fabs(term) < 1e-20L)
            break;
    }
}

double bessel_j_series(int n, double x)
{
    const ld h = 0.5L * x;
    const ld q = h * h;
    KahanSum<ld> s;
    ld t = 1.0L;
    for (int r = 0; r < 500; ++r) {
        if (r > 0)
            t *= -q / (ld(r) * ld(n + r));
        s += t;
        if (std::fabs(t) < 1e-21L * std::fabs(s.value()))
            break;
    }
    ld pref = std::exp(n * std::log(h) - log_gamma_ld(n + 1.0L));
    return static_cast<double>(pref * s.value());
}

double bessel_j_hankel(int n, double x)
{
    ld P, Q;
    hankel_pq(n, x, P, Q);
    // ω = x − (2n+1)π/4, phase in multiples of π/4
    const int j = (2 * n + 1) % 8;
    const ld c8 = std::cos(ld_pi * j / 4.0L);
    const ld s8 = std::sin(ld_pi * j / 4.0L);
    const ld cx = std::cos(static_cast<ld>(x));
    const ld sx = std::sin(static_cast<ld>(x));
    const ld cw = cx * c8 + sx * s8;
    const ld sw = sx * c8 - cx * s8;
    return static_cast<double>(std::sqrt(2.0L / (ld_pi * x)) * (P * cw - Q * sw));
}

double bessel_j_miller(int n, double x)
{
    const int top = std::max(n, static_cast<int>(x));
    int M = top + 20 + static_cast<int>(std::sqrt(60.0 * top));
    M += M % 2;
    const ld two_over_x = 2.0L / x;
    ld jp = 0.0L;
    ld j = 1e-30L;
    ld result = 0.0L;
    KahanSum<ld> norm;
    for (int k = M; k >= 1; --k) {
        ld jm = k * two_over_x * j - jp;
        jp = j;
        j = jm;
        if (std::fabs(j) > 1e250L) {
            j *= 1e-250L;
            jp *= 1e-250L;
            result *= 1e-250L;
            norm.sum *= 1e-250L;
            norm.comp *= 1e-250L;
        }
        if (k - 1 == n)
            result = j;
        if ((k - 1) % 2 == 0 && k - 1 > 0)
            norm += 2.0L * j;
    }
    norm += j;  // j now holds the unnormalised J_0
    return static_cast<double>(result / norm.value());
}

}  // namespace

double bessel_j(int n, double x)
{
    double sign = 1.0;
    if (n < 0) {
        n = -n;
        if (n % 2)
            sign = -sign;
    }
    if (x < 0.0) {
        x = -x;
        if (n % 2)
            sign = -sign;
    }
    if (x == 0.0)
        return n == 0 ? 1.0 : 0.0;
    if (x <= 2.0 * std::sqrt(n + 1.0))
        return sign * bessel_j_series(n, x);
    if (x >= hankel_cutoff(n))
        return sign * bessel_j_hankel(n, x);
    return sign * bessel_j_miller(n, x);
}

double bessel_j_prime(int n, double x)
{
    return 0.5 * (bessel_j(n - 1, x) - bessel_j(n + 1, x));
}

// ---------------------------------------------------------------- Bessel I

BesselRegime bessel_i_regime(int n, double x)
{
    n = std::abs(n);
    BesselRegime r;
    r.series_cutoff = std::max(12.0, 2.0 * n);
    r.hankel_cutoff = hankel_cutoff(n);
    if (x >= r.hankel_cutoff)
        r.kind = BesselKind::LargeArgument;
    else
        r.kind = BesselKind::Series;
    return r;
}

double bessel_i_log_series(int n, double x)
{
    n = std::abs(n);
    const ld h = 0.5L * x;
    const ld q = h * h;
    KahanSum<ld> s;
    ld t = 1.0L;
    ld shift = 0.0L;
    bool past_peak = false;
    for (long r = 0; r < 10000000; ++r) {
        if (r > 0) {
            ld ratio = q / (ld(r) * ld(n + r));
            t *= ratio;
            if (ratio < 1.0L)
                past_peak = true;
        }
        s += t;
        if (s.value() > 1e300L) {
            s.sum *= 1e-300L;
            s.comp *= 1e-300L;
            t *= 1e-300L;
            shift += 300.0L * std::log(10.0L);
        }
        if (past_peak && t < 1e-21L * s.value())
            break;
    }
    ld r = n * std::log(h) - log_gamma_ld(n + 1.0L) + std::log(s.value()) + shift;
    return static_cast<double>(r);
}

double bessel_i_log_hankel(int n, double x)
{
    const ld mu = 4.0L * n * n;
    KahanSum<ld> s;
    s += 1.0L;
    ld term = 1.0L;
    ld last = std::numeric_limits<ld>::infinity();
    for (int k = 1; k < 200; ++k) {
        term *= -(mu - ld(2 * k - 1) * (2 * k - 1)) / (ld(k) * 8.0L * x);
        if (std::fabs(term) > last || term == 0.0L)
            break;
        last = std::fabs(term);
        s += term;
        if (std::fabs(term) < 1e-20L)
            break;
    }
    ld r = ld(x) - 0.5L * std::log(2.0L * ld_pi * x) + std::log(s.value());
    return static_cast<double>(r);
}

LogValue bessel_i_log(int n, double x)
{
    if (!(x > 0.0))
        throw std::domain_error("bessel_i_log: x must be positive");
    n = std::abs(n);
    if (bessel_i_regime(n, x).kind == BesselKind::LargeArgument)
        return {bessel_i_log_hankel(n, x), 1};
    return {bessel_i_log_series(n, x), 1};
}

LogValue bessel_i_prime_log(int n, double x)
{
    n = std::abs(n);
    // I_n' = I_{n+1} + (n/x) I_n, both terms positive
    LogValue a = bessel_i_log(n + 1, x);
    if (n == 0)
        return a;
    LogValue b = bessel_i_log(n, x);
    b.log_magnitude += std::log(n / x);
    return log_add(a, b);
}

double uniform_eta(double z)
{
    const double S = std::sqrt(1.0 + z * z);
    return S + std::log(z / (1.0 + S));
}

double uniform_u1(double p)
{
    return p / 8.0 - 5.0 * p * p * p / 24.0;
}

double uniform_v1(double p)
{
    return -3.0 * p / 8.0 + 7.0 * p * p * p / 24.0;
}

double bessel_i_uniform(int n, double z, bool corrected)
{
    const double p = 1.0 / std::sqrt(1.0 + z * z);
    double r = n * uniform_eta(z) - 0.5 * std::log(2.0 * pi * n) + 0.5 * std::log(p);
    if (corrected)
        r += std::log1p(uniform_u1(p) / n);
    return r;
}

double bessel_i_prime_uniform(int n, double z, bool corrected)
{
    const double p = 1.0 / std::sqrt(1.0 + z * z);
    double r = n * uniform_eta(z) - 0.5 * std::log(2.0 * pi * n) - 0.5 * std::log(p) - std::log(z);
    if (corrected)
        r += std::log1p(uniform_v1(p) / n);
    return r;
}

// ---------------------------------------------------------------- complex J

std::complex<double> bessel_j_log(int n, std::complex<double> z)
{
    using cld = std::complex<ld>;
    std::complex<double> extra = 0.0;
    if (n < 0) {
        n = -n;
        if (n % 2)
            extra = std::complex<double>(0.0, pi);
    }
    const cld w(z.real(), z.imag());
    if (std::abs(z) < hankel_cutoff(n)) {
        const cld h = 0.5L * w;
        const cld q = h * h;
        cld s = 0.0L;
        cld t = 1.0L;
        for (int r = 0; r < 2000; ++r) {
            if (r > 0)
                t *= -q / (ld(r) * ld(n + r));
            s += t;
            if (r > std::abs(h) && std::abs(t) < 1e-21L * std::abs(s))
                break;
        }
        cld lg = ld(n) * std::log(h) - log_gamma_ld(n + 1.0L) + std::log(s);
        return std::complex<double>(double(lg.real()), double(lg.imag())) + extra;
    }
    // Hankel form, written around the e^{-iω} branch that dominates for Im z >= 0
    const ld mu = 4.0L * n * n;
    cld P = 1.0L, Q = 0.0L, term = 1.0L;
    ld last = std::numeric_limits<ld>::infinity();
    for (int k = 1; k < 200; ++k) {
        term *= (mu - ld(2 * k - 1) * (2 * k - 1)) / (ld(k) * 8.0L * w);
        if (std::abs(term) > last)
            break;
        last = std::abs(term);
        switch (k % 4) {
        case 1: Q += term; break;
        case 2: P -= term; break;
        case 3: Q -= term; break;
        default: P += term; break;
        }
        if (last < 1e-20L)
            break;
    }
    const cld I(0.0L, 1.0L);
    const cld omega = w - ld_pi * ld(2 * n + 1) / 4.0L;
    const cld lead = 0.5L * ((P - I * Q) + std::exp(2.0L * I * omega) * (P + I * Q));
    cld lg = 0.5L * std::log(2.0L / (ld_pi * w)) - I * omega + std::log(lead);
    return std::complex<double>(double(lg.real()), double(lg.imag())) + extra;
}

}  // namespace zetacan::special
