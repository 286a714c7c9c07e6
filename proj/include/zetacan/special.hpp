#pragma once

#include <complex>
#include <numbers>

namespace zetacan::special {

inline constexpr double euler_gamma = std::numbers::egamma;
inline constexpr double pi = std::numbers::pi;

// log magnitude plus sign, for quantities that overflow a double
struct LogValue {
    double log_magnitude = 0.0;
    int sign = 1;

    double value() const;
};

LogValue log_add(LogValue a, LogValue b);
LogValue log_mul(LogValue a, LogValue b);

/// log Γ(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// ψ(x) = Γ'(x)/Γ(x) for x > 0.
double digamma(double x);

/// log Γ(n) − (n log n − n − ½ log n + ½ log 2π + 1/(12n)).
double stirling_remainder_R2(long n);

double riemann_zeta(double s);
double riemann_zeta_prime(double s);

/// Σ_{k>=0} (k + a)^{-s}, s > 1, a > 0.
double hurwitz_zeta(double s, double a);
double hurwitz_zeta_prime(double s, double a);

/// ζ'(−1), evaluated once by Euler–Maclaurin.
double zeta_prime_minus_one();

/// log of the Glaisher–Kinkelin constant, 1/12 − ζ'(−1).
double log_glaisher();

double bessel_j(int n, double x);
double bessel_j_prime(int n, double x);

enum class BesselKind { Series, LargeArgument, UniformLargeOrder };

struct BesselRegime {
    BesselKind kind = BesselKind::Series;
    double series_cutoff = 12.0;  // max(12, 2n)
    double hankel_cutoff = 25.0;  // max(25, n²/2)
    int uniform_order = 30;
};

BesselRegime bessel_i_regime(int n, double x);

/// log I_n(x) for x > 0; I_n is positive there so the sign is always +1.
LogValue bessel_i_log(int n, double x);
LogValue bessel_i_prime_log(int n, double x);

// individual evaluators, exposed for regime-consistency checks
double bessel_i_log_series(int n, double x);
double bessel_i_log_hankel(int n, double x);

// uniform large-order expansion, p = 1/sqrt(1+z^2)
double uniform_eta(double z);
double uniform_u1(double p);
double uniform_v1(double p);

/// log I_n(nz) from the uniform expansion; u₁/n term included when `corrected`.
double bessel_i_uniform(int n, double z, bool corrected = true);
double bessel_i_prime_uniform(int n, double z, bool corrected = true);

/// A logarithm of J_n(z) for complex z with Re z > 0; branch left to the caller.
std::complex<double> bessel_j_log(int n, std::complex<double> z);

}  // namespace zetacan::special
