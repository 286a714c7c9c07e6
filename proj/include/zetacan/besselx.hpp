#pragma once

#include "zetacan/numerics.hpp"
#include "zetacan/special.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace zetacan::besselx {

// (n, m) and (m − n, m) describe the same function
struct CrossProductSpec {
    int n = 0;
    int m = 0;
};

/// Representative with n ≥ m − n.
CrossProductSpec canonical(CrossProductSpec spec);

/// True when J_n and J_{n−m} coincide up to sign (m = 0, or n = m/2), so L_n factorises.
bool factorises(CrossProductSpec spec);

struct SpectralSequence {
    CrossProductSpec spec;
    std::vector<double> zeros;
    std::vector<int> multiplicities;
    std::vector<double> residuals;
    int certified_count = 0;
};

struct SpectrumEntry {
    double eigenvalue = 0.0;  // λ²/4
    double lambda = 0.0;
    int multiplicity = 0;
    int order = 0;
    int rank = 0;
    double residual = 0.0;
};

struct Spectrum {
    int m = 0;
    int harmonic_multiplicity = 0;  // eigenvalue 0, kept out of entries
    std::vector<SpectrumEntry> entries;
};

/// L_n(x) = −J_n(x) J_{n−m−1}(x) + J_{n+1}(x) J_{n−m}(x)
double cross_L(int n, int m, double x);

/// G_n(x) = I_{n+1}(x) I_{n−m}(x) + I_n(x) I_{n−m−1}(x), log-scaled; positive for x > 0.
special::LogValue cross_G_log(int n, int m, double x);

/// Leading behaviour G_n(x) ~ l x^e at x → 0.
int leading_exponent(CrossProductSpec spec);
double log_leading_coefficient(CrossProductSpec spec);

/// Taylor coefficients of G_n(x) / (l x^e) in powers of x², starting with 1.
std::vector<double> normalized_taylor(CrossProductSpec spec, int terms);

/// Σ_k λ_k^{-power} from the Taylor coefficients (power 2 or 4).
double taylor_sum_rule(CrossProductSpec spec, int power);

/// −log(G_n(x)/(l x^e)) ~ d x + a log x² + b + c₁/x as x → ∞, exact leading terms.
numerics::AsymptoticProfile analytic_profile(CrossProductSpec spec);

/// k-th positive zero (k ≥ 1) of J_n and of J_n′ (order n ≥ 0), cached.
double bessel_zero(int n, int k);
double bessel_prime_zero(int n, int k);

struct ZeroOptions {
    double root_tol = 1e-12;
};

/// First K positive zeros of L_n.
SpectralSequence zeros(CrossProductSpec spec, int K, const ZeroOptions& opt = {});

/// Multiplicity of the eigenvalues coming from order n.
int multiplicity(int n, int m);

/// Number of interlacing violations among consecutive zeros (0 when the lemma holds).
int interlacing_violations(const SpectralSequence& seq);

/// Σ_k λ_k^{-power} from the computed zeros plus a fitted tail.
double zeros_power_sum(const SpectralSequence& seq, int power);

/// Orders whose zeros enter the spectrum, in order: 0..⌊m/2⌋ then m+1, m+2, ...
std::vector<int> admissible_orders(int m, int count);

/// First N admissible orders, K zeros per Bessel family (2K for factorised orders).
Spectrum spectrum(int m, int N, int K, const ZeroOptions& opt = {});

/// CSV with columns m,n,k,lambda,multiplicity,residual.
void write_csv(std::ostream& os, const Spectrum& spec);

struct NormCheck {
    double lhs = 0.0;  // L_n′(λ) by finite differences
    double rhs = 0.0;  // 2 (J_{n−m}(λ)/J_n(λ)) I_{n,λ}
};

/// Throws std::domain_error when J_n(λ) = 0.
NormCheck eigen_norm_check(int n, int m, double lambda);

// radial profile J_n(λr) for r ≤ 1, continued as c r^m J_{n−m}(λ/r)
struct EigenfunctionProbe {
    int n = 0;
    int m = 0;
    double lambda = 0.0;
    double outer_scale = 1.0;

    double operator()(double r) const;
};

EigenfunctionProbe make_probe(int n, int m, double lambda);

/// ∫₀^∞ f² r dr / max(1, r)^{2m+4}, closed form.
double norm_integral(const EigenfunctionProbe& f);

/// Same integral by adaptive quadrature.
double norm_integral_quadrature(const EigenfunctionProbe& f, double tol = 1e-12);

/// log G_{n+m}(nz) from the large-order expansion, with the 1/n correction when `corrected`.
double cross_G_uniform_log(int n, int m, double z, bool corrected = true);

/// log L_n(z) for complex z in the right half plane; the branch is left to the caller.
std::complex<double> cross_L_log(int n, int m, std::complex<double> z);

}  // namespace zetacan::besselx
