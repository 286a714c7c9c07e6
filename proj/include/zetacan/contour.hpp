#pragma once

#include "zetacan/numerics.hpp"
#include "zetacan/special.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace zetacan::numerics {

using ComplexLog = std::function<std::complex<double>(std::complex<double>)>;

// the pair of rays |arg(z - c)| = half_angle, truncated at |z - c| = truncation_radius
struct ContourSpec {
    double c = 0.5;
    double half_angle = special::pi / 8.0;
    double truncation_radius = 3000.0;
    int nodes_per_unit = 16;
};

void validate(const ContourSpec& spec);

// log p tabulated on the upper ray with a continuous branch; the lower ray is its conjugate
class RayTable {
public:
    RayTable(const ComplexLog& logp, const ContourSpec& spec);

    /// (1/πi) ∫_{Λ_c} e^{-z^2 t} log p(z) dz / z = Σ E₁(a_j² t) over the enclosed zeros
    double kernel(double t) const;

    /// smallest t for which the truncated ray still resolves e^{-z^2 t} to 1e-18
    double t_min() const { return t_min_; }
    double t_max() const { return t_max_; }
    const ContourSpec& spec() const { return spec_; }

private:
    ContourSpec spec_;
    std::vector<std::complex<double>> z_;
    std::vector<std::complex<double>> w_;  // weight * direction / z * log p
    double t_min_ = 0.0;
    double t_max_ = 0.0;
};

// small-t expansion K(t) ~ α t^{-1/2} + β log t + C + Σ c_j t^{j/2}
struct KernelExpansion {
    double alpha = 0.0;
    double beta = 0.0;
    double constant = 0.0;
    std::vector<double> higher;  // coefficients of t^{1/2}, t, t^{3/2}, t^2
    double residual = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
};

KernelExpansion fit_kernel_expansion(const RayTable& table);

/// ζ(s) = Σ a_j^{-2s} for the zeros of p, s > 1/2, s != 1.
double mellin_contour_zeta(const ComplexLog& logp, const ContourSpec& contour, double s);
double mellin_contour_zeta(const RayTable& table, double s);

struct ContourZeta {
    double zeta0 = 0.0;
    double zeta0_prime = 0.0;
    double residual = 0.0;
};

/// ζ(0) and ζ'(0) from the log t and constant terms of the kernel at small t.
ContourZeta contour_zeta_at_zero(const ComplexLog& logp, const ContourSpec& contour);
ContourZeta contour_zeta_at_zero(const RayTable& table);

/// log of sin(πz)/(πz) on the upper half plane
std::complex<double> log_sine_product(std::complex<double> z);

}  // namespace zetacan::numerics
