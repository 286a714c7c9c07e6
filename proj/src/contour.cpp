#include "zetacan/contour.hpp"
#include "zetacan/kahan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zetacan::numerics {

namespace {

constexpr int kernel_basis = 7;

void kernel_basis_row(double t, double* row)
{
    const double r = std::sqrt(t);
    row[0] = 1.0 / r;
    row[1] = std::log(t);
    row[2] = 1.0;
    row[3] = r;
    row[4] = t;
    row[5] = t * r;
    row[6] = t * t;
}

}  // namespace

void validate(const ContourSpec& spec)
{
    if (!(spec.c > 0.0))
        throw std::invalid_argument("ContourSpec: vertex c must be positive");
    if (spec.half_angle != special::pi / 8.0)
        throw std::invalid_argument("ContourSpec: half angle is fixed at pi/8");
    if (!(spec.truncation_radius > 10.0) || spec.nodes_per_unit < 4)
        throw std::invalid_argument("ContourSpec: discretisation too coarse");
}

RayTable::RayTable(const ComplexLog& logp, const ContourSpec& spec) : spec_(spec)
{
    validate(spec);
    Eigen::VectorXd x, w;
    gauss_legendre<double>(spec.nodes_per_unit, x, w);
    const std::complex<double> dir = std::polar(1.0, spec.half_angle);
    // panels shrink towards the vertex, where zeros on the real axis sit close to the ray
    std::vector<std::pair<double, double>> panels;
    for (double r = 0.0; r < spec.truncation_radius;) {
        const double len = std::min({1.0, 0.25 + 0.3 * r, spec.truncation_radius - r});
        panels.emplace_back(r, len);
        r += len;
    }
    z_.reserve(panels.size() * spec.nodes_per_unit);
    w_.reserve(z_.capacity());

    // branch of log p fixed by p(c) > 0, then followed continuously
    const std::complex<double> base = logp(spec.c);
    const double offset = -base.imag();
    double prev = 0.0;
    for (const auto& [r0, len] : panels) {
        for (int j = 0; j < spec.nodes_per_unit; ++j) {
            const double r = r0 + 0.5 * len * (x(j) + 1.0);
            const std::complex<double> z = spec.c + r * dir;
            std::complex<double> lp = logp(z);
            double im = lp.imag() + offset;
            im -= 2.0 * special::pi * std::round((im - prev) / (2.0 * special::pi));
            prev = im;
            lp = {lp.real(), im};
            z_.push_back(z);
            w_.push_back(0.5 * len * w(j) * dir * lp / z);
        }
    }
    const double R = spec.truncation_radius;
    const double re_z2 = spec.c * spec.c + 2.0 * spec.c * R * std::cos(spec.half_angle) +
                         R * R * std::cos(2.0 * spec.half_angle);
    t_min_ = 41.5 / re_z2;
    t_max_ = 40.0 / (spec.c * spec.c);
}

double RayTable::kernel(double t) const
{
    KahanSum<double> acc;
    for (std::size_t j = 0; j < z_.size(); ++j) {
        const std::complex<double> e = std::exp(-z_[j] * z_[j] * t);
        acc += (w_[j] * e).imag();
    }
    return -2.0 * acc.value() / special::pi;
}

KernelExpansion fit_kernel_expansion(const RayTable& table)
{
    const int n = 80;
    KernelExpansion k;
    k.t_lo = table.t_min();
    k.t_hi = 40.0 * table.t_min();
    Eigen::MatrixXd A(n, kernel_basis);
    Eigen::VectorXd y(n);
    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i)
        ts[i] = k.t_lo * std::pow(k.t_hi / k.t_lo, double(i) / (n - 1));
    std::vector<double> ys(n);
    parallel_for(n, [&](int i) { ys[i] = table.kernel(ts[i]); });
    for (int i = 0; i < n; ++i) {
        double row[kernel_basis];
        kernel_basis_row(ts[i], row);
        for (int j = 0; j < kernel_basis; ++j)
            A(i, j) = row[j];
        y(i) = ys[i];
    }
    Eigen::VectorXd c = least_squares(A, y);
    k.alpha = c(0);
    k.beta = c(1);
    k.constant = c(2);
    k.higher = {c(3), c(4), c(5), c(6)};
    k.residual = (A * c - y).cwiseAbs().maxCoeff();
    return k;
}

double mellin_contour_zeta(const RayTable& table, double s)
{
    if (!(s > 0.5) || s == 1.0)
        throw std::invalid_argument("mellin_contour_zeta: requires s > 1/2, s != 1");
    const KernelExpansion k = fit_kernel_expansion(table);
    const double ta = 4.0 * k.t_lo;

    // ∫_0^{ta} t^{s-1} (expansion) dt in closed form
    const double powers[] = {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
    const double coeffs[] = {k.alpha, k.constant, k.higher[0], k.higher[1], k.higher[2], k.higher[3]};
    KahanSum<double> head;
    for (int j = 0; j < 6; ++j)
        head += coeffs[j] * std::pow(ta, s + powers[j]) / (s + powers[j]);
    head += k.beta * std::pow(ta, s) * (std::log(ta) / s - 1.0 / (s * s));

    // ∫_{ta}^{T} in u = log t
    const double tail = adaptive_quad(
        [&](double u) {
            const double t = std::exp(u);
            return std::exp(s * u) * table.kernel(t);
        },
        std::log(ta), std::log(table.t_max()), 1e-13);

    const double scale = s / std::exp(special::log_gamma(s));
    return scale * (head.value() + tail);
}

double mellin_contour_zeta(const ComplexLog& logp, const ContourSpec& contour, double s)
{
    return mellin_contour_zeta(RayTable(logp, contour), s);
}

ContourZeta contour_zeta_at_zero(const RayTable& table)
{
    const KernelExpansion k = fit_kernel_expansion(table);
    ContourZeta r;
    r.zeta0 = -k.beta;
    r.zeta0_prime = k.constant - special::euler_gamma * k.beta;
    r.residual = k.residual;
    return r;
}

ContourZeta contour_zeta_at_zero(const ComplexLog& logp, const ContourSpec& contour)
{
    return contour_zeta_at_zero(RayTable(logp, contour));
}

std::complex<double> log_sine_product(std::complex<double> z)
{
    const std::complex<double> I(0.0, 1.0);
    // sin(πz) = (e^{-iπz}/(2i)) (e^{2iπz} - 1), |e^{2iπz}| < 1 for Im z > 0
    const std::complex<double> q = std::exp(2.0 * I * special::pi * z);
    return I * special::pi * (1.0 - z) + std::log(1.0 - q) - std::log(2.0 * I) - std::log(special::pi * z);
}

}  // namespace zetacan::numerics
