#include "zetacan/torsion.hpp"
#include "zetacan/special.hpp"
#include "zetacan/zetareg.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace zetacan::torsion {

using numerics::adaptive_quad;
using numerics::infinity;
using special::pi;

namespace {

void check_m(int m)
{
    if (m < 0)
        throw std::invalid_argument("torsion: m must be non-negative");
}

// ∫₀^∞ f(u) du, split at the kink u = 1
double split_quad(const numerics::RealFunction& f, double tol)
{
    return adaptive_quad(f, 0.0, 1.0, tol) + adaptive_quad(f, 1.0, infinity, tol);
}

}  // namespace

// ---------------------------------------------------------------- metrics

double MetricModel::log_weight(double r) const
{
    const double r2 = r * r;
    return kind == MetricKind::Canonical ? -m * std::log(std::max(1.0, r2)) : -m * std::log1p(r2);
}

double MetricModel::volume_density(double r) const
{
    const double r2 = r * r;
    return kind == MetricKind::Canonical ? 1.0 / std::max(1.0, r2 * r2) : 1.0 / ((1.0 + r2) * (1.0 + r2));
}

double RadialMetric::log_weight(double r) const
{
    const MetricModel can{MetricKind::Canonical, 1}, fs{MetricKind::FubiniStudy, 1};
    return (1.0 - t) * can.log_weight(r) + t * fs.log_weight(r);
}

double RadialMetric::curvature_pairing(const numerics::RealFunction& f, double tol) const
{
    double circle = 0.0, smooth = 0.0;
    if (t != 1.0)
        circle = adaptive_quad([&f](double) { return f(1.0); }, 0.0, 2.0 * pi, tol) / (2.0 * pi);
    if (t != 0.0)
        // (i/2π)∂∂̄ log(1 + |z|²) = du/(1 + u)² with u = r²
        smooth = split_quad([&f](double u) { return f(std::sqrt(u)) / ((1.0 + u) * (1.0 + u)); }, tol);
    return (1.0 - t) * circle + t * smooth;
}

RadialMetric canonical_metric()
{
    return {0.0};
}

RadialMetric fubini_study_metric()
{
    return {1.0};
}

// ---------------------------------------------------------------- Bott–Chern forms

BottChernSeries bott_chern_series(const std::vector<double>& series, int k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("bott_chern_series: k_max must be at least 1");
    BottChernSeries s;
    s.coeff.assign(k_max, std::vector<double>(k_max, 0.0));
    for (int k = 1; k <= k_max && k < int(series.size()); ++k)
        for (int i = 0; i < k; ++i)
            s.coeff[i][k - 1 - i] += series[k];
    return s;
}

std::vector<double> chern_character_series(int k_max)
{
    std::vector<double> a(k_max + 1);
    double f = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        a[k] = 1.0 / f;
        f *= k + 1;
    }
    return a;
}

std::vector<double> todd_series(int k_max)
{
    // x/(1 − e^{−x}) = 1 + x/2 + Σ B_{2j} x^{2j}/(2j)!
    static const double even[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
    std::vector<double> a(k_max + 1, 0.0);
    a[0] = 1.0;
    if (k_max >= 1)
        a[1] = 0.5;
    for (int k = 2; k <= k_max; k += 2) {
        if (k / 2 - 1 >= 4)
            throw std::invalid_argument("todd_series: k_max above 9 not tabulated");
        a[k] = even[k / 2 - 1];
    }
    return a;
}

double secondary_degree0(const BottChernSeries& s, int d, const RadialMetric& h1, const RadialMetric& h2, double w,
                         const RadialMetric& h3, double tol)
{
    if (s.coeff.empty())
        return 0.0;
    // −log(h₂/h₁) on O(d)
    auto f = [&](double r) { return -d * (h2.log_weight(r) - h1.log_weight(r)); };
    double total = 0.0;
    if (w != 0.0)
        total += s.coeff[0][0] * w * h3.curvature_pairing(f, tol);
    if (s.coeff.size() > 1) {
        total += s.coeff[1][0] * d * h1.curvature_pairing(f, tol);
        total += s.coeff[0][1] * d * h2.curvature_pairing(f, tol);
    }
    return total;
}

double integral_canonical(double tol)
{
    auto f = [](double theta) {
        const double r2 = std::norm(std::polar(1.0, theta));
        return std::log((1.0 + r2) * (1.0 + r2) / std::max(1.0, r2));
    };
    return adaptive_quad(f, 0.0, 2.0 * pi, tol) / pi;
}

double integral_fubini_study(double tol)
{
    auto f = [](double u) { return std::log((1.0 + u) / std::max(1.0, u)) / ((1.0 + u) * (1.0 + u)); };
    return 4.0 * split_quad(f, tol);
}

// ---------------------------------------------------------------- Gram

double gram_entry(int m, int k, double tol)
{
    check_m(m);
    if (k < 0 || k > m)
        throw std::invalid_argument("gram_entry: k must lie in 0..m");
    return split_quad([m, k](double r) { return std::pow(r, k) / std::pow(std::max(1.0, r), m + 2); }, tol);
}

double gram_entry_closed(int m, int k)
{
    check_m(m);
    if (k < 0 || k > m)
        throw std::invalid_argument("gram_entry_closed: k must lie in 0..m");
    return (m + 2.0) / ((k + 1.0) * (m + 1.0 - k));
}

Eigen::MatrixXd gram_matrix(int m, double tol)
{
    check_m(m);
    Eigen::MatrixXd g(m + 1, m + 1);
    for (int k = 0; k <= m; ++k)
        for (int l = k; l <= m; ++l) {
            const int q = l - k;
            const double angular =
                adaptive_quad([q](double t) { return std::cos(q * t); }, 0.0, 2.0 * pi, tol) / (2.0 * pi);
            // radial part of z^k conj(z^l): r^{k+l}/2 after u = r²
            const double radial =
                q == 0 ? gram_entry(m, k, tol)
                       : split_quad([m, k, l](double r) {
                             return std::pow(r, 0.5 * (k + l)) / std::pow(std::max(1.0, r), m + 2);
                         }, tol);
            g(k, l) = g(l, k) = angular * radial;
        }
    return g;
}

double gram_det(int m, double tol)
{
    return gram_matrix(m, tol).determinant();
}

double gram_det_closed(int m)
{
    check_m(m);
    double det = 1.0;
    for (int k = 0; k <= m; ++k)
        det *= gram_entry_closed(m, k);
    return det;
}

// ---------------------------------------------------------------- anomaly

double bott_chern_ch_deg0(int m, double tol)
{
    check_m(m);
    // ch̃(O(m), h_∞, h_FS) Td(TP¹_FS), Td(TP¹_FS) = 1 + c₁(O(1)_FS)
    const BottChernSeries s = bott_chern_series(chern_character_series(2), 2);
    return secondary_degree0(s, m, canonical_metric(), fubini_study_metric(), 1.0, fubini_study_metric(), tol);
}

double bott_chern_td_deg0(int m, double tol)
{
    check_m(m);
    // Td̃(TP¹ = O(2), h_∞, h_FS) ch(O(m)_∞), ch(O(m)_∞) = 1 + m c₁(O(1)_∞)
    const BottChernSeries s = bott_chern_series(todd_series(2), 2);
    return secondary_degree0(s, 2, canonical_metric(), fubini_study_metric(), m, canonical_metric(), tol);
}

double bott_chern_ch_deg0_closed(int m)
{
    return 0.5 * m * m + (1.0 - std::log(2.0)) * m;
}

double bott_chern_td_deg0_closed(int m)
{
    return 1.0 / 3.0 + m * std::log(2.0);
}

QuillenLogs quillen_logs(int m, double tol)
{
    QuillenLogs q = quillen_logs_closed(m);
    q.canonical = q.fs + bott_chern_ch_deg0(m, tol) + bott_chern_td_deg0(m, tol);
    return q;
}

QuillenLogs quillen_logs_closed(int m)
{
    check_m(m);
    QuillenLogs q;
    q.fs = -(0.5 * m * m + m + 0.5) + 4.0 * special::zeta_prime_minus_one();
    q.canonical = q.fs + (0.5 * m * m + m + 1.0 / 3.0);
    return q;
}

TorsionReport torsion_g(int m, double tol)
{
    check_m(m);
    TorsionReport r;
    r.m = m;
    for (int k = 0; k <= m; ++k)
        r.gram_entries.push_back(gram_entry(m, k, tol));
    r.gram_det = gram_det(m, tol);
    r.bc_ch_deg0 = bott_chern_ch_deg0(m, tol);
    r.bc_td_deg0 = bott_chern_td_deg0(m, tol);
    const QuillenLogs q = quillen_logs_closed(m);
    r.quillen_fs_log = q.fs;
    r.quillen_can_log = q.fs + r.bc_ch_deg0 + r.bc_td_deg0;
    r.Tg = r.quillen_can_log - std::log(r.gram_det);
    r.zeta0_prime = zetareg::zeta_canonical(m).zeta0_prime;
    r.discrepancy = r.Tg - r.zeta0_prime;
    return r;
}

double torsion_closed(int m)
{
    check_m(m);
    return 4.0 * special::zeta_prime_minus_one() - 1.0 / 6.0 - std::log(gram_det_closed(m));
}

void write_csv(std::ostream& os, const std::vector<TorsionReport>& reports)
{
    os << "m,Tg,zeta0_prime,discrepancy\n";
    char buf[128];
    for (const TorsionReport& r : reports) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.3e\n", r.m, r.Tg, r.zeta0_prime, r.discrepancy);
        os << buf;
    }
}

}  // namespace zetacan::torsion
