#pragma once

#include "zetacan/numerics.hpp"

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

namespace zetacan::torsion {

enum class MetricKind { Canonical, FubiniStudy };

// rotation-invariant metric on O(m) over P¹, in the affine coordinate z, r = |z|
struct MetricModel {
    MetricKind kind = MetricKind::Canonical;
    int m = 0;

    /// log h(1,1)(z): −m log max(1, r²) or −m log(1 + r²)
    double log_weight(double r) const;
    /// density of the volume form against i dz∧dz̄/2π: 1/max(1, r⁴) or 1/(1 + r²)²
    double volume_density(double r) const;
};

// metric on O(1) as a convex blend of the canonical and Fubini–Study ones (t = 0 canonical)
struct RadialMetric {
    double t = 0.0;

    double log_weight(double r) const;
    /// ∫_{P¹} f(|z|) c₁(O(1), h); c₁ is the unit circle measure at t = 0.
    double curvature_pairing(const numerics::RealFunction& f, double tol) const;
};

RadialMetric canonical_metric();
RadialMetric fubini_study_metric();

// φ̃(L, h₁, h₂) = −log(h₂/h₁) Σ coeff[i][j] c₁(L, h₁)^i c₁(L, h₂)^j
struct BottChernSeries {
    std::vector<std::vector<double>> coeff;
};

/// Secondary form of the characteristic series Σ a_k x^k, through c̃₁ᵏ = −log(h₂/h₁) Σ_{i<k} c₁(h₁)^i c₁(h₂)^{k−1−i}.
BottChernSeries bott_chern_series(const std::vector<double>& series, int k_max);

/// Coefficients 1/k! and of x/(1 − e^{−x}) up to x^k_max.
std::vector<double> chern_character_series(int k_max);
std::vector<double> todd_series(int k_max);

/// ∫_{P¹} [φ̃(O(1)^{⊗d}, h₁, h₂) (1 + w c₁(O(1), h₃))]^{(1,1)}; products of degree above (1,1) vanish.
double secondary_degree0(const BottChernSeries& s, int d, const RadialMetric& h1, const RadialMetric& h2, double w,
                         const RadialMetric& h3, double tol);

/// (1/π)∫₀^{2π} log((1 + |e^{iθ}|²)²/max(1, |e^{iθ}|²)) dθ = 2 log 4
double integral_canonical(double tol = 1e-12);
/// 4∫₀^∞ log((1 + u)/max(1, u)) du/(1 + u)² = 4(1 − log 2)
double integral_fubini_study(double tol = 1e-12);

/// ∫₀^∞ r^k / max(1, r)^{m+2} dr by quadrature; closed value (m+2)/((k+1)(m+1−k)).
double gram_entry(int m, int k, double tol = 1e-12);
double gram_entry_closed(int m, int k);

/// Gram matrix of 1, z, ..., z^m; off-diagonal entries carry the angular integral.
Eigen::MatrixXd gram_matrix(int m, double tol = 1e-12);
double gram_det(int m, double tol = 1e-12);
/// (m+2)^{m+1}/((m+1)!)²
double gram_det_closed(int m);

/// Degree-0 parts of the ch and Todd anomaly terms between the Fubini–Study and canonical metrics.
double bott_chern_ch_deg0(int m, double tol = 1e-12);
double bott_chern_td_deg0(int m, double tol = 1e-12);
double bott_chern_ch_deg0_closed(int m);
double bott_chern_td_deg0_closed(int m);

struct QuillenLogs {
    double fs = 0.0;         // log of the Fubini–Study Quillen metric, −(m²/2 + m + 1/2) + 4ζ'(−1)
    double canonical = 0.0;  // fs + (ch + td) anomaly
};

QuillenLogs quillen_logs(int m, double tol = 1e-12);
QuillenLogs quillen_logs_closed(int m);

struct TorsionReport {
    int m = 0;
    std::vector<double> gram_entries;
    double gram_det = 0.0;
    double bc_ch_deg0 = 0.0;
    double bc_td_deg0 = 0.0;
    double quillen_fs_log = 0.0;
    double quillen_can_log = 0.0;
    double Tg = 0.0;
    double zeta0_prime = 0.0;
    double discrepancy = 0.0;  // Tg − ζ'(0)
};

/// T_g = log h_Q(canonical) − log gram_det, all integrals by quadrature.
TorsionReport torsion_g(int m, double tol = 1e-12);

/// 4ζ'(−1) − 1/6 − log((m+2)^{m+1}/((m+1)!)²)
double torsion_closed(int m);

/// CSV with columns m,Tg,zeta0_prime,discrepancy.
void write_csv(std::ostream& os, const std::vector<TorsionReport>& reports);

}  // namespace zetacan::torsion
