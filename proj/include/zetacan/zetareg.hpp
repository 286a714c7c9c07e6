#pragma once

#include "zetacan/besselx.hpp"
#include "zetacan/contour.hpp"
#include "zetacan/numerics.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetacan::zetareg {

// ζ(0) and ζ'(0) of one zeta function
struct ZetaPair {
    double value = 0.0;
    double derivative = 0.0;
};

/// (−a, −b) for a profile of −log p; throws NumericalError when the profile is uncertified.
ZetaPair zeta_from_profile(const numerics::AsymptoticProfile& profile);

/// η(s) = Σ log Γ(n)/n^{2s} − ζ(2s+1)/12, s > 1, by direct summation with a Stirling tail.
double eta_function(double s);

/// η(s) through −ζ'(2s−1) − ζ(2s−1) + ½ζ'(2s) + ½log 2π ζ(2s) + Σ R₂(n) n^{−2s}.
double eta_decomposed(double s);

double eta_at_zero();

/// Σ_{n≥1} R₂(n) n^{−2s} by summation.
double stirling_remainder_sum(double s);
double stirling_remainder_sum_closed();

/// γ_k(s) = Σ n^{−2s}(log(1 + k/n) − k/n), s > −1/2, by summation.
double gamma_k(int k, double s);
double gamma_k_at_zero(int k);

// 1/n term c1 p + c3 p³ of a uniform expansion, p = 1/sqrt(1 + z²)
struct UniformCorrection {
    double c1 = 0.0;
    double c3 = 0.0;
};

UniformCorrection g_family_correction(int m);
UniformCorrection dirichlet_correction();
UniformCorrection neumann_correction();

/// F(s) = (s/Γ(s+1)) ζ(2s+1) Σ_a k_a sin(πa)Γ(1−a)Γ(a+s)/π, k_{1/2} = −c1, k_{3/2} = −c3.
double f_component(const UniformCorrection& w, double s);
ZetaPair f_component_at_zero(const UniformCorrection& w);

/// Same values with Γ(a+s) by quadrature and F'(0) by a fourth-order central difference.
ZetaPair f_component_quadrature(const UniformCorrection& w);

struct FamilyComponents {
    int m = 0;
    double A0 = 0.0;
    double A0_prime = 0.0;
    double BP_limit = 0.0;  // (−B_m + P_m)(0)
    double F0 = 0.0;
    double F0_prime = 0.0;
    double eta0 = 0.0;
    std::vector<double> gamma_k_0;  // k = 1..m
};

double A_m(int m, double s);
FamilyComponents family_components(int m);

/// ζ(0), ζ'(0) of the family {G_{n+m} : n ≥ 1}, closed form.
ZetaPair zeta_tail_block(int m);

// a family Σ_n Σ_{λ∈Z(F_n)} λ^{−2s} whose normalised log F(n, nz) has uniform expansion
// α n(S − log(1+S)) + β log(1+S) + δ log S + (c1 p + c3 p³)/n, S = sqrt(1+z²)
struct UniformFamily {
    double alpha = 0.0;
    double beta = 0.0;
    double delta = 0.0;
    UniformCorrection w;
    // lim_{z→∞} [log F(n, nz) − expansion] + expansion at z = 0
    std::function<long double(long)> order_term;
};

UniformFamily g_family(int m);
UniformFamily dirichlet_family();
UniformFamily neumann_family();

/// Σ_n order_term(n) by Richardson extrapolation of partial sums plus the Mellin pieces in closed form.
ZetaPair family_zeta_numeric(const UniformFamily& f);

ZetaPair zeta_tail_numeric(int m);

enum class Route { ClosedForm, ProfileFit, ContourNumeric };

std::string to_string(Route r);
Route route_from_string(const std::string& s);

struct RouteOptions {
    numerics::FitOptions fit{200, 1e-8, 6};
    numerics::ContourSpec contour;
};

/// ζ(0), ζ'(0) of the zeros of L_n for one order, by the chosen route.
ZetaPair low_order_zeta(besselx::CrossProductSpec spec, Route route, const RouteOptions& opt = {});

/// Fit window used for the profile route at this order.
std::pair<double, double> profile_window(besselx::CrossProductSpec spec);

// exact ζ(0) values are rational
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return double(num) / double(den); }
};

Rational operator+(Rational a, Rational b);
Rational operator*(long long k, Rational a);
bool operator==(Rational a, Rational b);
std::string to_string(Rational r);

/// ζ(0) of the closed assembly in rational arithmetic: 2(1/6 + m/2 + m²/4) plus low orders −(e+1)/2.
Rational zeta0_exact(int m);

struct RegularizationReport {
    int m = 0;
    Rational zeta0_exact;  // set on the closed route
    double zeta0 = 0.0;
    double zeta0_prime = 0.0;
    double det_reg = 0.0;
    FamilyComponents components;
    Route route = Route::ClosedForm;
};

/// ζ(0) = −2/3 − m/2 and ζ'(0) = 4ζ'(−1) − 1/6 − log((m+2)^{m+1}/((m+1)!)²).
ZetaPair canonical_closed_form(int m);

RegularizationReport zeta_canonical(int m, Route route = Route::ClosedForm, const RouteOptions& opt = {});

struct DirichletNeumann {
    ZetaPair dirichlet;
    ZetaPair neumann;
};

/// Closed values; ζ_D'(0) = 2ζ'(−1) + ½log π + (1/6)log 2 + 5/12.
DirichletNeumann dirichlet_neumann_block();

/// The uncorrected constant 2ζ'(−1) + ½log 2π + 5/12; it exceeds the closed ζ_D'(0) by (1/3)log 2.
double dirichlet_prime_printed();

/// Family sums numerically, order-0 sequences on the contour.
DirichletNeumann dirichlet_neumann_numeric(const numerics::ContourSpec& contour = {});

}  // namespace zetacan::zetareg
