#include "zetacan/special.hpp"
#include "zetacan/zetareg.hpp"

#include <doctest.h>

#include <cmath>

using namespace zetacan;
using namespace zetacan::zetareg;

namespace {

const double ln2 = std::log(2.0);

double closed_prime(int m)
{
    double log_fact = 0.0;
    for (int j = 2; j <= m + 1; ++j)
        log_fact += std::log(double(j));
    return 4 * special::zeta_prime_minus_one() - 1.0 / 6.0 - ((m + 1) * std::log(m + 2.0) - 2 * log_fact);
}

}  // namespace

TEST_CASE("rational zeta at zero")
{
    CHECK(Rational{1, 2} + Rational{1, 3} == Rational{5, 6});
    CHECK(3 * Rational{1, 6} == Rational{1, 2});
    CHECK(to_string(Rational{-13, 6}) == "-13/6");
    CHECK(to_string(Rational{4, 1}) == "4");
    for (int m = 0; m <= 6; ++m) {
        const Rational z = zeta0_exact(m);
        CHECK(z == Rational{-(4 + 3 * m), 6});
        CHECK(zeta_canonical(m).zeta0 == z.value());
    }
    CHECK(to_string(zeta0_exact(3)) == "-13/6");
    CHECK_THROWS_AS(zeta0_exact(-1), std::invalid_argument);
}

TEST_CASE("closed assembly")
{
    for (int m = 0; m <= 6; ++m) {
        const ZetaPair c = canonical_closed_form(m);
        CHECK(c.value == -2.0 / 3.0 - 0.5 * m);
        CHECK(std::fabs(c.derivative - closed_prime(m)) < 1e-13);
        const RegularizationReport r = zeta_canonical(m);
        CHECK(std::fabs(r.zeta0_prime - closed_prime(m)) < 1e-12);
        CHECK(std::fabs(r.det_reg - std::exp(-r.zeta0_prime)) < 1e-12 * r.det_reg);
        CHECK(r.components.gamma_k_0.size() == std::size_t(m));
    }
    CHECK_THROWS_AS(zeta_canonical(-2), std::invalid_argument);
}

TEST_CASE("eta and Stirling remainder")
{
    CHECK(std::fabs(eta_at_zero() + 0.6729917157) < 1e-9);
    for (double s : {1.2, 1.5, 3.0})
        CHECK(std::fabs(eta_decomposed(s) - eta_function(s)) < 1e-9);
    CHECK(std::fabs(stirling_remainder_sum(0.0) - stirling_remainder_sum_closed()) < 1e-7);
    double direct = 0.0;
    for (long n = 1; n <= 2000; ++n)
        direct += special::stirling_remainder_R2(n) / (double(n) * n);
    CHECK(std::fabs(stirling_remainder_sum(1.0) - direct) < 1e-13);
}

TEST_CASE("gamma_k at zero")
{
    for (int k = 1; k <= 6; ++k)
        CHECK(std::fabs(gamma_k(k, 0.0) - gamma_k_at_zero(k)) < 1e-7);
    // γ_1(1) = Σ (log(1 + 1/n) − 1/n)/n²
    double direct = 0.0;
    for (int n = 1; n <= 200000; ++n)
        direct += (std::log1p(1.0 / n) - 1.0 / n) / (double(n) * n);
    CHECK(std::fabs(gamma_k(1, 1.0) - direct) < 1e-12);
}

TEST_CASE("F components")
{
    const UniformCorrection wn = neumann_correction();
    const ZetaPair fn = f_component_at_zero(wn);
    CHECK(std::fabs(fn.value - 1.0 / 24.0) < 1e-12);
    CHECK(std::fabs(fn.derivative - (special::euler_gamma - ln2 - 3.5) / 12.0) < 1e-12);
    for (const UniformCorrection& w : {g_family_correction(0), g_family_correction(2), g_family_correction(5),
                                       dirichlet_correction(), wn}) {
        const ZetaPair a = f_component_at_zero(w), q = f_component_quadrature(w);
        CHECK(std::fabs(a.value - q.value) < 1e-7);
        CHECK(std::fabs(a.derivative - q.derivative) < 1e-7);
        CHECK(std::fabs(f_component(w, 1e-7) - a.value) < 1e-5);
    }
    CHECK(g_family_correction(1).c1 == -1.25);
}

TEST_CASE("tail block numeric against closed form")
{
    for (int m = 0; m <= 4; ++m) {
        const ZetaPair c = zeta_tail_block(m), n = zeta_tail_numeric(m);
        CHECK(std::fabs(c.value - n.value) < 1e-7);
        CHECK(std::fabs(c.derivative - n.derivative) < 1e-7);
    }
}

TEST_CASE("routes agree")
{
    CHECK(route_from_string("profile") == Route::ProfileFit);
    CHECK(to_string(Route::ContourNumeric) == "contour");
    CHECK_THROWS_AS(route_from_string("spline"), std::invalid_argument);
    for (int m = 0; m <= 3; ++m) {
        const ZetaPair c = canonical_closed_form(m);
        for (Route r : {Route::ProfileFit, Route::ContourNumeric}) {
            const RegularizationReport rep = zeta_canonical(m, r);
            CHECK(std::fabs(rep.zeta0 - c.value) < 1e-6);
            CHECK(std::fabs(rep.zeta0_prime - c.derivative) < 1e-6);
        }
    }
    const std::pair<double, double> w = profile_window({2, 3});
    CHECK(w.second == 10 * w.first);
}

TEST_CASE("profile to zeta pair")
{
    numerics::AsymptoticProfile p;
    p.a = 0.25;
    p.b = -1.5;
    p.certified = true;
    const ZetaPair z = zeta_from_profile(p);
    CHECK(z.value == -0.25);
    CHECK(z.derivative == 1.5);
    p.certified = false;
    CHECK_THROWS_AS(zeta_from_profile(p), numerics::NumericalError);
}

TEST_CASE("Dirichlet and Neumann blocks")
{
    const DirichletNeumann c = dirichlet_neumann_block();
    CHECK(c.dirichlet.value == doctest::Approx(1.0 / 6.0));
    CHECK(c.neumann.value == doctest::Approx(-5.0 / 6.0));
    CHECK(std::fabs(dirichlet_prime_printed() - c.dirichlet.derivative - ln2 / 3.0) < 1e-14);
    const DirichletNeumann n = dirichlet_neumann_numeric();
    CHECK(std::fabs(n.dirichlet.value - c.dirichlet.value) < 1e-6);
    CHECK(std::fabs(n.dirichlet.derivative - c.dirichlet.derivative) < 1e-6);
    CHECK(std::fabs(n.neumann.value - c.neumann.value) < 1e-6);
    CHECK(std::fabs(n.neumann.derivative - c.neumann.derivative) < 1e-6);
}
