#include "zetacan/cli.hpp"
#include "zetacan/besselx.hpp"
#include "zetacan/contour.hpp"
#include "zetacan/special.hpp"
#include "zetacan/torsion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace zetacan::cli {

using json = nlohmann::ordered_json;
using special::pi;
using zetareg::Route;

namespace {

const char* schema = "zetacan/1";

std::string format_double(double x)
{
    if (!std::isfinite(x))
        return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// nlohmann prints shortest round-trip floats; fixed 17 digits keeps output byte-stable
void write_json(std::ostream& os, const json& j, int indent = 0)
{
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    switch (j.type()) {
    case json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            break;
        }
        os << "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i) {
            os << inner << json(it.key()).dump() << ": ";
            write_json(os, it.value(), indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "}";
        break;
    }
    case json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            break;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << inner;
            write_json(os, j[i], indent + 2);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << "]";
        break;
    }
    case json::value_t::number_float:
        os << format_double(j.get<double>());
        break;
    default:
        os << j.dump();
    }
}

void emit_json(std::ostream& os, const json& j)
{
    write_json(os, j);
    os << "\n";
}

json pair_json(const zetareg::ZetaPair& p)
{
    return json{{"zeta0", p.value}, {"zeta0_prime", p.derivative}};
}

json components_json(const zetareg::FamilyComponents& c)
{
    return json{{"A0", c.A0},       {"A0_prime", c.A0_prime}, {"BP_limit", c.BP_limit}, {"F0", c.F0},
                {"F0_prime", c.F0_prime}, {"eta0", c.eta0},     {"gamma_k_0", c.gamma_k_0}};
}

json torsion_json(const torsion::TorsionReport& r)
{
    return json{{"schema", schema},
                {"command", "torsion"},
                {"m", r.m},
                {"gram_entries", r.gram_entries},
                {"gram_det", r.gram_det},
                {"bc_ch_deg0", r.bc_ch_deg0},
                {"bc_td_deg0", r.bc_td_deg0},
                {"quillen_fs_log", r.quillen_fs_log},
                {"quillen_can_log", r.quillen_can_log},
                {"Tg", r.Tg},
                {"zeta0_prime", r.zeta0_prime},
                {"discrepancy", r.discrepancy}};
}

}  // namespace

void validate(const RunConfig& c)
{
    if (c.m < 0)
        throw ConfigError("--m must be non-negative");
    if (c.n_max < 1 || c.k_max < 1)
        throw ConfigError("--n-max and --k-max must be at least 1");
    if (!(c.quad_tol > 0.0) || !(c.root_tol > 0.0))
        throw ConfigError("tolerances must be positive");
}

// ---------------------------------------------------------------- commands

int cmd_spectrum(const RunConfig& c, std::ostream& os)
{
    validate(c);
    const besselx::Spectrum s = besselx::spectrum(c.m, c.n_max, c.k_max, {c.root_tol});
    if (c.format == Format::Csv) {
        besselx::write_csv(os, s);
        return exit_ok;
    }
    json entries = json::array();
    for (const besselx::SpectrumEntry& e : s.entries)
        entries.push_back(json{{"n", e.order},
                               {"k", e.rank},
                               {"lambda", e.lambda},
                               {"eigenvalue", e.eigenvalue},
                               {"multiplicity", e.multiplicity},
                               {"residual", e.residual}});
    emit_json(os, json{{"schema", schema},
                       {"command", "spectrum"},
                       {"m", s.m},
                       {"harmonic_multiplicity", s.harmonic_multiplicity},
                       {"entries", entries}});
    return exit_ok;
}

int cmd_zeta(const RunConfig& c, std::ostream& os)
{
    validate(c);
    const zetareg::RegularizationReport closed = zetareg::zeta_canonical(c.m, Route::ClosedForm);
    const zetareg::RegularizationReport profile = zetareg::zeta_canonical(c.m, Route::ProfileFit);
    zetareg::RegularizationReport chosen = c.route == Route::ProfileFit ? profile : closed;
    json routes{{"closed", json{{"zeta0", closed.zeta0}, {"zeta0_prime", closed.zeta0_prime}}},
                {"profile", json{{"zeta0", profile.zeta0}, {"zeta0_prime", profile.zeta0_prime}}}};
    json discrepancies{{"profile", json{{"zeta0", profile.zeta0 - closed.zeta0},
                                        {"zeta0_prime", profile.zeta0_prime - closed.zeta0_prime}}}};
    if (c.route == Route::ContourNumeric) {
        chosen = zetareg::zeta_canonical(c.m, Route::ContourNumeric);
        routes["contour"] = json{{"zeta0", chosen.zeta0}, {"zeta0_prime", chosen.zeta0_prime}};
        discrepancies["contour"] = json{{"zeta0", chosen.zeta0 - closed.zeta0},
                                        {"zeta0_prime", chosen.zeta0_prime - closed.zeta0_prime}};
    }
    const zetareg::ZetaPair reference = zetareg::canonical_closed_form(c.m);

    if (c.format == Format::Csv) {
        os << "m,route,zeta0,zeta0_prime,det_reg,closed_zeta0_prime,discrepancy\n";
        os << c.m << "," << zetareg::to_string(c.route) << "," << format_double(chosen.zeta0) << ","
           << format_double(chosen.zeta0_prime) << "," << format_double(chosen.det_reg) << ","
           << format_double(reference.derivative) << "," << format_double(chosen.zeta0_prime - reference.derivative)
           << "\n";
        return exit_ok;
    }
    json j{{"schema", schema},
           {"command", "zeta"},
           {"m", c.m},
           {"route", zetareg::to_string(c.route)},
           {"zeta0", chosen.zeta0},
           {"zeta0_prime", chosen.zeta0_prime},
           {"det_reg", chosen.det_reg}};
    if (c.route == Route::ClosedForm)
        j["zeta0_exact"] = zetareg::to_string(closed.zeta0_exact);
    j["reference"] = pair_json(reference);
    j["components"] = components_json(closed.components);
    j["tail_block"] = pair_json(zetareg::zeta_tail_block(c.m));
    j["routes"] = routes;
    j["discrepancies"] = discrepancies;
    emit_json(os, j);
    return exit_ok;
}

int cmd_torsion(const RunConfig& c, std::ostream& os)
{
    validate(c);
    const torsion::TorsionReport r = torsion::torsion_g(c.m, c.quad_tol);
    if (c.format == Format::Csv)
        torsion::write_csv(os, {r});
    else
        emit_json(os, torsion_json(r));
    return exit_ok;
}

// ---------------------------------------------------------------- verification

namespace {

using CheckFn = std::function<void(std::vector<Check>&)>;

void add(std::vector<Check>& out, const std::string& suite, const std::string& name, double error, double tol)
{
    out.push_back({suite, name, error, tol, std::isfinite(error) && std::fabs(error) <= tol});
}

void suite_quadrature(std::vector<Check>& out)
{
    const std::string s = "quadrature";
    const double log2 = std::log(2.0);
    add(out, s, "canonical circle integral", torsion::integral_canonical() - 2.0 * std::log(4.0), 1e-10);
    add(out, s, "fubini-study integral", torsion::integral_fubini_study() - 4.0 * (1.0 - log2), 1e-10);
    add(out, s, "gaussian",
        2.0 * numerics::adaptive_quad([](double x) { return std::exp(-x * x); }, 0.0, numerics::infinity, 1e-13) -
            std::sqrt(pi),
        1e-10);
    double worst = 0.0;
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= m; ++k)
            worst = std::max(worst, std::fabs(torsion::gram_entry(m, k) - torsion::gram_entry_closed(m, k)));
    add(out, s, "gram entries m<=5", worst, 1e-10);
    add(out, s, "gram_det(1) = 9/4", torsion::gram_det_closed(1) - 2.25, 0.0);
    add(out, s, "gram_det(3) = 625/576", torsion::gram_det(3) - 625.0 / 576.0, 1e-12);

    const numerics::ContourSpec cs;
    add(out, s, "mellin sine s=2", numerics::mellin_contour_zeta(numerics::log_sine_product, cs, 2.0) - std::pow(pi, 4) / 90.0,
        1e-6);
    add(out, s, "mellin J0 s=2",
        numerics::mellin_contour_zeta([](std::complex<double> z) { return special::bessel_j_log(0, z); }, cs, 2.0) -
            1.0 / 32.0,
        1e-6);
    const numerics::TailEstimate t = numerics::euler_maclaurin_tail([](long k) { return 1.0 / (double(k) * k); }, 100, 1.0);
    double partial = 0.0;
    for (long k = 100; k >= 1; --k)
        partial += 1.0 / (double(k) * k);
    add(out, s, "euler-maclaurin zeta(2)", partial + t.value - pi * pi / 6.0, 1e-10);
}

void suite_special(std::vector<Check>& out)
{
    const std::string s = "special";
    add(out, s, "zeta(0)", special::riemann_zeta(0.0) + 0.5, 1e-12);
    add(out, s, "zeta(-1)", special::riemann_zeta(-1.0) + 1.0 / 12.0, 1e-12);
    add(out, s, "zeta'(0)", special::riemann_zeta_prime(0.0) + 0.5 * std::log(2.0 * pi), 1e-12);
    add(out, s, "zeta'(-1)", special::zeta_prime_minus_one() + 0.16542114370045092, 1e-12);
    add(out, s, "zeta'(-1) general s", special::riemann_zeta_prime(-1.0) - special::zeta_prime_minus_one(), 1e-12);
    add(out, s, "log gamma(1/2)", special::log_gamma(0.5) - 0.5 * std::log(pi), 1e-14);
    add(out, s, "J0 first zero", special::bessel_j(0, 2.404825557695773), 1e-10);
    double rec = 0.0;
    for (int n = 1; n <= 20; ++n)
        for (double x : {0.5, 3.0, 17.0, 60.0}) {
            const double lhs = special::bessel_j_prime(n, x);
            const double scale = std::max({std::fabs(special::bessel_j(n - 1, x)), std::fabs(special::bessel_j(n + 1, x)), 1e-300});
            rec = std::max(rec, std::fabs(lhs - (special::bessel_j(n - 1, x) - n / x * special::bessel_j(n, x))) / scale);
            rec = std::max(rec, std::fabs(lhs - (n / x * special::bessel_j(n, x) - special::bessel_j(n + 1, x))) / scale);
        }
    add(out, s, "J derivative identities", rec, 1e-10);
    double overlap = 0.0;
    for (int n = 0; n <= 4; ++n)
        for (double x : {30.0, 40.0, 60.0})
            overlap = std::max(overlap, std::fabs(special::bessel_i_log_series(n, x) - special::bessel_i_log_hankel(n, x)));
    add(out, s, "I series vs hankel overlap", overlap, 1e-9);
    double r2 = 0.0;
    for (long n = 1; n <= 1000; n *= 3)
        r2 = std::max(r2, std::fabs(special::stirling_remainder_R2(n)) * 360.0 * std::pow(double(n), 3) - 1.0);
    add(out, s, "R2 bound |B4|/(12 n^3)", std::max(0.0, r2), 0.0);
}

void suite_spectral(std::vector<Check>& out)
{
    const std::string s = "spectral";
    const besselx::SpectralSequence q0 = besselx::zeros({0, 0}, 4);
    const double ref[] = {2.404825557695773, 3.831705970207512, 5.520078110286311, 7.015586669815619};
    double e0 = 0.0;
    for (int i = 0; i < 4; ++i)
        e0 = std::max(e0, std::fabs(q0.zeros[i] - ref[i]));
    add(out, s, "zeros (0,0) first four", e0, 1e-12);

    int violations = 0;
    double sum_rule = 0.0;
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 10; ++n) {
            const besselx::SpectralSequence q = besselx::zeros({n, m}, 100);
            if (m <= 3) {
                besselx::SpectralSequence first = q;
                first.zeros.resize(50);
                violations += besselx::interlacing_violations(first);
            }
            sum_rule = std::max(sum_rule, std::fabs(besselx::zeros_power_sum(q, 2) - besselx::taylor_sum_rule({n, m}, 2)));
        }
    add(out, s, "interlacing 50 zeros n<=10 m<=3", violations, 0.0);
    add(out, s, "sum rule 1/lambda^2, 100 zeros", sum_rule, 1e-6);

    double lower = 0.0;
    for (int m = 0; m <= 3; ++m)
        for (int n = 1; n <= 20; ++n)
            lower = std::max(lower, n - besselx::zeros({n + m, m}, 1).zeros[0]);
    add(out, s, "lambda_{n+m,1} >= n", std::max(0.0, lower), 0.0);

    double norm = 0.0;
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 5; ++n) {
            const besselx::SpectralSequence q = besselx::zeros({n, m}, 10);
            for (double l : q.zeros) {
                if (std::fabs(special::bessel_j(q.spec.n, l)) < 1e-12)
                    continue;
                const besselx::NormCheck c = besselx::eigen_norm_check(q.spec.n, m, l);
                norm = std::max(norm, std::fabs(c.lhs - c.rhs) / std::fabs(c.rhs));
            }
        }
    add(out, s, "eigen norm identity", norm, 1e-6);

    double sym = 0.0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 0; n <= m; ++n) {
            const auto a = besselx::zeros({n, m}, 20), b = besselx::zeros({m - n, m}, 20);
            for (int k = 0; k < 20; ++k)
                sym = std::max(sym, std::fabs(a.zeros[k] - b.zeros[k]));
        }
    add(out, s, "symmetry n <-> m-n", sym, 1e-12);

    const besselx::Spectrum sp = besselx::spectrum(0, 5, 10);
    const double jp11 = besselx::bessel_prime_zero(1, 1);
    add(out, s, "m=0 spectrum rows", double(sp.entries.size()) - 100.0, 0.0);
    add(out, s, "m=0 smallest eigenvalue", sp.entries.front().eigenvalue - 0.25 * jp11 * jp11, 1e-12);
}

void suite_zeta(std::vector<Check>& out)
{
    const std::string s = "zeta";
    double closed = 0.0;
    int exact_fail = 0;
    for (int m = 0; m <= 6; ++m) {
        const zetareg::RegularizationReport r = zetareg::zeta_canonical(m);
        const zetareg::ZetaPair t = zetareg::canonical_closed_form(m);
        closed = std::max(closed, std::fabs(r.zeta0_prime - t.derivative));
        if (!(r.zeta0_exact == zetareg::Rational{-(4 + 3LL * m), 6}))
            ++exact_fail;
    }
    add(out, s, "closed zeta0 exact m<=6", exact_fail, 0.0);
    add(out, s, "closed zeta'(0) m<=6", closed, 1e-12);

    double prof = 0.0, tail = 0.0;
    for (int m = 0; m <= 4; ++m) {
        const zetareg::RegularizationReport r = zetareg::zeta_canonical(m, Route::ProfileFit);
        const zetareg::ZetaPair t = zetareg::canonical_closed_form(m);
        prof = std::max({prof, std::fabs(r.zeta0 - t.value), std::fabs(r.zeta0_prime - t.derivative)});
        const zetareg::ZetaPair a = zetareg::zeta_tail_numeric(m), b = zetareg::zeta_tail_block(m);
        tail = std::max({tail, std::fabs(a.value - b.value), std::fabs(a.derivative - b.derivative)});
    }
    add(out, s, "profile route m<=4", prof, 1e-8);
    add(out, s, "tail block numeric m<=4", tail, 1e-9);

    auto sine = [](double x) { return -(std::log(-std::expm1(-2.0 * pi * x)) + pi * x - std::log(2.0 * pi * x)); };
    const zetareg::ZetaPair sp = zetareg::zeta_from_profile(numerics::fit_asymptotic_profile(sine, 5.0, 50.0, {200, 1e-8, 2}));
    const numerics::ContourZeta sc = numerics::contour_zeta_at_zero(numerics::log_sine_product, numerics::ContourSpec{});
    const double l2p = std::log(2.0 * pi);
    add(out, s, "sine profile", std::max(std::fabs(sp.value + 0.5), std::fabs(sp.derivative + l2p)), 1e-8);
    add(out, s, "sine contour", std::max(std::fabs(sc.zeta0 + 0.5), std::fabs(sc.zeta0_prime + l2p)), 1e-8);

    const zetareg::DirichletNeumann dn = zetareg::dirichlet_neumann_block();
    const zetareg::DirichletNeumann nu = zetareg::dirichlet_neumann_numeric();
    add(out, s, "D+N = z0(0)", dn.dirichlet.value + dn.neumann.value + 2.0 / 3.0, 1e-14);
    add(out, s, "D'+N' = z0'(0)",
        dn.dirichlet.derivative + dn.neumann.derivative - zetareg::canonical_closed_form(0).derivative +
            2.0 * std::log(2.0) * (-2.0 / 3.0),
        1e-12);
    add(out, s, "dirichlet numeric",
        std::max(std::fabs(nu.dirichlet.value - dn.dirichlet.value), std::fabs(nu.dirichlet.derivative - dn.dirichlet.derivative)),
        1e-6);
    add(out, s, "neumann numeric",
        std::max(std::fabs(nu.neumann.value - dn.neumann.value), std::fabs(nu.neumann.derivative - dn.neumann.derivative)),
        1e-6);

    add(out, s, "eta(0) decomposition", zetareg::eta_decomposed(0.0) - zetareg::eta_at_zero(), 1e-7);
    add(out, s, "eta(2) two routes", zetareg::eta_decomposed(2.0) - zetareg::eta_function(2.0), 1e-10);
    add(out, s, "sum R2", zetareg::stirling_remainder_sum(0.0) - zetareg::stirling_remainder_sum_closed(), 1e-7);
    const zetareg::ZetaPair fn = zetareg::f_component_quadrature(zetareg::neumann_correction());
    const double g = special::euler_gamma;
    add(out, s, "F_N(0) = 1/24", fn.value - 1.0 / 24.0, 1e-7);
    add(out, s, "F_N'(0)", fn.derivative - (g - std::log(2.0) - 3.5) / 12.0, 1e-7);
    double fm = 0.0, gk = 0.0;
    for (int m = 0; m <= 6; ++m) {
        const zetareg::ZetaPair q = zetareg::f_component_quadrature(zetareg::g_family_correction(m));
        const zetareg::FamilyComponents c = zetareg::family_components(m);
        fm = std::max({fm, std::fabs(q.value - c.F0), std::fabs(q.derivative - c.F0_prime)});
    }
    for (int k = 1; k <= 6; ++k)
        gk = std::max(gk, std::fabs(zetareg::gamma_k(k, 0.0) - zetareg::gamma_k_at_zero(k)));
    add(out, s, "F_m(0), F_m'(0) m<=6", fm, 1e-7);
    add(out, s, "gamma_k(0) k<=6", gk, 1e-7);
}

void suite_torsion(std::vector<Check>& out)
{
    const std::string s = "torsion";
    double pipe = 0.0, closed = 0.0, indep = 0.0, anomaly = 0.0;
    const double q0 = torsion::quillen_logs(0).canonical;
    for (int m = 0; m <= 6; ++m) {
        const torsion::TorsionReport r = torsion::torsion_g(m);
        pipe = std::max(pipe, std::fabs(r.discrepancy));
        closed = std::max(closed, std::fabs(r.Tg - torsion::torsion_closed(m)));
        indep = std::max(indep, std::fabs(torsion::quillen_logs(m).canonical - q0));
        anomaly = std::max(anomaly, std::fabs(r.bc_ch_deg0 + r.bc_td_deg0 - (0.5 * m * m + m + 1.0 / 3.0)));
    }
    add(out, s, "Tg = zeta'(0) m<=6", pipe, 1e-10);
    add(out, s, "Tg closed form m<=6", closed, 1e-10);
    add(out, s, "canonical quillen log m-independent", indep, 1e-8);
    add(out, s, "anomaly sum m^2/2+m+1/3", anomaly, 1e-10);

    const torsion::BottChernSeries ch = torsion::bott_chern_series(torsion::chern_character_series(2), 2);
    const torsion::RadialMetric can = torsion::canonical_metric(), fs = torsion::fubini_study_metric(), mid{0.4};
    add(out, s, "bott-chern identical metrics", torsion::secondary_degree0(ch, 3, mid, mid, 1.0, fs, 1e-12), 1e-14);
    const double direct = torsion::secondary_degree0(ch, 3, can, fs, 0.0, can, 1e-12);
    const double chain = torsion::secondary_degree0(ch, 3, can, mid, 0.0, can, 1e-12) +
                         torsion::secondary_degree0(ch, 3, mid, fs, 0.0, can, 1e-12);
    add(out, s, "bott-chern additivity", direct - chain, 1e-10);
    add(out, s, "bott-chern O(1) vs ch_deg0(1)",
        torsion::secondary_degree0(ch, 1, can, fs, 1.0, fs, 1e-12) - torsion::bott_chern_ch_deg0_closed(1), 1e-10);
}

void suite_asymptotics(std::vector<Check>& out)
{
    const std::string s = "asymptotics";
    // err·n² should settle, not grow, as n doubles
    double growth = 0.0;
    for (int m = 0; m <= 3; ++m)
        for (double z : {0.5, 1.0, 2.0}) {
            double prev = -1.0;
            for (int n : {16, 32, 64}) {
                const double err = std::fabs(besselx::cross_G_uniform_log(n, m, z) -
                                             besselx::cross_G_log(n + m, m, n * z).log_magnitude);
                const double scaled = err * n * n;
                if (prev > 0.0)
                    growth = std::max(growth, scaled / prev);
                prev = scaled;
            }
        }
    add(out, s, "G uniform err*n^2 bounded", std::max(0.0, growth - 1.0), 0.5);

    double ratio = 0.0;
    for (double z : {0.5, 1.0, 2.0}) {
        const double e1 = std::fabs(special::bessel_i_uniform(40, z) - special::bessel_i_log(40, 40 * z).log_magnitude);
        const double e2 = std::fabs(special::bessel_i_uniform(80, z) - special::bessel_i_log(80, 80 * z).log_magnitude);
        ratio = std::max(ratio, e2 / e1);
    }
    add(out, s, "I uniform O(1/n^2) ratio", std::max(0.0, ratio - 0.25), 0.1);

    double prefactor = 0.0;
    for (int m = 0; m <= 3; ++m) {
        const double x = 1e5;
        prefactor = std::max(prefactor, std::fabs(besselx::cross_G_log(m + 2, m, x).log_magnitude - (2.0 * x - std::log(pi * x))));
    }
    add(out, s, "G large-x prefactor", prefactor, 1e-3);
    const double i0 = std::exp(special::bessel_i_log(0, 50.0).log_magnitude - 50.0) * std::sqrt(2.0 * pi * 50.0);
    add(out, s, "I0 large-x at 50", i0 - (1.0 + 1.0 / 400.0), 1e-4);
    add(out, s, "V1 at p=1", zetareg::neumann_correction().c1 + zetareg::neumann_correction().c3 + 1.0 / 12.0, 1e-15);
}

const std::vector<std::pair<std::string, CheckFn>>& registry()
{
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"quadrature", suite_quadrature}, {"special", suite_special}, {"spectral", suite_spectral},
        {"zeta", suite_zeta},             {"torsion", suite_torsion}, {"asymptotics", suite_asymptotics}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry())
            v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<Check> run_suite(const std::string& suite)
{
    std::vector<Check> out;
    bool found = false;
    for (const auto& [name, fn] : registry())
        if (suite == "all" || suite == name) {
            fn(out);
            found = true;
        }
    if (!found)
        throw ConfigError("unknown suite: " + suite);
    return out;
}

int cmd_verify(const RunConfig& c, std::ostream& os)
{
    const std::vector<Check> checks = run_suite(c.suite);
    const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
    char buf[256];
    for (const Check& k : checks) {
        std::snprintf(buf, sizeof buf, "%s  %-12s %-40s error %.3e  tol %.1e\n", k.pass ? "PASS" : "FAIL",
                      k.suite.c_str(), k.name.c_str(), k.error, k.tolerance);
        os << buf;
    }
    const auto passed = std::count_if(checks.begin(), checks.end(), [](const Check& k) { return k.pass; });
    os << passed << "/" << checks.size() << " checks passed\n";

    if (!c.output_path.empty()) {
        std::ofstream file(c.output_path);
        if (!file)
            throw ConfigError("cannot open " + c.output_path);
        if (c.format == Format::Csv) {
            file << "suite,name,error,tolerance,pass\n";
            for (const Check& k : checks)
                file << k.suite << ",\"" << k.name << "\"," << format_double(k.error) << ","
                     << format_double(k.tolerance) << "," << (k.pass ? 1 : 0) << "\n";
        } else {
            json list = json::array();
            for (const Check& k : checks)
                list.push_back(json{{"suite", k.suite}, {"name", k.name}, {"error", k.error},
                                    {"tolerance", k.tolerance}, {"pass", k.pass}});
            write_json(file, json{{"schema", schema}, {"command", "verify"}, {"suite", c.suite}, {"passed", ok},
                                  {"checks", list}});
            file << "\n";
        }
    }
    return ok ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- entry point

int run(int argc, char** argv)
{
    CLI::App app{"Spectral zeta values and analytic torsion on the projective line"};
    app.require_subcommand(1);
    RunConfig c;
    std::string route = "closed", format = "json";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--m", c.m, "Degree of the line bundle O(m)");
        sub->add_option("--out", c.output_path, "Output file (default stdout)");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--quad-tol", c.quad_tol, "Quadrature tolerance");
        sub->add_option("--root-tol", c.root_tol, "Root tolerance");
    };
    CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the Laplacian on O(m)");
    common(spectrum);
    spectrum->add_option("--n-max", c.n_max, "Number of admissible orders");
    spectrum->add_option("--k-max", c.k_max, "Zeros per Bessel family");
    CLI::App* zeta = app.add_subcommand("zeta", "Regularized zeta values at 0");
    common(zeta);
    zeta->add_option("--route", route, "closed, profile or contour")->check(CLI::IsMember({"closed", "profile", "contour"}));
    CLI::App* tors = app.add_subcommand("torsion", "Generalized analytic torsion");
    common(tors);
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--out", c.output_path, "Output file for the report");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--suite", c.suite, "Suite name or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        c.route = zetareg::route_from_string(route);
        c.format = format == "csv" ? Format::Csv : Format::Json;
        if (!verify->parsed())
            validate(c);

        if (verify->parsed())
            return cmd_verify(c, std::cout);

        std::ostringstream report;
        std::ostream& os = c.output_path.empty() ? std::cout : static_cast<std::ostream&>(report);
        int code = exit_ok;
        if (spectrum->parsed())
            code = cmd_spectrum(c, os);
        else if (zeta->parsed())
            code = cmd_zeta(c, os);
        else
            code = cmd_torsion(c, os);

        if (!c.output_path.empty()) {
            std::ofstream file(c.output_path);
            if (!file)
                throw ConfigError("cannot open " + c.output_path);
            file << report.str();
        }
        return code;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
}

}  // namespace zetacan::cli
