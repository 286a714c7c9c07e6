// One line per acceptance criterion; exit status 1 if any criterion fails.

#include "zetacan/besselx.hpp"
#include "zetacan/cli.hpp"
#include "zetacan/contour.hpp"
#include "zetacan/special.hpp"
#include "zetacan/torsion.hpp"
#include "zetacan/zetareg.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <utility>

using namespace zetacan;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    double error = 0.0;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = secs < budget_s;
    const bool ok = o.pass && in_time;
    failures += !ok;
    std::printf("criterion %d %s  %s  max_err=%.3e time=%.2fs/%gs%s%s\n", id, ok ? "PASS" : "FAIL", title.c_str(),
                o.error, secs, budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
}

void track(Outcome& o, double err, double tol)
{
    o.error = std::max(o.error, std::fabs(err));
    if (!(std::fabs(err) <= tol))
        o.pass = false;
}

double closed_prime(int m)
{
    double log_fact = 0.0;
    for (int j = 2; j <= m + 1; ++j)
        log_fact += std::log(double(j));
    return 4 * special::zeta_prime_minus_one() - 1.0 / 6.0 - ((m + 1) * std::log(m + 2.0) - 2 * log_fact);
}

// −2/3 − m/2 = −(4 + 3m)/6 in lowest terms
std::pair<long long, long long> expected_rational(int m)
{
    long long num = -(4 + 3LL * m), den = 6;
    for (long long g : {2, 3})
        while (num % g == 0 && den % g == 0) {
            num /= g;
            den /= g;
        }
    return {num, den};
}

std::string to_text(std::pair<long long, long long> r)
{
    return r.second == 1 ? std::to_string(r.first) : std::to_string(r.first) + "/" + std::to_string(r.second);
}

}  // namespace

int main()
{
    report(1, "closed-form zeta(0) exact and zeta'(0) to 1e-12, m=0..6", 1.0, [] {
        Outcome o;
        for (int m = 0; m <= 6; ++m) {
            cli::RunConfig c;
            c.m = m;
            std::ostringstream os;
            if (cli::cmd_zeta(c, os) != cli::exit_ok)
                o.pass = false;
            const nlohmann::json j = nlohmann::json::parse(os.str());
            const std::pair<long long, long long> q = expected_rational(m);
            if (j["zeta0_exact"].get<std::string>() != to_text(q) ||
                j["zeta0"].get<double>() != double(q.first) / double(q.second)) {
                o.pass = false;
                o.detail += "zeta0 mismatch at m=" + std::to_string(m) + " ";
            }
            track(o, j["zeta0_prime"].get<double>() - closed_prime(m), 1e-12);
        }
        return o;
    });

    report(2, "|T_g - zeta'(0)| <= 1e-10 with quadrature Bott-Chern at 1e-8, m=0..6", 10.0, [] {
        Outcome o;
        for (int m = 0; m <= 6; ++m)
            track(o, torsion::torsion_g(m, 1e-8).discrepancy, 1e-10);
        return o;
    });

    report(3, "gram entries to 1e-10 for m<=5 and gram_det(1) == 9/4", 60.0, [] {
        Outcome o;
        for (int m = 0; m <= 5; ++m)
            for (int k = 0; k <= m; ++k)
                track(o, torsion::gram_entry(m, k) - (m + 2.0) / ((k + 1.0) * (m + 1.0 - k)), 1e-10);
        if (torsion::gram_det_closed(1) != 9.0 / 4.0) {
            o.pass = false;
            o.detail = "gram_det(1) not exactly 9/4";
        }
        return o;
    });

    report(4, "curvature integrals 2log4 and 4(1-log2) to 1e-10", 60.0, [] {
        Outcome o;
        track(o, torsion::integral_canonical() - 2 * std::log(4.0), 1e-10);
        track(o, torsion::integral_fubini_study() - 4 * (1 - std::log(2.0)), 1e-10);
        return o;
    });

    report(5, "interlacing, sum rule 1e-6, lambda_{n+m,1} >= n, eigen-norm 1e-6", 60.0, [] {
        Outcome o;
        int violations = 0;
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 10; ++n)
                violations += besselx::interlacing_violations(besselx::zeros({n, m}, 50));
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 10; ++n) {
                const besselx::SpectralSequence q = besselx::zeros({n, m}, 100);
                track(o, besselx::zeros_power_sum(q, 2) - besselx::taylor_sum_rule({n, m}, 2), 1e-6);
            }
        int below = 0;
        for (int m = 0; m <= 3; ++m)
            for (int n = 1; n <= 20; ++n)
                below += besselx::zeros({n + m, m}, 1).zeros[0] < n;
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 5; ++n) {
                const besselx::SpectralSequence q = besselx::zeros({n, m}, 10);
                for (double l : q.zeros) {
                    if (std::fabs(special::bessel_j(q.spec.n, l)) < 1e-8)
                        continue;
                    const besselx::NormCheck r = besselx::eigen_norm_check(q.spec.n, m, l);
                    track(o, (r.lhs - r.rhs) / r.rhs, 1e-6);
                }
            }
        if (violations || below) {
            o.pass = false;
            o.detail = "interlacing violations " + std::to_string(violations) + ", lower-bound failures " +
                       std::to_string(below);
        }
        return o;
    });

    report(6, "sine sequence by profile and contour, Dirichlet/Neumann blocks", 120.0, [] {
        Outcome o;
        const double pi = special::pi;
        auto sine = [pi](double x) { return -(std::log(-std::expm1(-2 * pi * x)) + pi * x - std::log(2 * pi * x)); };
        const zetareg::ZetaPair p = zetareg::zeta_from_profile(numerics::fit_asymptotic_profile(sine, 30.0, 300.0));
        track(o, p.value + 0.5, 1e-8);
        track(o, p.derivative + std::log(2 * pi), 1e-8);
        const numerics::ContourZeta c = numerics::contour_zeta_at_zero(numerics::log_sine_product, {});
        track(o, c.zeta0 + 0.5, 1e-8);
        track(o, c.zeta0_prime + std::log(2 * pi), 1e-8);

        const zetareg::DirichletNeumann closed = zetareg::dirichlet_neumann_block();
        const double zpm1 = special::zeta_prime_minus_one();
        const double dirichlet_prime_stated = 2 * zpm1 + 0.5 * std::log(2 * pi) + 5.0 / 12.0;
        track(o, closed.dirichlet.value - 1.0 / 6.0, 1e-10);
        track(o, closed.neumann.value + 5.0 / 6.0, 1e-10);
        const double d_closed = closed.dirichlet.derivative - dirichlet_prime_stated;
        track(o, d_closed, 1e-10);

        const zetareg::DirichletNeumann numeric = zetareg::dirichlet_neumann_numeric();
        track(o, numeric.dirichlet.value - 1.0 / 6.0, 1e-6);
        track(o, numeric.neumann.value + 5.0 / 6.0, 1e-6);
        const double d_numeric = numeric.dirichlet.derivative - dirichlet_prime_stated;
        track(o, d_numeric, 1e-6);

        char buf[200];
        std::snprintf(buf, sizeof buf, "zeta_D'(0) minus stated value: closed %.6e, numeric %.6e (log2/3 = %.6e)",
                      d_closed, d_numeric, std::log(2.0) / 3.0);
        o.detail = buf;
        return o;
    });

    report(7, "eta(0), sum R2, F_N(0), F_N'(0), F_m'(0), gamma_k(0) to 1e-7", 60.0, [] {
        Outcome o;
        track(o, zetareg::eta_at_zero() + 0.6729917157, 1e-7);
        track(o, zetareg::eta_decomposed(1.5) - zetareg::eta_function(1.5), 1e-7);
        track(o, zetareg::stirling_remainder_sum(0.0) - zetareg::stirling_remainder_sum_closed(), 1e-7);
        const zetareg::UniformCorrection wn = zetareg::neumann_correction();
        const zetareg::ZetaPair fq = zetareg::f_component_quadrature(wn);
        track(o, fq.value - 1.0 / 24.0, 1e-7);
        track(o, fq.derivative - (special::euler_gamma - std::log(2.0) - 3.5) / 12.0, 1e-7);
        for (int m = 0; m <= 6; ++m) {
            const zetareg::UniformCorrection w = zetareg::g_family_correction(m);
            track(o, zetareg::f_component_quadrature(w).derivative - zetareg::f_component_at_zero(w).derivative, 1e-7);
        }
        for (int k = 1; k <= 6; ++k)
            track(o, zetareg::gamma_k(k, 0.0) - zetareg::gamma_k_at_zero(k), 1e-7);
        return o;
    });

    report(8, "uniform expansion of G_{n+m}(nz): err*n^2 bounded for n in {16,32,64}", 60.0, [] {
        Outcome o;
        double worst_growth = 0.0, worst_scaled = 0.0;
        for (int m = 0; m <= 3; ++m)
            for (double z : {0.5, 1.0, 2.0}) {
                double prev = -1.0;
                for (int n : {16, 32, 64}) {
                    const double err = std::fabs(besselx::cross_G_uniform_log(n, m, z) -
                                                 besselx::cross_G_log(n + m, m, n * z).log_magnitude);
                    const double scaled = err * n * n;
                    worst_scaled = std::max(worst_scaled, scaled);
                    if (prev > 0.0)
                        worst_growth = std::max(worst_growth, scaled / prev);
                    prev = scaled;
                }
            }
        o.error = worst_scaled;
        o.pass = worst_growth <= 1.5;
        char buf[96];
        std::snprintf(buf, sizeof buf, "max growth of err*n^2 per doubling %.3f", worst_growth);
        o.detail = buf;
        return o;
    });

    report(9, "zetacan verify --suite all exits 0", 300.0, [] {
        Outcome o;
        const std::string cmd = std::string(ZETACAN_CLI_PATH) + " verify --suite all > /dev/null";
        const int status = std::system(cmd.c_str());
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        o.pass = code == 0;
        o.detail = "exit code " + std::to_string(code);
        return o;
    });

    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
