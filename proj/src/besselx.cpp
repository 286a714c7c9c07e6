#include "zetacan/besselx.hpp"
#include "zetacan/kahan.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace zetacan::besselx {

using special::bessel_j;
using special::bessel_j_prime;
using special::log_gamma;
using special::LogValue;
using special::pi;

CrossProductSpec canonical(CrossProductSpec spec)
{
    if (spec.m < 0)
        throw std::invalid_argument("CrossProductSpec: m must be non-negative");
    return {std::max(spec.n, spec.m - spec.n), spec.m};
}

bool factorises(CrossProductSpec spec)
{
    const CrossProductSpec c = canonical(spec);
    return c.m == 0 || 2 * c.n == c.m;
}

double cross_L(int n, int m, double x)
{
    return -bessel_j(n, x) * bessel_j(n - m - 1, x) + bessel_j(n + 1, x) * bessel_j(n - m, x);
}

LogValue cross_G_log(int n, int m, double x)
{
    if (!(x > 0.0))
        throw std::domain_error("cross_G_log: x must be positive");
    LogValue a = special::log_mul(special::bessel_i_log(n + 1, x), special::bessel_i_log(n - m, x));
    LogValue b = special::log_mul(special::bessel_i_log(n, x), special::bessel_i_log(n - m - 1, x));
    return special::log_add(a, b);
}

int leading_exponent(CrossProductSpec spec)
{
    const CrossProductSpec c = canonical(spec);
    return c.n >= c.m + 1 ? 2 * c.n - c.m - 1 : c.m + 1;
}

double log_leading_coefficient(CrossProductSpec spec)
{
    const CrossProductSpec c = canonical(spec);
    const int e = leading_exponent(c);
    if (c.n >= c.m + 1)
        return -e * std::log(2.0) - log_gamma(c.n + 1.0) - log_gamma(double(c.n - c.m));
    return std::log(c.m + 2.0) - e * std::log(2.0) - log_gamma(c.n + 2.0) - log_gamma(c.m - c.n + 2.0);
}

namespace {

// coefficients of x^{2r} in I_a(x) I_b(x) / (x/2)^{a+b}, scaled by a! b!
std::vector<double> product_series(int a, int b, int terms)
{
    std::vector<double> out(terms);
    for (int r = 0; r < terms; ++r) {
        KahanSum<double> s;
        for (int k = 0; k <= r; ++k) {
            const double lg = log_gamma(a + 1.0) + log_gamma(b + 1.0) - log_gamma(k + 1.0) -
                              log_gamma(a + k + 1.0) - log_gamma(r - k + 1.0) -
                              log_gamma(b + r - k + 1.0);
            s += std::exp(lg);
        }
        out[r] = s.value() * std::pow(0.25, r);
    }
    return out;
}

}  // namespace

std::vector<double> normalized_taylor(CrossProductSpec spec, int terms)
{
    const CrossProductSpec c = canonical(spec);
    const int e = leading_exponent(c);
    const double log_l = log_leading_coefficient(c);
    std::vector<double> out(terms, 0.0);
    const int pairs[2][2] = {{std::abs(c.n + 1), std::abs(c.n - c.m)},
                             {std::abs(c.n), std::abs(c.n - c.m - 1)}};
    for (const auto& pr : pairs) {
        const int a = pr[0], b = pr[1];
        const int shift = (a + b - e) / 2;
        const double log_lead = -(a + b) * std::log(2.0) - log_gamma(a + 1.0) - log_gamma(b + 1.0);
        const double scale = std::exp(log_lead - log_l);
        const std::vector<double> s = product_series(a, b, terms);
        for (int r = shift; r < terms; ++r)
            out[r] += scale * s[r - shift];
    }
    return out;
}

double taylor_sum_rule(CrossProductSpec spec, int power)
{
    const std::vector<double> c = normalized_taylor(spec, 3);
    if (power == 2)
        return c[1];
    if (power == 4)
        return c[1] * c[1] - 2.0 * c[2];
    throw std::invalid_argument("taylor_sum_rule: power must be 2 or 4");
}

numerics::AsymptoticProfile analytic_profile(CrossProductSpec spec)
{
    const CrossProductSpec c = canonical(spec);
    const int e = leading_exponent(c);
    auto mu = [](int v) { return 4.0 * v * v; };
    const double S = mu(c.n + 1) + mu(c.n - c.m) + mu(c.n) + mu(c.n - c.m - 1) - 4.0;
    numerics::AsymptoticProfile p;
    p.d = -2.0;
    p.a = 0.5 * (e + 1);
    p.b = std::log(pi) + log_leading_coefficient(c);
    p.c1 = S / 16.0;
    p.certified = true;
    return p;
}

// ---------------------------------------------------------------- Bessel zeros

namespace {

struct ZeroTables {
    std::mutex mutex;
    std::vector<std::vector<double>> j;
    std::vector<std::vector<double>> jp;
};

ZeroTables& tables()
{
    static ZeroTables t;
    return t;
}

constexpr double zero_tol = 1e-14;

double root_of(int n, double lo, double hi)
{
    return numerics::brent_root([n](double x) { return bessel_j(n, x); }, lo, hi, zero_tol * hi);
}

double prime_root_of(int n, double lo, double hi)
{
    return numerics::brent_root([n](double x) { return bessel_j_prime(n, x); }, lo, hi,
                                zero_tol * hi);
}

// caller holds the mutex
void extend_j(ZeroTables& t, int n, int k)
{
    if (int(t.j.size()) <= n)
        t.j.resize(n + 1);
    auto& row = t.j[n];
    if (int(row.size()) >= k)
        return;
    if (n > 0)
        extend_j(t, n - 1, k + 1);
    for (int i = int(row.size()) + 1; i <= k; ++i) {
        if (n == 0) {
            const double beta = (i - 0.25) * pi;
            const double guess = beta + 1.0 / (8.0 * beta);
            row.push_back(root_of(0, guess - 0.5, guess + 0.5));
        } else {
            const auto& prev = t.j[n - 1];
            row.push_back(root_of(n, prev[i - 1], prev[i]));
        }
    }
}

void extend_jp(ZeroTables& t, int n, int k)
{
    if (int(t.jp.size()) <= n)
        t.jp.resize(n + 1);
    auto& row = t.jp[n];
    if (int(row.size()) >= k)
        return;
    if (n == 0) {
        extend_j(t, 1, k);
        row.assign(t.j[1].begin(), t.j[1].begin() + k);
        return;
    }
    extend_j(t, n, k);
    const auto& jn = t.j[n];
    for (int i = int(row.size()) + 1; i <= k; ++i) {
        const double lo = i == 1 ? double(n) : jn[i - 2];
        row.push_back(prime_root_of(n, lo, jn[i - 1]));
    }
}

std::vector<double> j_zeros(int n, int k)
{
    ZeroTables& t = tables();
    std::lock_guard<std::mutex> lock(t.mutex);
    extend_j(t, n, k);
    return {t.j[n].begin(), t.j[n].begin() + k};
}

std::vector<double> jp_zeros(int n, int k)
{
    ZeroTables& t = tables();
    std::lock_guard<std::mutex> lock(t.mutex);
    extend_jp(t, n, k);
    return {t.jp[n].begin(), t.jp[n].begin() + k};
}

double L_scale(int n, int m, double x)
{
    return std::fabs(bessel_j(n, x) * bessel_j(n - m - 1, x)) +
           std::fabs(bessel_j(n + 1, x) * bessel_j(n - m, x));
}

// the two factor zero sets of a factorising order
void factor_zeros(CrossProductSpec c, int K, std::vector<double>& first, std::vector<double>& second)
{
    first = j_zeros(c.n, K);
    second = c.m == 0 ? jp_zeros(c.n, K) : j_zeros(c.n + 1, K);
}

std::vector<double> merged_reference(CrossProductSpec c, int K)
{
    std::vector<double> a = j_zeros(c.n, K);
    std::vector<double> b = j_zeros(std::abs(c.n - c.m), K);
    std::vector<double> r;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

}  // namespace

double bessel_zero(int n, int k)
{
    if (n < 0 || k < 1)
        throw std::invalid_argument("bessel_zero: need n >= 0, k >= 1");
    return j_zeros(n, k).back();
}

double bessel_prime_zero(int n, int k)
{
    if (n < 0 || k < 1)
        throw std::invalid_argument("bessel_prime_zero: need n >= 0, k >= 1");
    return jp_zeros(n, k).back();
}

int multiplicity(int n, int m)
{
    const CrossProductSpec c = canonical({n, m});
    if (c.m % 2 == 0 && 2 * c.n == c.m)
        return 1;
    return 2;
}

SpectralSequence zeros(CrossProductSpec spec, int K, const ZeroOptions& opt)
{
    if (K < 1)
        throw std::invalid_argument("zeros: K must be positive");
    const CrossProductSpec c = canonical(spec);
    SpectralSequence seq;
    seq.spec = c;
    const int N = c.n, m = c.m;
    auto L = [N, m](double x) { return cross_L(N, m, x); };

    if (factorises(c)) {
        std::vector<double> a, b;
        factor_zeros(c, K, a, b);
        std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(seq.zeros));
        seq.zeros.resize(K);
    } else {
        const std::vector<double> ref = merged_reference(c, K + 2);
        // first gap holds zero or one root; scan it
        const int scan = 400;
        double xprev = 0.0, fprev = 0.0;
        for (int i = 0; i <= scan; ++i) {
            const double x = ref[0] * (1e-3 + (1.0 - 1e-3) * double(i) / scan);
            const double f = L(x);
            if (f == 0.0 || !std::isfinite(f))
                continue;
            if (fprev != 0.0 && (f > 0.0) != (fprev > 0.0)) {
                seq.zeros.push_back(numerics::brent_root(L, xprev, x, opt.root_tol));
                break;
            }
            xprev = x;
            fprev = f;
        }
        for (std::size_t i = 0; i + 1 < ref.size() && int(seq.zeros.size()) < K; ++i) {
            const double fa = L(ref[i]), fb = L(ref[i + 1]);
            if ((fa > 0.0) == (fb > 0.0))
                throw numerics::NumericalError("zeros: no sign change between consecutive Bessel zeros");
            seq.zeros.push_back(numerics::brent_root(L, ref[i], ref[i + 1], opt.root_tol));
        }
        if (int(seq.zeros.size()) < K)
            throw numerics::NumericalError("zeros: bracket tables exhausted");
        seq.zeros.resize(K);
    }
    const int mult = multiplicity(N, m);
    for (double z : seq.zeros) {
        seq.multiplicities.push_back(mult);
        seq.residuals.push_back(std::fabs(L(z)) / L_scale(N, m, z));
    }
    seq.certified_count = int(seq.zeros.size());
    return seq;
}

int interlacing_violations(const SpectralSequence& seq)
{
    const CrossProductSpec c = canonical(seq.spec);
    const auto& z = seq.zeros;
    int bad = 0;
    if (factorises(c)) {
        // the two factors' zeros must alternate
        auto first_factor = [&](double x) {
            const double f = std::fabs(bessel_j(c.n, x));
            const double g = std::fabs(c.m == 0 ? bessel_j_prime(c.n, x) : bessel_j(c.n + 1, x));
            return f < g;
        };
        for (std::size_t i = 0; i + 1 < z.size(); ++i)
            if (first_factor(z[i]) == first_factor(z[i + 1]))
                ++bad;
        return bad;
    }
    const std::vector<double> ref = merged_reference(c, int(z.size()) + 2);
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        const auto lo = std::upper_bound(ref.begin(), ref.end(), z[i]);
        const auto hi = std::lower_bound(ref.begin(), ref.end(), z[i + 1]);
        if (hi - lo != 1)
            ++bad;
    }
    return bad;
}

double zeros_power_sum(const SpectralSequence& seq, int power)
{
    // zeros alternate between two smooth branches (one per Bessel family), so each
    // branch gets its own tail
    const auto& z = seq.zeros;
    KahanSum<double> s;
    for (double x : z)
        s += std::pow(x, -power);
    for (std::size_t parity = 0; parity < 2; ++parity) {
        std::vector<double> branch;
        for (std::size_t i = parity; i < z.size(); i += 2)
            branch.push_back(z[i]);
        auto term = [&](long k) { return std::pow(branch[k - 1], -power); };
        s += numerics::euler_maclaurin_tail(term, long(branch.size()), 0.5 * power).value;
    }
    return s.value();
}

std::vector<int> admissible_orders(int m, int count)
{
    std::vector<int> out;
    for (int n = 0; n <= m / 2 && int(out.size()) < count; ++n)
        out.push_back(n);
    for (int n = m + 1; int(out.size()) < count; ++n)
        out.push_back(n);
    return out;
}

Spectrum spectrum(int m, int N, int K, const ZeroOptions& opt)
{
    if (m < 0 || N < 1 || K < 1)
        throw std::invalid_argument("spectrum: need m >= 0, N >= 1, K >= 1");
    const std::vector<int> orders = admissible_orders(m, N);
    std::vector<SpectralSequence> seqs(orders.size());
    numerics::parallel_for(int(orders.size()), [&](int i) {
        const CrossProductSpec sp{orders[i], m};
        seqs[i] = zeros(sp, factorises(sp) ? 2 * K : K, opt);
    });
    Spectrum sp;
    sp.m = m;
    sp.harmonic_multiplicity = m + 1;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        const auto& s = seqs[i];
        for (std::size_t k = 0; k < s.zeros.size(); ++k)
            sp.entries.push_back({0.25 * s.zeros[k] * s.zeros[k], s.zeros[k], s.multiplicities[k],
                                  orders[i], int(k) + 1, s.residuals[k]});
    }
    std::stable_sort(sp.entries.begin(), sp.entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue < b.eigenvalue; });
    return sp;
}

void write_csv(std::ostream& os, const Spectrum& sp)
{
    char buf[256];
    os << "m,n,k,lambda,multiplicity,residual\n";
    for (const auto& e : sp.entries) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%.17g,%d,%.3e\n", sp.m, e.order, e.rank, e.lambda,
                      e.multiplicity, e.residual);
        os << buf;
    }
}

// ---------------------------------------------------------------- eigenfunctions

namespace {

// ∫₀¹ x J_ν(λx)² dx
double inner_square(int nu, double lambda)
{
    const double j = bessel_j(nu, lambda);
    const double jp = bessel_j_prime(nu, lambda);
    return 0.5 * (jp * jp + (1.0 - double(nu) * nu / (lambda * lambda)) * j * j);
}

}  // namespace

NormCheck eigen_norm_check(int n, int m, double lambda)
{
    const double jn = bessel_j(n, lambda);
    if (std::fabs(jn) < 1e-13)
        throw std::domain_error("eigen_norm_check: J_n(lambda) vanishes");
    const double h = 1e-3;
    auto L = [n, m](double x) { return cross_L(n, m, x); };
    NormCheck r;
    r.lhs = (-L(lambda + 2 * h) + 8.0 * L(lambda + h) - 8.0 * L(lambda - h) + L(lambda - 2 * h)) / (12.0 * h);
    r.rhs = 2.0 * bessel_j(n - m, lambda) / jn * norm_integral(make_probe(n, m, lambda));
    return r;
}

double EigenfunctionProbe::operator()(double r) const
{
    if (r <= 1.0)
        return bessel_j(n, lambda * r);
    return outer_scale * std::pow(r, m) * bessel_j(n - m, lambda / r);
}

EigenfunctionProbe make_probe(int n, int m, double lambda)
{
    EigenfunctionProbe f;
    f.n = n;
    f.m = m;
    f.lambda = lambda;
    const double jo = bessel_j(n - m, lambda);
    if (jo == 0.0)
        throw std::domain_error("make_probe: J_{n-m}(lambda) vanishes");
    f.outer_scale = bessel_j(n, lambda) / jo;
    return f;
}

double norm_integral(const EigenfunctionProbe& f)
{
    return inner_square(f.n, f.lambda) + f.outer_scale * f.outer_scale * inner_square(f.n - f.m, f.lambda);
}

double norm_integral_quadrature(const EigenfunctionProbe& f, double tol)
{
    auto inner = [&](double r) { return f(r) * f(r) * r; };
    auto outer = [&](double r) { return f(r) * f(r) * r / std::pow(r, 2 * f.m + 4); };
    return numerics::adaptive_quad(inner, 0.0, 1.0, tol) +
           numerics::adaptive_quad(outer, 1.0, numerics::infinity, tol);
}

// ---------------------------------------------------------------- asymptotics

double cross_G_uniform_log(int n, int m, double z, bool corrected)
{
    const double S = std::sqrt(1.0 + z * z);
    const double p = 1.0 / S;
    double r = 2.0 * n * special::uniform_eta(z) + (m - 1) * std::log(z) - std::log(pi * n) -
               m * std::log1p(S);
    if (corrected) {
        const double w = -0.25 * (2.0 * m * m + 2.0 * m + 1.0) * p + p * p * p / 12.0;
        r += std::log1p(w / n);
    }
    return r;
}

std::complex<double> cross_L_log(int n, int m, std::complex<double> z)
{
    using special::bessel_j_log;
    const std::complex<double> ipi(0.0, pi);
    const std::complex<double> a = bessel_j_log(n, z) + bessel_j_log(n - m - 1, z) + ipi;
    const std::complex<double> b = bessel_j_log(n + 1, z) + bessel_j_log(n - m, z);
    if (a.real() >= b.real())
        return a + std::log(1.0 + std::exp(b - a));
    return b + std::log(1.0 + std::exp(a - b));
}

}  // namespace zetacan::besselx
