#include "zetacan/numerics.hpp"
#include "zetacan/kahan.hpp"
#include "zetacan/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <thread>

namespace zetacan::numerics {

double brent_root(const RealFunction& f, double lo, double hi, double tol)
{
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw NumericalError("brent_root: no sign change on bracket");
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * 1e-16 * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0)
            return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                double qq = fa / fc;
                double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            p = std::fabs(p);
            double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

namespace {

constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const RealFunction& f, double a, double b)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double rk = fc * wgk[7];
    double rg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        rk += wgk[j] * (f1 + f2);
        if (j % 2 == 1)
            rg += wg[j / 2] * (f1 + f2);
    }
    return {a, b, rk * h, std::fabs((rk - rg) * h)};
}

}  // namespace

QuadResult adaptive_quad_detail(const RealFunction& f, double a, double b, double tol,
                                int max_intervals)
{
    if (std::isinf(b)) {
        if (b < 0.0)
            throw std::invalid_argument("adaptive_quad: lower-infinite ranges are not supported");
        RealFunction g = [&f, a](double t) {
            if (t >= 1.0)
                return 0.0;
            const double u = 1.0 - t;
            return f(a + t / u) / (u * u);
        };
        return adaptive_quad_detail(g, 0.0, 1.0, tol, max_intervals);
    }
    if (a == b)
        return {};
    std::priority_queue<Segment> heap;
    Segment s0 = gk15(f, a, b);
    heap.push(s0);
    double total = s0.value;
    double err = s0.error;
    int count = 1;
    while (err > tol) {
        if (count >= max_intervals)
            throw NumericalError("adaptive_quad: subdivision limit reached");
        Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        Segment l = gk15(f, s.a, mid);
        Segment r = gk15(f, mid, s.b);
        total += l.value + r.value - s.value;
        err += l.error + r.error - s.error;
        heap.push(l);
        heap.push(r);
        ++count;
        if (std::fabs(s.b - s.a) < 1e-15 * (std::fabs(a) + std::fabs(b)) && err > tol)
            throw NumericalError("adaptive_quad: interval width at machine resolution");
    }
    // re-sum to shed drift from the running updates
    KahanSum<double> v, e;
    while (!heap.empty()) {
        v += heap.top().value;
        e += heap.top().error;
        heap.pop();
    }
    return {v.value(), e.value(), count};
}

double adaptive_quad(const RealFunction& f, double a, double b, double tol)
{
    return adaptive_quad_detail(f, a, b, tol).value;
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& y)
{
    Eigen::VectorXd scale = A.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < scale.size(); ++j)
        if (scale(j) == 0.0)
            scale(j) = 1.0;
    Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
    Eigen::VectorXd c = As.colPivHouseholderQr().solve(y);
    return c.cwiseQuotient(scale);
}

AsymptoticProfile operator+(const AsymptoticProfile& p, const AsymptoticProfile& q)
{
    AsymptoticProfile r;
    r.d = p.d + q.d;
    r.a = p.a + q.a;
    r.b = p.b + q.b;
    r.c1 = p.c1 + q.c1;
    r.fit_residual = p.fit_residual + q.fit_residual;
    r.certified = p.certified && q.certified;
    return r;
}

AsymptoticProfile operator-(const AsymptoticProfile& p)
{
    AsymptoticProfile r = p;
    r.d = -p.d;
    r.a = -p.a;
    r.b = -p.b;
    r.c1 = -p.c1;
    return r;
}

AsymptoticProfile fit_asymptotic_profile(const RealFunction& f, double z_min, double z_max,
                                         const FitOptions& opt)
{
    if (!(z_min > 0.0 && z_max > z_min) || opt.nodes < 4 + opt.inverse_powers)
        throw std::invalid_argument("fit_asymptotic_profile: bad window");
    const int cols = 3 + opt.inverse_powers;
    Eigen::MatrixXd A(opt.nodes, cols);
    Eigen::VectorXd y(opt.nodes);
    const double lr = std::log(z_max / z_min);
    for (int i = 0; i < opt.nodes; ++i) {
        const double z = z_min * std::exp(lr * i / (opt.nodes - 1));
        A(i, 0) = z;
        A(i, 1) = 2.0 * std::log(z);
        A(i, 2) = 1.0;
        double inv = 1.0;
        for (int k = 0; k < opt.inverse_powers; ++k) {
            inv /= z;
            A(i, 3 + k) = inv;
        }
        y(i) = f(z);
    }
    Eigen::VectorXd c = least_squares(A, y);
    AsymptoticProfile p;
    p.d = c(0);
    p.a = c(1);
    p.b = c(2);
    p.c1 = opt.inverse_powers > 0 ? c(3) : 0.0;
    p.fit_residual = (A * c - y).cwiseAbs().maxCoeff();
    p.certified = p.fit_residual < opt.residual_threshold;
    return p;
}

namespace {

double tail_with_degree(const std::function<double(long)>& term, long K, double s, int degree,
                        double& fit_err)
{
    const long k0 = std::max<long>(K / 2, K - 60);
    const long npts = K - k0 + 1;
    Eigen::MatrixXd A(npts, degree + 1);
    Eigen::VectorXd y(npts);
    for (long i = 0; i < npts; ++i) {
        const long k = k0 + i;
        const double u = double(K) / double(k);
        double up = 1.0;
        for (int j = 0; j <= degree; ++j) {
            A(i, j) = up;
            up *= u;
        }
        y(i) = term(k) * std::pow(double(k), 2.0 * s);
    }
    Eigen::VectorXd d = least_squares(A, y);
    fit_err = (A * d - y).cwiseAbs().maxCoeff() * std::pow(double(K), -2.0 * s);
    KahanSum<double> tail;
    double Kp = 1.0;
    for (int j = 0; j <= degree; ++j) {
        tail += d(j) * Kp * special::hurwitz_zeta(2.0 * s + j, double(K + 1));
        Kp *= double(K);
    }
    return tail.value();
}

}  // namespace

TailEstimate euler_maclaurin_tail(const std::function<double(long)>& term, long K, double s)
{
    if (!(s > 0.5))
        throw NumericalError("euler_maclaurin_tail: divergent tail (s <= 1/2)");
    if (K < 8)
        throw std::invalid_argument("euler_maclaurin_tail: K too small");
    const double t1 = term(K / 2);
    const double t2 = term(K);
    if (t1 != 0.0 && t2 != 0.0) {
        const double slope = std::log(std::fabs(t1 / t2)) / std::log(double(K) / double(K / 2));
        if (slope <= 1.0)
            throw NumericalError("euler_maclaurin_tail: term decays too slowly");
    }
    double e1 = 0.0, e2 = 0.0;
    const double hi = tail_with_degree(term, K, s, 5, e1);
    const double lo = tail_with_degree(term, K, s, 4, e2);
    return {hi, std::fabs(hi - lo) + e1 * K};
}

double richardson(const std::vector<double>& h, const std::vector<double>& values)
{
    // Neville interpolation evaluated at h = 0
    std::vector<double> p = values;
    const std::size_t n = p.size();
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i + k < n; ++i)
            p[i] = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
    return p[0];
}

unsigned thread_budget()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ZETACAN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1)
            return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

void parallel_for(int n, const std::function<void(int)>& body)
{
    const unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(std::max(n, 0)));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto run = [&] {
        for (int i = next++; i < n; i = next++) {
            if (failed)
                return;
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back(run);
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace zetacan::numerics
