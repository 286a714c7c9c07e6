#pragma once

#include <Eigen/Dense>

#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace zetacan::numerics {

using RealFunction = std::function<double(double)>;

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brent's method on a sign-changing bracket; throws NumericalError without one.
double brent_root(const RealFunction& f, double lo, double hi, double tol);

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

/// Adaptive Gauss–Kronrod (7/15). b may be +infinity.
QuadResult adaptive_quad_detail(const RealFunction& f, double a, double b, double tol,
                                int max_intervals = 4000);
double adaptive_quad(const RealFunction& f, double a, double b, double tol);

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Gauss–Legendre rule on [-1, 1] via the Golub–Welsch eigenproblem.
template <typename Scalar>
void gauss_legendre(int n, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& nodes,
                    Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& weights)
{
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat J = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        Scalar b = Scalar(i) / std::sqrt(Scalar(4 * i * i - 1));
        J(i, i - 1) = b;
        J(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    nodes = es.eigenvalues();
    weights = Scalar(2) * es.eigenvectors().row(0).transpose().array().square();
}

struct AsymptoticProfile {
    double d = 0.0;   // coefficient of z
    double a = 0.0;   // coefficient of log z^2
    double b = 0.0;   // constant
    double c1 = 0.0;  // coefficient of 1/z
    double fit_residual = 0.0;
    bool certified = false;
};

AsymptoticProfile operator+(const AsymptoticProfile& p, const AsymptoticProfile& q);
AsymptoticProfile operator-(const AsymptoticProfile& p);

struct FitOptions {
    int nodes = 200;
    double residual_threshold = 1e-8;
    int inverse_powers = 2;  // basis carries 1/z .. 1/z^k
};

/// Least-squares fit of f(z) on log-spaced nodes in [z_min, z_max] against
/// {z, log z^2, 1, 1/z, ..., 1/z^k}. fit_residual is the max abs residual.
AsymptoticProfile fit_asymptotic_profile(const RealFunction& f, double z_min, double z_max,
                                         const FitOptions& opt = {});

struct TailEstimate {
    double value = 0.0;
    double error = 0.0;
};

/// Σ_{k>K} term(k) for term(k) ~ k^{-2s}(c0 + c1/k + ...), s > 1/2.
TailEstimate euler_maclaurin_tail(const std::function<double(long)>& term, long K, double s);

/// Richardson extrapolation of S(h) sampled at h_i -> 0, assuming S(h) = S0 + c1 h + c2 h^2 + ...
double richardson(const std::vector<double>& h, const std::vector<double>& values);

/// Least-squares solve with column scaling; shared by the fitting routines.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& y);

/// Number of worker threads: ZETACAN_THREADS if set, else hardware concurrency.
unsigned thread_budget();

/// Runs body(i) for i in [0, n) on up to thread_budget() threads.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace zetacan::numerics
