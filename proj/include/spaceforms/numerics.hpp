#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaceforms {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// cosh(sqrt(w)) as an entire function of w; branch of the root is immaterial.
inline Complex cosh_sqrt(Complex w) {
    if (std::abs(w) < 1e-8) {
        // 1 + w/2 + w^2/24 + w^3/720
        return 1.0 + w * (0.5 + w * (1.0 / 24.0 + w / 720.0));
    }
    return std::cosh(std::sqrt(w));
}

// sinh(sqrt(w))/sqrt(w), again entire in w. Equals 1 at w = 0.
inline Complex sinhc_sqrt(Complex w) {
    if (std::abs(w) < 1e-8) {
        return 1.0 + w * (1.0 / 6.0 + w * (1.0 / 120.0 + w / 5040.0));
    }
    Complex s = std::sqrt(w);
    return std::sinh(s) / s;
}

// Central difference of a scalar- or vector-valued map.
template <typename F>
auto central_diff(F&& f, double x, double h) -> decltype(f(x)) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Central difference of f: R^m -> T along coordinate direction a.
template <typename F>
auto central_diff_dir(F&& f, const VectorXd& p, int a, double h) -> decltype(f(p)) {
    VectorXd pp = p, pm = p;
    pp[a] += h;
    pm[a] -= h;
    return (f(pp) - f(pm)) / (2.0 * h);
}

// Composite Simpson on [a,b] with n (even) panels.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Adaptive Simpson, absolute tolerance.
namespace detail {
template <typename F>
double adsimp(F& f, double a, double b, double fa, double fm, double fb, double whole,
              double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adsimp(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adsimp(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}
}  // namespace detail

template <typename F>
double integrate_adaptive(F&& f, double a, double b, double tol = 1e-10, int depth = 24) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adsimp(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Gauss-Legendre nodes/weights on [-1,1], computed by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Deterministic RNG helpers used by the sampling suites.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    double uniform(double a, double b) {
        return std::uniform_real_distribution<double>(a, b)(gen_);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
    VectorXd normal_vec(int n) {
        VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }
    Complex cnormal() { return {normal(), normal()}; }
    std::mt19937_64& raw() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace spaceforms
