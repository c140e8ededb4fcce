#include "spaceforms/core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace spaceforms {

double pseudo_inner(const VectorXd& u, const VectorXd& v, const Signature& sig) {
    if (u.size() != sig.dim() || v.size() != sig.dim())
        throw NumericError("pseudo_inner: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < sig.p; ++i) s += u[i] * v[i];
    for (int i = sig.p; i < sig.dim(); ++i) s -= u[i] * v[i];
    return s;
}

double minkowski_inner(const VectorXd& u, const VectorXd& v) {
    if (u.size() != v.size()) throw NumericError("minkowski_inner: dimension mismatch");
    const int n = static_cast<int>(u.size());
    double s = 0.0;
    for (int i = 0; i + 1 < n; ++i) s += u[i] * v[i];
    s -= u[n - 1] * v[n - 1];
    return s;
}

Complex cbilinear(const VectorXcd& u, const VectorXcd& v) {
    if (u.size() != v.size()) throw NumericError("cbilinear: dimension mismatch");
    Complex s = 0.0;
    for (int i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

bool on_hyperboloid(const VectorXd& x, double tol) {
    return std::abs(minkowski_inner(x, x) + 1.0) < tol && x[x.size() - 1] > 0.0;
}

VectorXd project_hyperboloid(const VectorXd& x) {
    const double q = minkowski_inner(x, x);
    if (q >= 0.0) throw NumericError("project_hyperboloid: not timelike");
    VectorXd y = x / std::sqrt(-q);
    if (y[y.size() - 1] < 0.0) y = -y;
    return y;
}

VectorXd project_unit_tangent(const VectorXd& x, const VectorXd& v) {
    // <x,x> = -1, so v + <v,x> x is Minkowski-orthogonal to x.
    VectorXd w = v + minkowski_inner(v, x) * x;
    const double n2 = minkowski_inner(w, w);
    if (n2 <= 0.0) throw NumericError("project_unit_tangent: tangent not spacelike");
    return w / std::sqrt(n2);
}

VectorXd hyp_exp(const VectorXd& x, const VectorXd& v, double tol) {
    if (std::abs(minkowski_inner(x, v)) > tol)
        throw NumericError("hyp_exp: v not tangent at x");
    const double n2 = minkowski_inner(v, v);
    if (n2 < 0.0) throw NumericError("hyp_exp: tangent not spacelike");
    if (n2 == 0.0) return x;
    const double r = std::sqrt(n2);
    return std::cosh(r) * x + (std::sinh(r) / r) * v;
}

double hyp_distance(const VectorXd& x, const VectorXd& y) {
    const double c = -minkowski_inner(x, y);
    return std::acosh(std::max(1.0, c));
}

VectorXd boundary_endpoint(const VectorXd& x, const VectorXd& v, int sign, double tol) {
    if (std::abs(minkowski_inner(x, v)) > tol || std::abs(minkowski_inner(v, v) - 1.0) > tol)
        throw NumericError("boundary_endpoint: (x,v) not a unit tangent");
    VectorXd u = (sign >= 0) ? VectorXd(x + v) : VectorXd(x - v);
    // The last coordinate of x +/- v is positive: |v_last| < x_last on the
    // upper sheet. Normalize to the slice { last = 1 }.
    return u / u[u.size() - 1];
}

bool on_null_slice(const VectorXd& y, double tol) {
    return std::abs(minkowski_inner(y, y)) < tol &&
           std::abs(y[y.size() - 1] - 1.0) < tol;
}

MatrixXd random_hyp_isometry(int ambient_dim, Rng& rng, double scale) {
    MatrixXd a = MatrixXd::Zero(ambient_dim, ambient_dim);
    for (int i = 0; i < ambient_dim; ++i)
        for (int j = i + 1; j < ambient_dim; ++j) {
            const double t = scale * rng.normal();
            a(i, j) = t;
            a(j, i) = -t;
        }
    MatrixXd g = MatrixXd::Identity(ambient_dim, ambient_dim);
    g(ambient_dim - 1, ambient_dim - 1) = -1.0;
    MatrixXd m = g * a;  // so(n,1)
    return m.exp();
}

VectorXd boundary_action(const MatrixXd& iso, const VectorXd& y) {
    VectorXd u = iso * y;
    return u / u[u.size() - 1];
}

bool on_quadric(const VectorXcd& z, double tol) {
    return std::abs(cbilinear(z, z) + 1.0) < tol;
}

VectorXcd project_quadric(const VectorXcd& z) {
    const Complex q = cbilinear(z, z);
    if (std::abs(q) < 1e-14) throw NumericError("project_quadric: isotropic point");
    return z / std::sqrt(-q);
}

VectorXcd quadric_exp(const VectorXcd& z, const VectorXcd& v, double tol) {
    if (std::abs(cbilinear(z, v)) > tol)
        throw NumericError("quadric_exp: v not tangent at z");
    const Complex w = cbilinear(v, v);
    return cosh_sqrt(w) * z + sinhc_sqrt(w) * v;
}

VectorXcd quadric_exp_branch(const VectorXcd& z, const VectorXcd& v, int branch) {
    const Complex w = cbilinear(v, v);
    if (std::abs(w) == 0.0) return z + v;
    Complex root = std::sqrt(w);
    if (branch < 0) root = -root;
    return std::cosh(root) * z + (std::sinh(root) / root) * v;
}

VectorXcd pseudo_quadric_embed(const VectorXd& x, int m) {
    VectorXcd z(x.size());
    for (int i = 0; i < x.size(); ++i)
        z[i] = (i < m) ? Complex(x[i], 0.0) : Complex(0.0, x[i]);
    return z;
}

Complex x1_chart(const VectorXcd& z) {
    if (z.size() != 2) throw NumericError("x1_chart: expects a point of X_1");
    return z[1] - Complex(0, 1) * z[0];
}

VectorXcd x1_chart_inverse(Complex w) {
    if (std::abs(w) == 0.0) throw NumericError("x1_chart_inverse: w must be nonzero");
    VectorXcd z(2);
    z[0] = Complex(0, 1) * (1.0 + w * w) / (2.0 * w);
    z[1] = (w * w - 1.0) / (2.0 * w);
    return z;
}

Complex x1_metric_coefficient(Complex w) { return 1.0 / (w * w); }

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            const double dp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        const double dp = n * (x * p0 - p1) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

}  // namespace spaceforms
