#include "spaceforms/cxmetric.hpp"

#include <cmath>

namespace spaceforms {

namespace {
const Complex I{0.0, 1.0};

MatrixXcd reseed_unitary(int n) {
    // Fixed rotation mixing all axes; applied when a Gram-Schmidt pivot is
    // isotropic for the current seed order.
    MatrixXcd u = MatrixXcd::Identity(n, n);
    for (int k = 0; k + 1 < n; ++k) {
        MatrixXcd r = MatrixXcd::Identity(n, n);
        const double c = std::cos(0.7 + 0.3 * k), s = std::sin(0.7 + 0.3 * k);
        r(k, k) = c;
        r(k + 1, k + 1) = c;
        r(k, k + 1) = -s;
        r(k + 1, k) = s;
        u = r * u;
    }
    return u;
}

Complex ev_covector(const VectorXcd& cov, const VectorXcd& z) {
    Complex s = 0.0;
    for (int a = 0; a < z.size(); ++a) s += cov[a] * z[a];
    return s;
}
}  // namespace

MatrixXcd orthonormal_frame(const ComplexMetric& g, const VectorXd& p, int max_reseed) {
    const int n = g.dim();
    const MatrixXcd gp = g(p);
    MatrixXcd seed = MatrixXcd::Identity(n, n);
    const MatrixXcd u = reseed_unitary(n);
    for (int attempt = 0; attempt <= max_reseed; ++attempt) {
        MatrixXcd f = seed;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            VectorXcd y = f.col(j);
            for (int k = 0; k < j; ++k) {
                const Complex c = (y.transpose() * gp * f.col(k))(0, 0);
                y -= c * f.col(k);
            }
            const Complex q = (y.transpose() * gp * y)(0, 0);
            if (std::abs(q) < 1e-8) {
                ok = false;
                break;
            }
            f.col(j) = y / std::sqrt(q);
        }
        if (ok) return f;
        seed = u * seed;
    }
    throw NumericError("orthonormal_frame: isotropic pivot after max reseeds");
}

ConnectionForms connection_forms(const ComplexMetric& g, const VectorXd& p, double h) {
    const int n = g.dim();
    ConnectionForms out;
    out.frame = orthonormal_frame(g, p);
    const MatrixXcd gp = g(p);

    // Frame-field Jacobians by central differences.
    std::vector<MatrixXcd> dframe(n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h;
        pm[a] -= h;
        dframe[a] = (orthonormal_frame(g, pp) - orthonormal_frame(g, pm)) / (2.0 * h);
    }

    // [X_i, X_j] = dX_j(X_i) - dX_i(X_j).
    auto field_deriv = [&](int col, const VectorXcd& along) -> VectorXcd {
        VectorXcd s = VectorXcd::Zero(n);
        for (int a = 0; a < n; ++a) s += along[a] * dframe[a].col(col);
        return s;
    };
    std::vector<std::vector<VectorXcd>> bracket(n, std::vector<VectorXcd>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bracket[i][j] =
                field_deriv(j, out.frame.col(i)) - field_deriv(i, out.frame.col(j));

    auto cc = [&](int i, int j, int k) -> Complex {
        return (bracket[i][j].transpose() * gp * out.frame.col(k))(0, 0);
    };

    // Koszul with constant frame products: theta^k_j(X_i) = g(nabla_{X_i} X_j, X_k).
    std::vector<std::vector<std::vector<Complex>>> gamma(
        n, std::vector<std::vector<Complex>>(n, std::vector<Complex>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                gamma[k][j][i] = 0.5 * (cc(i, j, k) - cc(j, k, i) + cc(k, i, j));

    // Coordinate covectors: theta^k_j(e_a) = sum_i theta^i(e_a) gamma[k][j][i],
    // with theta^i(e_a) = (g F)_{a,i}.
    const MatrixXcd gf = gp * out.frame;
    out.theta.assign(n, std::vector<VectorXcd>(n, VectorXcd::Zero(n)));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) {
                Complex s = 0.0;
                for (int i = 0; i < n; ++i) s += gf(a, i) * gamma[k][j][i];
                out.theta[k][j][a] = s;
            }
    return out;
}

MatrixXcd sectional_curvatures(const ComplexMetric& g, const VectorXd& p, double h_outer,
                               double h_nested) {
    const int n = g.dim();
    const ConnectionForms cf = connection_forms(g, p, h_nested);

    // d(theta^k_j) coefficients: dcov[a](b) = d/dp_a of theta^k_j(e_b).
    std::vector<ConnectionForms> plus(n), minus(n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h_outer;
        pm[a] -= h_outer;
        plus[a] = connection_forms(g, pp, h_nested);
        minus[a] = connection_forms(g, pm, h_nested);
    }
    auto dtheta = [&](int k, int j, const VectorXcd& X, const VectorXcd& Y) -> Complex {
        Complex s = 0.0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const Complex da =
                    (plus[a].theta[k][j][b] - minus[a].theta[k][j][b]) / (2.0 * h_outer);
                s += da * (X[a] * Y[b] - X[b] * Y[a]);
            }
        return s;
    };
    auto wedge = [&](int k, int j, const VectorXcd& X, const VectorXcd& Y) -> Complex {
        Complex s = 0.0;
        for (int l = 0; l < n; ++l)
            s += ev_covector(cf.theta[k][l], X) * ev_covector(cf.theta[l][j], Y) -
                 ev_covector(cf.theta[k][l], Y) * ev_covector(cf.theta[l][j], X);
        return s;
    };
    // K(Span(X_i, X_j)) = (d theta^i_j + theta^i_l wedge theta^l_j)(X_i, X_j).
    MatrixXcd K = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const VectorXcd Xi = cf.frame.col(i), Xj = cf.frame.col(j);
            K(i, j) = dtheta(i, j, Xi, Xj) + wedge(i, j, Xi, Xj);
        }
    return K;
}

Complex surface_curvature(const ComplexMetric& g, const VectorXd& p, double h_outer,
                          double h_nested) {
    return sectional_curvatures(g, p, h_outer, h_nested)(0, 1);
}

GCResiduals gc_residuals(const ComplexMetric& g, const ShapeField& psi, const VectorXd& p,
                         double tol_selfadjoint) {
    const int n = g.dim();
    const MatrixXcd gp = g(p), pp = psi(p);
    if ((gp * pp - pp.transpose() * gp).norm() > tol_selfadjoint)
        throw NumericError("gc_residuals: shape tensor not g-self-adjoint");

    const double h = 1e-4;
    const ConnectionForms cf = connection_forms(g, p);

    // Psi^k as coordinate covectors: column k of C = Psi^T g F.
    auto cov = [&](const VectorXd& q) -> MatrixXcd {
        return psi(q).transpose() * g(q) * orthonormal_frame(g, q);
    };
    const MatrixXcd c0 = cov(p);
    std::vector<MatrixXcd> dc(n);
    for (int a = 0; a < n; ++a) {
        VectorXd qp = p, qm = p;
        qp[a] += h;
        qm[a] -= h;
        dc[a] = (cov(qp) - cov(qm)) / (2.0 * h);
    }

    double codazzi = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const VectorXcd Xi = cf.frame.col(i), Xj = cf.frame.col(j);
            VectorXcd comp(n);
            for (int k = 0; k < n; ++k) {
                Complex dpsi = 0.0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        dpsi += dc[a](b, k) * (Xi[a] * Xj[b] - Xi[b] * Xj[a]);
                Complex tw = 0.0;
                for (int l = 0; l < n; ++l)
                    tw += ev_covector(cf.theta[k][l], Xi) * ev_covector(c0.col(l), Xj) -
                          ev_covector(cf.theta[k][l], Xj) * ev_covector(c0.col(l), Xi);
                comp[k] = dpsi + tw;
            }
            codazzi = std::max(codazzi, comp.norm());
        }

    GCResiduals out;
    out.codazzi = codazzi;
    out.gauss = 0.0;
    if (n == 2) {
        const Complex K = surface_curvature(g, p);
        out.gauss = std::abs(K + 1.0 - pp.determinant());
    }
    return out;
}

PositivityData positivity_and_rotation(const ComplexMetric& g, const VectorXd& p) {
    if (g.dim() != 2) throw NumericError("positivity: surface case only");
    const MatrixXcd gp = g(p);
    const Complex a = gp(0, 0), b = gp(0, 1), c = gp(1, 1);
    PositivityData out;
    out.positive = false;
    // Isotropic directions [mu : 1]: a mu^2 + 2 b mu + c = 0. A vanishing
    // leading coefficient puts one isotropic line on the real circle.
    if (std::abs(a) < 1e-13) {
        out.mu_upper = out.mu_lower = 0.0;
        return out;
    }
    const Complex disc = std::sqrt(b * b - a * c);
    Complex mu1 = (-b + disc) / a;
    Complex mu2 = (-b - disc) / a;
    if (std::abs(mu1.imag()) < 1e-12 || std::abs(mu2.imag()) < 1e-12 ||
        mu1.imag() * mu2.imag() > 0.0) {
        out.mu_upper = mu1;
        out.mu_lower = mu2;
        return out;
    }
    out.positive = true;
    if (mu1.imag() < 0.0) std::swap(mu1, mu2);
    out.mu_upper = mu1;
    out.mu_lower = mu2;
    // Eigenvalue +i on the upper isotropic line, -i on the lower one; for
    // Riemannian input this is the rotation by +90 degrees.
    MatrixXcd s(2, 2);
    s << mu1, mu2, 1.0, 1.0;
    MatrixXcd d = MatrixXcd::Zero(2, 2);
    d(0, 0) = I;
    d(1, 1) = -I;
    out.J = s * d * s.inverse();
    return out;
}

Complex area_form(const ComplexMetric& g, const VectorXd& p, const VectorXcd& V1,
                  const VectorXcd& V2) {
    const PositivityData pos = positivity_and_rotation(g, p);
    if (!pos.positive) throw NumericError("area_form: metric not positive at sample");
    const MatrixXcd gp = g(p);
    const VectorXcd x1 = orthonormal_frame(g, p).col(0);
    const VectorXcd x2 = pos.J * x1;
    const VectorXcd th1 = gp * x1, th2 = gp * x2;
    return ev_covector(th1, V1) * ev_covector(th2, V2) -
           ev_covector(th1, V2) * ev_covector(th2, V1);
}

// ---------------------------------------------------------------------------

Complex gauss_bonnet(const std::vector<QuadratureChart>& atlas) {
    Complex total = 0.0;
    VectorXcd e0 = VectorXcd::Zero(2), e1 = VectorXcd::Zero(2);
    e0[0] = 1.0;
    e1[1] = 1.0;
    for (const auto& chart : atlas) {
        const double d1 = (chart.hi1 - chart.lo1) / chart.n1;
        for (int j = 0; j < chart.n1; ++j) {
            const double c1 = chart.lo1 + (j + 0.5) * d1;
            const double hi0 = chart.hi0_of_1 ? chart.hi0_of_1(c1) : chart.hi0;
            const double d0 = (hi0 - chart.lo0) / chart.n0;
            for (int i = 0; i < chart.n0; ++i) {
                const double c0 = chart.lo0 + (i + 0.5) * d0;
                VectorXd p(2);
                double weight = d0 * d1;
                if (chart.layout == QuadratureChart::Layout::PolarOverlay) {
                    p << c0 * std::cos(c1), c0 * std::sin(c1);
                    weight *= c0;
                } else {
                    p << c0, c1;
                }
                const Complex K = surface_curvature(chart.metric, p);
                const Complex da = area_form(chart.metric, p, e0, e1);
                total += K * da * weight;
            }
        }
    }
    return total;
}

std::vector<QuadratureChart> atlas_neg_sphere(int n_angular, int n_radial) {
    // Two stereographic charts, each a closed unit disk, transition w = 1/z;
    // the coefficient -4/(1+|.|^2)^2 has the same form in both.
    auto metric = [](const VectorXd& p) -> MatrixXcd {
        const double w = -4.0 / std::pow(1.0 + p.squaredNorm(), 2);
        return w * MatrixXcd::Identity(2, 2);
    };
    QuadratureChart disk;
    disk.metric = ComplexMetric(2, metric);
    disk.layout = QuadratureChart::Layout::PolarOverlay;
    disk.lo0 = 0.0;
    disk.hi0 = 1.0;
    disk.lo1 = 0.0;
    disk.hi1 = 2.0 * M_PI;
    disk.n0 = n_radial;
    disk.n1 = n_angular;
    return {disk, disk};
}

double genus2_octagon_radius(double phi) {
    // Regular octagon with interior angles pi/4: apothem cosh(a) = cot(pi/8).
    static const double a = std::acosh(1.0 / std::tan(M_PI / 8.0));
    const double fold = std::abs(std::remainder(phi, M_PI / 4.0));  // [0, pi/8]
    return std::atanh(std::tanh(a) / std::cos(fold));
}

std::vector<QuadratureChart> atlas_genus2(int n_angular, int n_radial) {
    const double rho0 = 0.5;  // chart seam in hyperbolic distance from the center

    QuadratureChart inner;
    inner.metric = ComplexMetric(2, [](const VectorXd& p) -> MatrixXcd {
        return poincare_disk_metric(p).cast<Complex>();
    });
    inner.layout = QuadratureChart::Layout::PolarOverlay;
    inner.lo0 = 0.0;
    inner.hi0 = std::tanh(rho0 / 2.0);  // Poincare radius of the seam
    inner.lo1 = 0.0;
    inner.hi1 = 2.0 * M_PI;
    inner.n0 = std::max(8, n_radial / 4);
    inner.n1 = std::max(16, n_angular / 4);

    QuadratureChart outer;
    outer.metric = ComplexMetric(2, [](const VectorXd& p) -> MatrixXcd {
        MatrixXcd g = MatrixXcd::Identity(2, 2);
        g(1, 1) = std::pow(std::sinh(p[0]), 2);
        return g;
    });
    outer.layout = QuadratureChart::Layout::Rect;  // chart coordinates (rho, phi)
    outer.lo0 = rho0;
    outer.hi0 = 0.0;  // replaced per column
    outer.hi0_of_1 = genus2_octagon_radius;
    outer.lo1 = 0.0;
    outer.hi1 = 2.0 * M_PI;
    outer.n0 = n_radial;
    outer.n1 = n_angular;
    return {inner, outer};
}

std::vector<QuadratureChart> conformal_rescale(
    const std::vector<QuadratureChart>& atlas,
    const std::function<Complex(const VectorXd&)>& factor) {
    std::vector<QuadratureChart> out = atlas;
    for (auto& chart : out) {
        ComplexMetric base = chart.metric;
        chart.metric = ComplexMetric(2, [base, factor](const VectorXd& p) -> MatrixXcd {
            return factor(p) * base(p);
        });
    }
    return out;
}

ComplexMetric metric_from_pair(const std::function<Complex(const VectorXd&)>& f1,
                               const std::function<Complex(const VectorXd&)>& f2,
                               double h) {
    auto metric = [f1, f2, h](const VectorXd& p) -> MatrixXcd {
        const int n = static_cast<int>(p.size());
        VectorXcd d1(n), d2(n);
        for (int a = 0; a < n; ++a) {
            d1[a] = central_diff_dir(f1, p, a, h);
            d2[a] = central_diff_dir(f2, p, a, h);
        }
        const Complex gap = f1(p) - f2(p);
        if (std::abs(gap) < 1e-12) throw NumericError("metric_from_pair: f1 = f2");
        MatrixXcd g(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                g(a, b) = -4.0 / (gap * gap) * 0.5 * (d1[a] * d2[b] + d2[a] * d1[b]);
        return g;
    };
    return ComplexMetric(2, metric);
}

MatrixXd complex_structure_of(const MatrixXd& h) {
    const double det = h.determinant();
    if (det <= 0.0) throw NumericError("complex_structure_of: not Riemannian");
    MatrixXd j(2, 2);
    j << -h(0, 1), -h(1, 1), h(0, 0), h(0, 1);
    return j / std::sqrt(det);
}

ComplexMetric landslide_family(const RealMetricFn& h, const RealTensorFn& b, Complex z,
                               const VectorXd& probe, double codazzi_tol) {
    {
        const MatrixXd hp = h(probe), bp = b(probe);
        if ((hp * bp - bp.transpose() * hp).norm() > 1e-8)
            throw NumericError("landslide_family: b not h-self-adjoint");
        if (std::abs(bp.determinant() - 1.0) > 1e-8)
            throw NumericError("landslide_family: det b != 1");
        ComplexMetric hc(2,
                         [h](const VectorXd& q) -> MatrixXcd { return h(q).cast<Complex>(); });
        ShapeField bc = [b](const VectorXd& q) -> MatrixXcd { return b(q).cast<Complex>(); };
        const GCResiduals r = gc_residuals(hc, bc, probe);
        if (r.codazzi > codazzi_tol)
            throw NumericError("landslide_family: b fails the Codazzi check");
    }
    auto metric = [h, b, z](const VectorXd& p) -> MatrixXcd {
        const MatrixXd hp = h(p), bp = b(p);
        const MatrixXd jb = complex_structure_of(hp) * bp;
        const MatrixXcd beta = std::cos(z) * MatrixXcd::Identity(2, 2) -
                               std::sin(z) * jb.cast<Complex>();
        return beta.transpose() * hp.cast<Complex>() * beta;
    };
    return ComplexMetric(2, metric);
}

MatrixXd fermi_metric(const VectorXd& p) {
    MatrixXd h = MatrixXd::Identity(2, 2);
    h(1, 1) = std::pow(std::cosh(p[0]), 2);
    return h;
}

MatrixXd fermi_regular_tensor(const VectorXd& p) {
    const double m = std::cosh(p[0]) / std::sqrt(1.0 + std::pow(std::cosh(p[0]), 2));
    MatrixXd b = MatrixXd::Zero(2, 2);
    b(0, 0) = m;
    b(1, 1) = 1.0 / m;
    return b;
}

MatrixXd poincare_disk_metric(const VectorXd& p) {
    const double w = 4.0 / std::pow(1.0 - p.squaredNorm(), 2);
    return w * MatrixXd::Identity(2, 2);
}

}  // namespace spaceforms
