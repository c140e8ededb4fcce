#include "spaceforms/hypersurface.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace spaceforms {

bool DomainBox::contains(const VectorXd& p, double margin) const {
    for (int i = 0; i < dim(); ++i) {
        const bool per = i < static_cast<int>(periodic.size()) && periodic[i];
        if (!per && (p[i] < lo[i] + margin || p[i] > hi[i] - margin)) return false;
    }
    return true;
}

MatrixXd Immersion::jacobian(const VectorXd& p, double h) const {
    if (jacobian_) return jacobian_(p);
    const int n = static_cast<int>(p.size());
    const int m = static_cast<int>(eval_(p).size());
    MatrixXd J(m, n);
    for (int a = 0; a < n; ++a) J.col(a) = central_diff_dir(eval_, p, a, h);
    return J;
}

namespace {

// Minkowski Gram matrix diag(1,...,1,-1).
MatrixXd mink_gram(int m) {
    MatrixXd g = MatrixXd::Identity(m, m);
    g(m - 1, m - 1) = -1.0;
    return g;
}

// Unit normal at p: Minkowski-orthogonal to the position and the tangent
// columns, with the sign fixed by det[J | nu | x] > 0 times the orientation.
VectorXd unit_normal(const VectorXd& x, const MatrixXd& J, int orientation) {
    const int m = static_cast<int>(x.size());
    const int n = static_cast<int>(J.cols());
    MatrixXd rows(n + 1, m);
    const MatrixXd g = mink_gram(m);
    rows.row(0) = (g * x).transpose();
    for (int a = 0; a < n; ++a) rows.row(a + 1) = (g * J.col(a)).transpose();
    Eigen::JacobiSVD<MatrixXd> svd(rows, Eigen::ComputeFullV);
    VectorXd nu = svd.matrixV().col(m - 1);
    const double q = minkowski_inner(nu, nu);
    if (q <= 0.0) throw NumericError("unit_normal: normal direction not spacelike");
    nu /= std::sqrt(q);
    MatrixXd full(m, m);
    full.leftCols(n) = J;
    full.col(n) = nu;
    full.col(n + 1) = x;
    if (orientation * full.determinant() < 0.0) nu = -nu;
    return nu;
}

}  // namespace

ShapeData shape_data(const Immersion& imm, const VectorXd& p, double h_normal) {
    ShapeData sd;
    const VectorXd x = imm(p);
    const MatrixXd J = imm.jacobian(p);
    const int n = static_cast<int>(J.cols());
    const MatrixXd g = mink_gram(static_cast<int>(x.size()));
    sd.I = J.transpose() * g * J;
    Eigen::SelfAdjointEigenSolver<MatrixXd> metric_eig(sd.I);
    if (metric_eig.eigenvalues().minCoeff() <= 0.0)
        throw NumericError("shape_data: first fundamental form not positive definite");
    sd.nu = unit_normal(x, J, imm.orientation());

    // d nu by central differences, with the sign glued to nu at the center.
    MatrixXd dN(x.size(), n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h_normal;
        pm[a] -= h_normal;
        VectorXd np = unit_normal(imm(pp), imm.jacobian(pp), imm.orientation());
        VectorXd nm = unit_normal(imm(pm), imm.jacobian(pm), imm.orientation());
        if (np.dot(sd.nu) < 0.0) np = -np;
        if (nm.dot(sd.nu) < 0.0) nm = -nm;
        dN.col(a) = (np - nm) / (2.0 * h_normal);
    }

    // Solve d sigma . B = -d nu column by column in least squares.
    Eigen::JacobiSVD<MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    sd.condition = svd.singularValues()(0) / svd.singularValues()(n - 1);
    if (sd.condition > 1e8) throw NumericError("shape_data: degenerate Jacobian");
    sd.B = svd.solve(-dN);

    // Eigenvalues of B with respect to I: (I B) w = lambda I w, I B symmetric.
    MatrixXd ib = sd.I * sd.B;
    ib = 0.5 * (ib + ib.transpose());
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(ib, sd.I);
    sd.lambdas = es.eigenvalues();
    return sd;
}

UnitTangent gauss_lift(const Immersion& imm, const VectorXd& p) {
    const ShapeData sd = shape_data(imm, p);
    return {imm(p), sd.nu};
}

GeodesicLine gauss_map(const Immersion& imm, const VectorXd& p) {
    return project_to_line(gauss_lift(imm, p));
}

VectorXd hyperbolic_gauss(const Immersion& imm, const VectorXd& p, int sign) {
    const UnitTangent ut = gauss_lift(imm, p);
    return boundary_endpoint(ut.x, ut.v, sign);
}

MatrixXd gauss_fff(const ShapeData& sd) {
    return sd.I - sd.B.transpose() * sd.I * sd.B;
}

MatrixXd gauss_fff(const Immersion& imm, const VectorXd& p) {
    return gauss_fff(shape_data(imm, p));
}

MatrixXd gauss_fff_pullback(const Immersion& imm, const VectorXd& p, double h) {
    const int n = imm.domain().dim();
    const UnitTangent ut = gauss_lift(imm, p);
    std::vector<TangentT1> d(n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h;
        pm[a] -= h;
        const UnitTangent up = gauss_lift(imm, pp), um = gauss_lift(imm, pm);
        d[a] = {(up.x - um.x) / (2.0 * h), (up.v - um.v) / (2.0 * h)};
        d[a] = project_chi_perp(ut, d[a]);
    }
    MatrixXd out(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out(a, b) = sasaki_inner(ut, d[a], d[b]);
    return out;
}

Immersion normal_evolution(const Immersion& imm, double t) {
    auto eval = [imm, t](const VectorXd& p) -> VectorXd {
        const ShapeData sd = shape_data(imm, p);
        return std::cosh(t) * imm(p) + std::sinh(t) * sd.nu;
    };
    auto jac = [imm, t](const VectorXd& p) -> MatrixXd {
        const ShapeData sd = shape_data(imm, p);
        const MatrixXd J = imm.jacobian(p);
        const int n = static_cast<int>(J.cols());
        return J * (std::cosh(t) * MatrixXd::Identity(n, n) - std::sinh(t) * sd.B);
    };
    return Immersion(imm.domain(), eval, jac, imm.orientation());
}

MatrixXd evolved_shape(const MatrixXd& B, double t) {
    const int n = static_cast<int>(B.rows());
    const double th = std::tanh(t);
    const MatrixXd m = MatrixXd::Identity(n, n) - th * B;
    Eigen::FullPivLU<MatrixXd> lu(m);
    if (!lu.isInvertible()) throw NumericError("evolved_shape: id - tanh(t) B singular");
    return lu.solve(B - th * MatrixXd::Identity(n, n));
}

double kappa_logdet(const MatrixXd& B) {
    const int n = static_cast<int>(B.rows());
    const MatrixXd id = MatrixXd::Identity(n, n);
    const double num = (id + B).determinant();
    const double den = (id - B).determinant();
    if (num <= 0.0 || den <= 0.0)
        throw NumericError("kappa: principal curvature outside (-1,1)");
    return std::log(num / den) / (2.0 * n);
}

double kappa_eigen(const VectorXd& lambdas) {
    double s = 0.0;
    for (int i = 0; i < lambdas.size(); ++i) {
        if (std::abs(lambdas[i]) >= 1.0)
            throw NumericError("kappa: principal curvature outside (-1,1)");
        s += std::atanh(lambdas[i]);
    }
    return s / static_cast<double>(lambdas.size());
}

double kappa(const Immersion& imm, const VectorXd& p) {
    return kappa_logdet(shape_data(imm, p).B);
}

VectorXd kappa_gradient(const Immersion& imm, const VectorXd& p, const MatrixXd& metric,
                        double h) {
    const int n = imm.domain().dim();
    VectorXd dk(n);
    for (int a = 0; a < n; ++a) {
        auto f = [&](const VectorXd& q) { return kappa(imm, q); };
        VectorXd pp = p, pm = p;
        pp[a] += h;
        pm[a] -= h;
        dk[a] = (f(pp) - f(pm)) / (2.0 * h);
    }
    return metric.ldlt().solve(dk);
}

// ---------------------------------------------------------------------------
// Catalog.

namespace {

DomainBox box(int n, double half_width) {
    DomainBox d;
    d.lo = VectorXd::Constant(n, -half_width);
    d.hi = VectorXd::Constant(n, half_width);
    return d;
}

}  // namespace

Immersion catalog_plane(int n, double half_width) {
    auto eval = [n](const VectorXd& u) -> VectorXd {
        VectorXd x = VectorXd::Zero(n + 2);
        x.head(n) = u;
        x[n + 1] = std::sqrt(1.0 + u.squaredNorm());
        return x;
    };
    auto jac = [n](const VectorXd& u) -> MatrixXd {
        MatrixXd J = MatrixXd::Zero(n + 2, n);
        const double w = std::sqrt(1.0 + u.squaredNorm());
        for (int a = 0; a < n; ++a) {
            J(a, a) = 1.0;
            J(n + 1, a) = u[a] / w;
        }
        return J;
    };
    return Immersion(box(n, half_width), eval, jac, +1);
}

Immersion catalog_horosphere(int n, double half_width) {
    auto eval = [n](const VectorXd& u) -> VectorXd {
        VectorXd x = VectorXd::Zero(n + 2);
        const double q = 0.5 * u.squaredNorm();
        x.head(n) = u;
        x[n] = q;
        x[n + 1] = 1.0 + q;
        return x;
    };
    auto jac = [n](const VectorXd& u) -> MatrixXd {
        MatrixXd J = MatrixXd::Zero(n + 2, n);
        for (int a = 0; a < n; ++a) {
            J(a, a) = 1.0;
            J(n, a) = u[a];
            J(n + 1, a) = u[a];
        }
        return J;
    };
    return Immersion(box(n, half_width), eval, jac, +1);
}

Immersion catalog_sphere(double r) {
    if (r <= 0.0) throw NumericError("catalog_sphere: radius must be positive");
    DomainBox d;
    d.lo = VectorXd(2);
    d.hi = VectorXd(2);
    d.lo << 0.6, -1.0;  // polar strip away from the chart poles
    d.hi << 2.5, 1.0;
    auto eval = [r](const VectorXd& u) -> VectorXd {
        const double th = u[0], ph = u[1];
        VectorXd x(4);
        x[0] = std::sinh(r) * std::sin(th) * std::cos(ph);
        x[1] = std::sinh(r) * std::sin(th) * std::sin(ph);
        x[2] = std::sinh(r) * std::cos(th);
        x[3] = std::cosh(r);
        return x;
    };
    auto jac = [r](const VectorXd& u) -> MatrixXd {
        const double th = u[0], ph = u[1];
        MatrixXd J = MatrixXd::Zero(4, 2);
        J(0, 0) = std::sinh(r) * std::cos(th) * std::cos(ph);
        J(1, 0) = std::sinh(r) * std::cos(th) * std::sin(ph);
        J(2, 0) = -std::sinh(r) * std::sin(th);
        J(0, 1) = -std::sinh(r) * std::sin(th) * std::sin(ph);
        J(1, 1) = std::sinh(r) * std::sin(th) * std::cos(ph);
        return J;
    };
    return Immersion(d, eval, jac, +1);
}

Immersion catalog_cylinder(double r) {
    if (r <= 0.0) throw NumericError("catalog_cylinder: radius must be positive");
    DomainBox d;
    d.lo = VectorXd(2);
    d.hi = VectorXd(2);
    d.lo << -1.0, -2.4;
    d.hi << 1.0, 2.4;
    auto eval = [r](const VectorXd& u) -> VectorXd {
        const double t = u[0], th = u[1];
        VectorXd x(4);
        x[0] = std::cosh(r) * std::sinh(t);
        x[1] = std::sinh(r) * std::cos(th);
        x[2] = std::sinh(r) * std::sin(th);
        x[3] = std::cosh(r) * std::cosh(t);
        return x;
    };
    auto jac = [r](const VectorXd& u) -> MatrixXd {
        const double t = u[0], th = u[1];
        MatrixXd J = MatrixXd::Zero(4, 2);
        J(0, 0) = std::cosh(r) * std::cosh(t);
        J(3, 0) = std::cosh(r) * std::sinh(t);
        J(1, 1) = -std::sinh(r) * std::sin(th);
        J(2, 1) = std::sinh(r) * std::cos(th);
        return J;
    };
    return Immersion(d, eval, jac, +1);
}

Immersion catalog_rcap(int n, double r, double half_width) {
    auto eval = [n, r](const VectorXd& u) -> VectorXd {
        VectorXd x = VectorXd::Zero(n + 2);
        x.head(n) = std::cosh(r) * u;
        x[n] = std::sinh(r);
        x[n + 1] = std::cosh(r) * std::sqrt(1.0 + u.squaredNorm());
        return x;
    };
    auto jac = [n, r](const VectorXd& u) -> MatrixXd {
        MatrixXd J = MatrixXd::Zero(n + 2, n);
        const double w = std::sqrt(1.0 + u.squaredNorm());
        for (int a = 0; a < n; ++a) {
            J(a, a) = std::cosh(r);
            J(n + 1, a) = std::cosh(r) * u[a] / w;
        }
        return J;
    };
    return Immersion(box(n, half_width), eval, jac, +1);
}

Immersion catalog_graph(int n, double amplitude, double half_width) {
    auto f = [amplitude](const VectorXd& u) {
        return amplitude * std::exp(-u.squaredNorm());
    };
    auto eval = [n, f](const VectorXd& u) -> VectorXd {
        VectorXd x = VectorXd::Zero(n + 2);
        const double fu = f(u);
        x.head(n) = u;
        x[n] = fu;
        x[n + 1] = std::sqrt(1.0 + u.squaredNorm() + fu * fu);
        return x;
    };
    auto jac = [n, f](const VectorXd& u) -> MatrixXd {
        MatrixXd J = MatrixXd::Zero(n + 2, n);
        const double fu = f(u);
        const double w = std::sqrt(1.0 + u.squaredNorm() + fu * fu);
        for (int a = 0; a < n; ++a) {
            const double dfa = -2.0 * u[a] * fu;
            J(a, a) = 1.0;
            J(n, a) = dfa;
            J(n + 1, a) = (u[a] + fu * dfa) / w;
        }
        return J;
    };
    return Immersion(box(n, half_width), eval, jac, +1);
}

Immersion catalog(const std::string& name, double param, int n) {
    if (name == "plane") return catalog_plane(n);
    if (name == "horosphere") return catalog_horosphere(n);
    if (name == "sphere") return catalog_sphere(param);
    if (name == "cylinder") return catalog_cylinder(param);
    if (name == "rcap") return catalog_rcap(n, param);
    if (name == "graph") return catalog_graph(n, param);
    throw NumericError("catalog: unknown immersion '" + name + "'");
}

Immersion transform_immersion(const Immersion& imm, const MatrixXd& iso) {
    auto eval = [imm, iso](const VectorXd& p) -> VectorXd { return iso * imm(p); };
    auto jac = [imm, iso](const VectorXd& p) -> MatrixXd { return iso * imm.jacobian(p); };
    return Immersion(imm.domain(), eval, jac, imm.orientation());
}

}  // namespace spaceforms
