#include "spaceforms/frame.hpp"

#include "spaceforms/core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace spaceforms {

namespace {
const Complex I{0.0, 1.0};
}

std::vector<MatrixXcd> connection_matrices(const ImmersionData& data, const VectorXd& p) {
    const int n = data.g.dim();
    // Tight nested step: the flatness of the numeric field bounds the path
    // independence of the integrated frames.
    const ConnectionForms cf = connection_forms(data.g, p, 3e-4);
    const MatrixXcd gp = data.g(p);
    const MatrixXcd pp = data.psi(p);
    const MatrixXcd gf = gp * cf.frame;            // theta^i(e_a) = gf(a, i)
    const MatrixXcd psi_cov = pp.transpose() * gf;  // Psi^i(e_a) = psi_cov(a, i)

    std::vector<MatrixXcd> omega(n, MatrixXcd::Zero(n + 2, n + 2));
    for (int a = 0; a < n; ++a) {
        MatrixXcd& w = omega[a];
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) w(k, j) = cf.theta[k][j][a];
        for (int j = 0; j < n; ++j) {
            const Complex psi_j = psi_cov(a, j);
            const Complex theta_j = gf(a, j);
            w(j, n) = psi_j;       // column of shape covectors
            w(n, j) = -psi_j;
            w(j, n + 1) = -I * theta_j;
            w(n + 1, j) = I * theta_j;
        }
    }
    return omega;
}

double flatness_residual(const ImmersionData& data, const VectorXd& p, double h) {
    const int n = data.g.dim();
    const std::vector<MatrixXcd> w0 = connection_matrices(data, p);
    std::vector<std::vector<MatrixXcd>> wp(n), wm(n);
    for (int a = 0; a < n; ++a) {
        VectorXd qp = p, qm = p;
        qp[a] += h;
        qm[a] -= h;
        wp[a] = connection_matrices(data, qp);
        wm[a] = connection_matrices(data, qm);
    }
    double res = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const MatrixXcd da_wb = (wp[a][b] - wm[a][b]) / (2.0 * h);
            const MatrixXcd db_wa = (wp[b][a] - wm[b][a]) / (2.0 * h);
            const MatrixXcd bracket = w0[a] * w0[b] - w0[b] * w0[a];
            res = std::max(res, (da_wb - db_wa + bracket).norm());
        }
    return res;
}

MatrixXcd reorthonormalize(const MatrixXcd& phi) {
    const int m = static_cast<int>(phi.cols());
    MatrixXcd f = phi;
    for (int j = 0; j < m; ++j) {
        VectorXcd y = f.col(j);
        for (int k = 0; k < j; ++k) {
            const Complex c = (y.transpose() * f.col(k))(0, 0);
            y -= c * f.col(k);
        }
        const Complex q = (y.transpose() * y)(0, 0);
        if (std::abs(q) < 1e-12)
            throw NumericError("reorthonormalize: orthogonality drift beyond repair");
        f.col(j) = y / std::sqrt(q);
    }
    return f;
}

MatrixXcd integrate_segment(const ImmersionData& data, const VectorXd& a,
                            const VectorXd& b, const MatrixXcd& phi0,
                            const FrameIntegrationOptions& opt) {
    const VectorXd dir = b - a;
    const double len = dir.norm();
    if (len == 0.0) return phi0;
    const int steps = std::max(1, static_cast<int>(std::ceil(len * opt.steps_per_unit)));
    const double dt = 1.0 / steps;
    auto omega_along = [&](double t) -> MatrixXcd {
        const VectorXd p = a + t * dir;
        const std::vector<MatrixXcd> w = connection_matrices(data, p);
        MatrixXcd s = MatrixXcd::Zero(w[0].rows(), w[0].cols());
        for (int k = 0; k < dir.size(); ++k) s += dir[k] * w[k];
        return s;
    };
    MatrixXcd phi = phi0;
    for (int i = 0; i < steps; ++i) {
        const double t = i * dt;
        const MatrixXcd w1 = omega_along(t);
        const MatrixXcd k1 = phi * w1;
        const MatrixXcd w2 = omega_along(t + 0.5 * dt);
        const MatrixXcd k2 = (phi + 0.5 * dt * k1) * w2;
        const MatrixXcd k3 = (phi + 0.5 * dt * k2) * w2;
        const MatrixXcd w4 = omega_along(t + dt);
        const MatrixXcd k4 = (phi + dt * k3) * w4;
        phi += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if ((i + 1) % opt.reorthonormalize_every == 0) phi = reorthonormalize(phi);
    }
    return reorthonormalize(phi);
}

MatrixXcd integrate_path(const ImmersionData& data, const std::vector<VectorXd>& nodes,
                         const MatrixXcd& phi0, const FrameIntegrationOptions& opt) {
    MatrixXcd phi = phi0;
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
        phi = integrate_segment(data, nodes[i], nodes[i + 1], phi, opt);
    return phi;
}

MatrixXcd integrate_to(const ImmersionData& data, const VectorXd& base,
                       const VectorXd& target, const MatrixXcd& phi0,
                       const FrameIntegrationOptions& opt) {
    VectorXd mid = base;
    mid[0] = target[0];
    return integrate_path(data, {base, mid, target}, phi0, opt);
}

VectorXcd immersion_point(const MatrixXcd& phi) {
    return I * phi.col(phi.cols() - 1);
}

VectorXcd immersion_normal(const MatrixXcd& phi) { return phi.col(phi.cols() - 2); }

IntegratedGrid immersion_from_data(const ImmersionData& data, int n0, int n1,
                                   const MatrixXcd& phi0,
                                   const FrameIntegrationOptions& opt) {
    IntegratedGrid grid;
    grid.n0 = n0;
    grid.n1 = n1;
    grid.params.resize(static_cast<size_t>(n0) * n1);
    grid.frames.resize(grid.params.size());
    grid.points.resize(grid.params.size());
    const VectorXd lo = data.chart.lo, hi = data.chart.hi;
    auto node = [&](int i, int j) -> VectorXd {
        VectorXd p(2);
        p[0] = lo[0] + (hi[0] - lo[0]) * i / (n0 - 1);
        p[1] = lo[1] + (hi[1] - lo[1]) * j / (n1 - 1);
        return p;
    };
    auto idx = [&](int i, int j) { return static_cast<size_t>(i) * n1 + j; };

    // Serial spine along axis 0 at j = 0, ribs along axis 1.
    grid.frames[idx(0, 0)] = phi0;
    grid.params[idx(0, 0)] = node(0, 0);
    for (int i = 1; i < n0; ++i) {
        grid.params[idx(i, 0)] = node(i, 0);
        grid.frames[idx(i, 0)] =
            integrate_segment(data, node(i - 1, 0), node(i, 0), grid.frames[idx(i - 1, 0)], opt);
    }
    for (int i = 0; i < n0; ++i)
        for (int j = 1; j < n1; ++j) {
            grid.params[idx(i, j)] = node(i, j);
            grid.frames[idx(i, j)] =
                integrate_segment(data, node(i, j - 1), node(i, j), grid.frames[idx(i, j - 1)], opt);
        }
    for (size_t k = 0; k < grid.frames.size(); ++k)
        grid.points[k] = immersion_point(grid.frames[k]);

    // Practical flatness audit: per-cell closure of the frame transport.
    grid.cell_closure = 0.0;
    for (int i = 0; i + 1 < n0; ++i)
        for (int j = 0; j + 1 < n1; ++j) {
            const MatrixXcd via_rib = grid.frames[idx(i + 1, j + 1)];
            const MatrixXcd via_spine = integrate_segment(
                data, node(i, j + 1), node(i + 1, j + 1), grid.frames[idx(i, j + 1)], opt);
            grid.cell_closure =
                std::max(grid.cell_closure, (via_rib - via_spine).norm());
        }
    return grid;
}

RoundTrip round_trip_check(const ImmersionData& data, const VectorXd& p,
                           const MatrixXcd& phi0, double h,
                           const FrameIntegrationOptions& opt) {
    const int n = data.g.dim();
    const VectorXd base = data.chart.lo;
    const MatrixXcd phi_p = integrate_to(data, base, p, phi0, opt);

    // sigma at the four stencil points, integrated from the common frame at p.
    std::vector<VectorXcd> dsig(n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h;
        pm[a] -= h;
        const VectorXcd sp = immersion_point(integrate_segment(data, p, pp, phi_p, opt));
        const VectorXcd sm = immersion_point(integrate_segment(data, p, pm, phi_p, opt));
        dsig[a] = (sp - sm) / (2.0 * h);
    }
    std::vector<VectorXcd> dnu(n);
    for (int a = 0; a < n; ++a) {
        VectorXd pp = p, pm = p;
        pp[a] += h;
        pm[a] -= h;
        const VectorXcd np = immersion_normal(integrate_segment(data, p, pp, phi_p, opt));
        const VectorXcd nm = immersion_normal(integrate_segment(data, p, pm, phi_p, opt));
        dnu[a] = (np - nm) / (2.0 * h);
    }

    RoundTrip out;
    out.metric.resize(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.metric(a, b) = cbilinear(dsig[a], dsig[b]);
    out.metric_residual = (out.metric - data.g(p)).norm();

    // Solve d sigma . S = -d nu in the least-squares sense (complex).
    MatrixXcd J(dsig[0].size(), n), dN(dsig[0].size(), n);
    for (int a = 0; a < n; ++a) {
        J.col(a) = dsig[a];
        dN.col(a) = dnu[a];
    }
    const MatrixXcd shape = (J.adjoint() * J).ldlt().solve(J.adjoint() * (-dN));
    out.shape = shape;
    const MatrixXcd target = data.psi(p);
    out.shape_residual = std::min((shape - target).norm(), (shape + target).norm());
    return out;
}

MatrixXcd monodromy(const ImmersionData& data, const VectorXd& base, double c,
                    const FrameIntegrationOptions& opt) {
    VectorXd end = base;
    end[1] += c;
    const MatrixXcd phi0 = MatrixXcd::Identity(data.g.dim() + 2, data.g.dim() + 2);
    const MatrixXcd phi_end = integrate_segment(data, base, end, phi0, opt);
    return phi_end;  // Phi(base) = id
}

MatrixXcd real_form_conjugator(int ambient, int m) {
    MatrixXcd c = MatrixXcd::Identity(ambient, ambient);
    for (int i = m; i < ambient; ++i) c(i, i) = I;
    return c;
}

const char* real_form_name(RealForm f) {
    switch (f) {
        case RealForm::H: return "H";
        case RealForm::AdS: return "AdS";
        case RealForm::NegDS: return "-dS";
        case RealForm::NegS: return "-S";
        case RealForm::None: return "none";
    }
    return "?";
}

RealFormReport classify_real_form(const ImmersionData& data,
                                  const std::vector<VectorXd>& samples, double tol) {
    RealFormReport rep{RealForm::None, false, 0.0};
    bool g_real = true, psi_real = true, ipsi_real = true;
    int first_pos = -1;
    bool consistent = true;
    double margin = 1e30;
    for (const VectorXd& p : samples) {
        const MatrixXcd gp = data.g(p);
        const MatrixXcd pp = data.psi(p);
        if (gp.imag().norm() > tol) g_real = false;
        if (pp.imag().norm() > tol) psi_real = false;
        if (pp.real().norm() > tol) ipsi_real = false;
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(MatrixXd(gp.real()));
        int pos = 0;
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            const double ev = es.eigenvalues()[i];
            margin = std::min(margin, std::abs(ev));
            if (ev > 0) ++pos;
        }
        if (first_pos < 0) first_pos = pos;
        if (pos != first_pos) consistent = false;
    }
    rep.sig_margin = margin;
    rep.ambiguous = margin < 1e-6 || !consistent;
    if (!g_real || (!psi_real && !ipsi_real) || !consistent) return rep;
    const int n = data.g.dim();
    const bool riem = (first_pos == n);
    const bool negdef = (first_pos == 0);
    const bool split = (first_pos == n - 1) && n == 2;
    if (riem && psi_real) rep.form = RealForm::H;
    else if (riem && ipsi_real) rep.form = RealForm::AdS;
    else if (split && psi_real) rep.form = RealForm::AdS;
    else if (split && ipsi_real) rep.form = RealForm::NegDS;
    else if (negdef && psi_real) rep.form = RealForm::NegDS;
    else if (negdef && ipsi_real) rep.form = RealForm::NegS;
    return rep;
}

ImmersionData landslide_data(Complex z, double half_width) {
    ImmersionData data;
    VectorXd probe(2);
    probe << 0.13, -0.07;
    data.g = landslide_family(fermi_metric, fermi_regular_tensor, z, probe);
    data.psi = [](const VectorXd&) { return MatrixXcd::Zero(2, 2); };
    data.chart.lo = VectorXd::Constant(2, -half_width);
    data.chart.hi = VectorXd::Constant(2, half_width);
    return data;
}

ImmersionData fuchsian_data(Complex z, bool use_regular_tensor, double half_width) {
    ImmersionData data;
    data.g = ComplexMetric(2, [z](const VectorXd& p) -> MatrixXcd {
        const Complex c = std::cosh(z);
        return c * c * fermi_metric(p).cast<Complex>();
    });
    if (use_regular_tensor) {
        data.psi = [z](const VectorXd& p) -> MatrixXcd {
            return -std::tanh(z) * fermi_regular_tensor(p).cast<Complex>();
        };
    } else {
        data.psi = [z](const VectorXd&) -> MatrixXcd {
            return -std::tanh(z) * MatrixXcd::Identity(2, 2);
        };
    }
    data.chart.lo = VectorXd::Constant(2, -half_width);
    data.chart.hi = VectorXd::Constant(2, half_width);
    return data;
}

}  // namespace spaceforms
