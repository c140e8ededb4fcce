#pragma once

#include "spaceforms/numerics.hpp"

#include <functional>

namespace spaceforms {

// Complex-valued metrics on a chart: orthonormal frames, Levi-Civita
// connection forms, curvature through the structure equations, Gauss-Codazzi
// residuals, positivity, area forms and Gauss-Bonnet quadrature.

class ComplexMetric {
public:
    using MetricFn = std::function<MatrixXcd(const VectorXd&)>;

    ComplexMetric() = default;
    ComplexMetric(int n, MetricFn g) : n_(n), g_(std::move(g)) {}

    int dim() const { return n_; }
    MatrixXcd operator()(const VectorXd& p) const { return g_(p); }
    Complex eval(const VectorXd& p, const VectorXcd& X, const VectorXcd& Y) const {
        return (X.transpose() * g_(p) * Y)(0, 0);
    }

private:
    int n_ = 0;
    MetricFn g_;
};

// Deterministic Gram-Schmidt frame: columns F with F^T g F = id. Principal
// square roots; isotropic pivots trigger a fixed unitary reseed of the basis.
MatrixXcd orthonormal_frame(const ComplexMetric& g, const VectorXd& p,
                            int max_reseed = 8);

// Levi-Civita connection forms for the Gram-Schmidt frame: theta[i][j] is the
// coordinate covector of theta^i_j, antisymmetric in (i,j). Frame Jacobians
// use central differences with step h.
struct ConnectionForms {
    MatrixXcd frame;                       // F at the point
    std::vector<std::vector<VectorXcd>> theta;  // theta[i][j] as covectors
};
ConnectionForms connection_forms(const ComplexMetric& g, const VectorXd& p,
                                 double h = 1e-3);

// Sectional curvature K(Span(X_i, X_j)) of the frame planes via the structure
// equations; entry (0,1) is the surface curvature when n = 2.
MatrixXcd sectional_curvatures(const ComplexMetric& g, const VectorXd& p,
                               double h_outer = 1e-4, double h_nested = 1e-3);

Complex surface_curvature(const ComplexMetric& g, const VectorXd& p,
                          double h_outer = 1e-4, double h_nested = 1e-3);

// Shape tensor in the coordinate frame, for Gauss-Codazzi residuals and the
// frame integrator.
using ShapeField = std::function<MatrixXcd(const VectorXd&)>;

struct GCResiduals {
    double codazzi;
    double gauss;
};

// codazzi = sup |d^nabla Psi(X_i, X_j)|; gauss (surfaces) = |K + 1 - det Psi|.
GCResiduals gc_residuals(const ComplexMetric& g, const ShapeField& psi,
                         const VectorXd& p, double tol_selfadjoint = 1e-8);

// ---------------------------------------------------------------------------
// Positivity and the compatible complex-linear rotation (surfaces).

struct PositivityData {
    bool positive;
    Complex mu_upper, mu_lower;  // isotropic directions [V1 : V2] as mu = V1/V2
    MatrixXcd J;                 // J^2 = -id, g(J.,J.) = g, orientation-fixed
};

PositivityData positivity_and_rotation(const ComplexMetric& g, const VectorXd& p);

// Area form value on a pair of coordinate vectors; norm-1 2-form compatible
// with the chart orientation.
Complex area_form(const ComplexMetric& g, const VectorXd& p, const VectorXcd& V1,
                  const VectorXcd& V2);

// ---------------------------------------------------------------------------
// Quadrature atlases for Gauss-Bonnet.

struct QuadratureChart {
    ComplexMetric metric;  // in chart coordinates
    // Rect: midpoint nodes on [lo0, hi0] x [lo1, hi1] in the chart itself.
    // PolarOverlay: nodes (r, phi) in the same box, mapped to the Cartesian
    // chart point (r cos phi, r sin phi) with area weight r dr dphi.
    enum class Layout { Rect, PolarOverlay } layout = Layout::Rect;
    double lo0, hi0, lo1, hi1;
    std::function<double(double)> hi0_of_1;  // per-column cap on axis 0
    int n0, n1;
};

// Sum over charts of the K dA midpoint quadrature.
Complex gauss_bonnet(const std::vector<QuadratureChart>& atlas);

// Round sphere with the negative-definite metric -4/(1+|z|^2)^2 |dz|^2 in two
// stereographic charts (transition w = 1/z); integral 4 pi with K = -1.
std::vector<QuadratureChart> atlas_neg_sphere(int n_angular = 128, int n_radial = 64);

// Closed genus-two surface: regular octagon fundamental domain (interior
// angles pi/4, sides glued in the standard pattern) covered by an inner
// Poincare-disk chart and a polar annulus chart out to the boundary.
std::vector<QuadratureChart> atlas_genus2(int n_angular = 128, int n_radial = 64);

// Circumradius profile of the regular octagon, by direction.
double genus2_octagon_radius(double phi);

// Multiply every chart metric by a smooth nonvanishing complex factor.
std::vector<QuadratureChart> conformal_rescale(
    const std::vector<QuadratureChart>& atlas,
    const std::function<Complex(const VectorXd&)>& factor);

// ---------------------------------------------------------------------------
// Metrics from chart map pairs and the one-parameter curvature -1 family.

// g = -4/(f1-f2)^2 df1 df2 for chart maps f1, f2 with derivative oracles.
ComplexMetric metric_from_pair(const std::function<Complex(const VectorXd&)>& f1,
                               const std::function<Complex(const VectorXd&)>& f2,
                               double h = 1e-6);

// Riemannian chart metric h as a real symmetric matrix field.
using RealMetricFn = std::function<MatrixXd(const VectorXd&)>;
using RealTensorFn = std::function<MatrixXd(const VectorXd&)>;

// Complex structure of h compatible with the chart orientation.
MatrixXd complex_structure_of(const MatrixXd& h);

// g_z(X,Y) = h(beta X, beta Y), beta = cos(z) id - sin(z) J b. Checks that b
// is h-self-adjoint, det 1 and Codazzi before building the family.
ComplexMetric landslide_family(const RealMetricFn& h, const RealTensorFn& b, Complex z,
                               const VectorXd& probe, double codazzi_tol = 1e-5);

// Hyperbolic-plane test charts.
MatrixXd fermi_metric(const VectorXd& p);          // du^2 + cosh(u)^2 dv^2
MatrixXd fermi_regular_tensor(const VectorXd& p);  // diag(m, 1/m), Codazzi, det 1
MatrixXd poincare_disk_metric(const VectorXd& p);  // 4/(1-|u|^2)^2 (du^2+dv^2)

}  // namespace spaceforms
