#pragma once

#include "spaceforms/cxmetric.hpp"

namespace spaceforms {

// Integration of immersion data (g, Psi) into the quadric X_{n+1} by solving
// the frame ODE in SO(n+2, C): monodromy, path independence, real-form
// classification and parameter-holomorphy checks live here.

// A light chart box (kept separate from the hypersurface domain type).
struct ChartBox {
    VectorXd lo, hi;
    int dim() const { return static_cast<int>(lo.size()); }
    double diameter() const { return (hi - lo).norm(); }
};

struct ImmersionData {
    ComplexMetric g;
    ShapeField psi;
    ChartBox chart;
};

// Connection coefficient matrices omega_a(p) in so(n+2, C), one per chart
// direction: the blocks are the Levi-Civita forms, the shape covectors and
// -i theta, completed antisymmetrically.
std::vector<MatrixXcd> connection_matrices(const ImmersionData& data, const VectorXd& p);

// sup over direction pairs of | d_a omega_b - d_b omega_a + [omega_a, omega_b] |.
double flatness_residual(const ImmersionData& data, const VectorXd& p, double h = 1e-4);

// Complex Gram-Schmidt of the columns against the plain bilinear form;
// retraction onto the complex orthogonal group.
MatrixXcd reorthonormalize(const MatrixXcd& phi);

struct FrameIntegrationOptions {
    int steps_per_unit = 320;    // RK4 steps per unit of chart distance
    int reorthonormalize_every = 16;
};

// Solve Phi' = Phi omega along the straight segment from a to b.
MatrixXcd integrate_segment(const ImmersionData& data, const VectorXd& a,
                            const VectorXd& b, const MatrixXcd& phi0,
                            const FrameIntegrationOptions& opt = {});

// Piecewise-linear path through the given nodes.
MatrixXcd integrate_path(const ImmersionData& data, const std::vector<VectorXd>& nodes,
                         const MatrixXcd& phi0, const FrameIntegrationOptions& opt = {});

// Canonical monotone path from the chart base point: spine along axis 0,
// then the rib along axis 1.
MatrixXcd integrate_to(const ImmersionData& data, const VectorXd& base,
                       const VectorXd& target, const MatrixXcd& phi0,
                       const FrameIntegrationOptions& opt = {});

// Quadric point swept by a frame: sigma = i Phi e_{n+2}.
VectorXcd immersion_point(const MatrixXcd& phi);
// Frame normal column.
VectorXcd immersion_normal(const MatrixXcd& phi);

struct IntegratedGrid {
    std::vector<VectorXd> params;    // row-major grid nodes
    std::vector<MatrixXcd> frames;
    std::vector<VectorXcd> points;
    int n0, n1;
    double cell_closure;  // sup of per-cell holonomy residuals
};

IntegratedGrid immersion_from_data(const ImmersionData& data, int n0, int n1,
                                   const MatrixXcd& phi0,
                                   const FrameIntegrationOptions& opt = {});

// Pull-back metric and shape tensor of the integrated immersion at p, by
// integrating short legs from the nearest grid path and differencing.
struct RoundTrip {
    MatrixXcd metric;
    MatrixXcd shape;
    double metric_residual;
    double shape_residual;  // min over the sign ambiguity of the normal
};
RoundTrip round_trip_check(const ImmersionData& data, const VectorXd& p,
                           const MatrixXcd& phi0, double h = 1e-3,
                           const FrameIntegrationOptions& opt = {});

// Deck translation along axis 1 by c (data must be invariant): monodromy
// Phi(end) Phi(start)^{-1} along the deck path based at `base`.
MatrixXcd monodromy(const ImmersionData& data, const VectorXd& base, double c,
                    const FrameIntegrationOptions& opt = {});

// Conjugation sending the real slice of X_{n+1} with signature (m, n+2-m)
// pattern to real matrices; diag(1,...,1, i, ..., i) with m ones.
MatrixXcd real_form_conjugator(int ambient, int m);

enum class RealForm { H, AdS, NegDS, NegS, None };
const char* real_form_name(RealForm f);

struct RealFormReport {
    RealForm form;
    bool ambiguous;  // near-degenerate signature or shape-realness
    double sig_margin;
};

// Inspect the signature of g on real tangents and the realness of Psi or
// i Psi at the sample points.
RealFormReport classify_real_form(const ImmersionData& data,
                                  const std::vector<VectorXd>& samples,
                                  double tol = 1e-8);

// ---------------------------------------------------------------------------
// Built-in data families on the Fermi chart of the hyperbolic plane.

// Curvature -1 family (one-parameter, holomorphic in z) with zero shape.
ImmersionData landslide_data(Complex z, double half_width = 0.4);

// cosh^2(z) h with shape -tanh(z) b; b the chart's regular tensor or id.
ImmersionData fuchsian_data(Complex z, bool use_regular_tensor = true,
                            double half_width = 0.4);

}  // namespace spaceforms
