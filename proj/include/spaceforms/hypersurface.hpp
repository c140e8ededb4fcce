#pragma once

#include "spaceforms/geodesics.hpp"

#include <functional>
#include <optional>

namespace spaceforms {

// Parametrized hypersurface immersions sigma: U subset R^n -> H^(n+1) with
// first/second fundamental forms, shape operator, Gauss lift and map, normal
// evolution and the curvature mean kappa.

struct DomainBox {
    VectorXd lo, hi;
    std::vector<bool> periodic;  // per axis; empty means none

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const VectorXd& p, double margin = 0.0) const;
    VectorXd center() const { return 0.5 * (lo + hi); }
};

class Immersion {
public:
    using EvalFn = std::function<VectorXd(const VectorXd&)>;
    using JacFn = std::function<MatrixXd(const VectorXd&)>;

    Immersion() = default;
    Immersion(DomainBox dom, EvalFn eval, int orientation = +1)
        : domain_(std::move(dom)), eval_(std::move(eval)), orientation_(orientation) {}
    Immersion(DomainBox dom, EvalFn eval, JacFn jac, int orientation = +1)
        : domain_(std::move(dom)),
          eval_(std::move(eval)),
          jacobian_(std::move(jac)),
          orientation_(orientation) {}

    const DomainBox& domain() const { return domain_; }
    int orientation() const { return orientation_; }
    void set_orientation(int s) { orientation_ = s; }
    bool has_analytic_jacobian() const { return static_cast<bool>(jacobian_); }

    VectorXd operator()(const VectorXd& p) const { return eval_(p); }
    // Analytic fast path when registered, central differences otherwise.
    MatrixXd jacobian(const VectorXd& p, double h = 1e-5) const;

private:
    DomainBox domain_;
    EvalFn eval_;
    JacFn jacobian_;
    int orientation_ = +1;
};

struct ShapeData {
    MatrixXd I;        // first fundamental form, positive definite
    VectorXd nu;       // unit normal fixed by the orientation
    MatrixXd B;        // shape operator, I-self-adjoint
    VectorXd lambdas;  // eigenvalues of B, ascending
    double condition;  // Jacobian conditioning of the least-squares solve
};

// Jacobian, normal, shape operator and principal curvatures at p. The normal
// derivative uses central differences with step h_normal.
ShapeData shape_data(const Immersion& imm, const VectorXd& p, double h_normal = 1e-5);

UnitTangent gauss_lift(const Immersion& imm, const VectorXd& p);
GeodesicLine gauss_map(const Immersion& imm, const VectorXd& p);
VectorXd hyperbolic_gauss(const Immersion& imm, const VectorXd& p, int sign);

// First fundamental form of the Gauss map: I - I(B.,B.). Positive definite
// exactly when all principal curvatures lie in (-1,1).
MatrixXd gauss_fff(const Immersion& imm, const VectorXd& p);
MatrixXd gauss_fff(const ShapeData& sd);

// Direct route: finite differences of the lift pushed through the bundle
// projection, measured with the para-Kahler metric.
MatrixXd gauss_fff_pullback(const Immersion& imm, const VectorXd& p, double h = 1e-5);

// sigma_t = cosh(t) sigma + sinh(t) nu, with the analytic Jacobian
// d sigma (cosh t - sinh t B).
Immersion normal_evolution(const Immersion& imm, double t);

// (id - tanh t B)^(-1) (B - tanh t id).
MatrixXd evolved_shape(const MatrixXd& B, double t);

// Mean of the hyperbolic arctangents of the principal curvatures, computed by
// the log-determinant route.
double kappa(const Immersion& imm, const VectorXd& p);
double kappa_logdet(const MatrixXd& B);
double kappa_eigen(const VectorXd& lambdas);

// I-gradient of kappa by central differences.
VectorXd kappa_gradient(const Immersion& imm, const VectorXd& p, const MatrixXd& metric,
                        double h = 1e-4);

// ---------------------------------------------------------------------------
// Catalog of closed-form immersions.

// Totally geodesic hyperplane { x_{n+1} = 0 } as a graph chart.
Immersion catalog_plane(int n, double half_width = 1.0);

// Horosphere through the base point with null direction e_{n+1} + e_{n+2};
// the +1 orientation is the inward one (shape operator = id).
Immersion catalog_horosphere(int n, double half_width = 1.0);

// Geodesic sphere of radius r about the base point (spherical chart, n = 2).
Immersion catalog_sphere(double r);

// Equidistant tube at radius r around a geodesic line in H^3.
Immersion catalog_cylinder(double r);

// Hypersurface at signed distance r from the totally geodesic plane.
Immersion catalog_rcap(int n, double r, double half_width = 1.0);

// Graph over the plane chart: x_{n+1} = f; bump profile a*exp(-|u|^2) gives a
// non-umbilic immersion with small principal curvatures for small a.
Immersion catalog_graph(int n, double amplitude, double half_width = 1.0);

Immersion catalog(const std::string& name, double param = 0.0, int n = 2);

// Compose with an ambient isometry.
Immersion transform_immersion(const Immersion& imm, const MatrixXd& iso);

}  // namespace spaceforms
