#pragma once

#include "spaceforms/numerics.hpp"

namespace spaceforms {

// Bilinear substrate: signature (p,q) forms on R^(p+q) and the standard
// C-bilinear form sum z_i w_i on C^N.

struct Signature {
    int p = 0;
    int q = 0;
    int dim() const { return p + q; }
};

// diag(+1,...,+1,-1,...,-1) with p plus signs first.
double pseudo_inner(const VectorXd& u, const VectorXd& v, const Signature& sig);

// Minkowski product of signature (n+1, 1): last coordinate carries the minus.
double minkowski_inner(const VectorXd& u, const VectorXd& v);

// Plain complex-bilinear product (no conjugation).
Complex cbilinear(const VectorXcd& u, const VectorXcd& v);

// ---------------------------------------------------------------------------
// Hyperboloid model of H^n: { <x,x> = -1, last coordinate > 0 } in R^(n,1).

bool on_hyperboloid(const VectorXd& x, double tol = kDefaultTol);

// Rescale onto the hyperboloid after numeric drift; keeps the upper sheet.
VectorXd project_hyperboloid(const VectorXd& x);

// Project v to the tangent space at x and normalize to unit length.
VectorXd project_unit_tangent(const VectorXd& x, const VectorXd& v);

// exp_x(v) = cosh|v| x + sinh|v|/|v| v for spacelike tangent v, x for v = 0.
VectorXd hyp_exp(const VectorXd& x, const VectorXd& v, double tol = kDefaultTol);

double hyp_distance(const VectorXd& x, const VectorXd& y);

// Ambient unit normal data of a geodesic endpoint at infinity: the null ray
// of x +/- v, normalized to the slice { last coordinate = 1 }.
VectorXd boundary_endpoint(const VectorXd& x, const VectorXd& v, int sign,
                           double tol = kDefaultTol);

bool on_null_slice(const VectorXd& y, double tol = kDefaultTol);

// Orientation-preserving isometry of the hyperboloid: exp of g*A with A
// antisymmetric, g = diag(1..1,-1). Lands in the identity component.
MatrixXd random_hyp_isometry(int ambient_dim, Rng& rng, double scale = 0.6);

// Induced action on the null slice { last coordinate = 1 }.
VectorXd boundary_action(const MatrixXd& iso, const VectorXd& y);

// ---------------------------------------------------------------------------
// The quadric X_n = { z in C^(n+1) : sum z_i^2 = -1 }.

bool on_quadric(const VectorXcd& z, double tol = kDefaultTol);

VectorXcd project_quadric(const VectorXcd& z);

// Branch-free exponential: cosh(sqrt<v,v>) z + sinhc(sqrt<v,v>) v.
VectorXcd quadric_exp(const VectorXcd& z, const VectorXcd& v, double tol = kDefaultTol);

// Same map evaluated through an explicit root branch; used to check that the
// output does not depend on the branch.
VectorXcd quadric_exp_branch(const VectorXcd& z, const VectorXcd& v, int branch);

// (x_1,...,x_{n+1}) -> (x_1,...,x_m, i x_{m+1},..., i x_{n+1}); isometric and
// totally geodesic embedding of the quadric { <x,x>_{m, n+1-m} = -1 }.
VectorXcd pseudo_quadric_embed(const VectorXd& x, int m);

// ---------------------------------------------------------------------------
// X_1 as C^*: chart z = (z_1, z_2) -> z_2 - i z_1, with inverse and the
// induced metric dw^2 / w^2.

Complex x1_chart(const VectorXcd& z);
VectorXcd x1_chart_inverse(Complex w);
Complex x1_metric_coefficient(Complex w);

}  // namespace spaceforms
