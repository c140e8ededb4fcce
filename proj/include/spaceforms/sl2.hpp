#pragma once

#include "spaceforms/core.hpp"

namespace spaceforms {

// The quadric X_3 as SL(2,C) with the bilinear form M -> -det(M), its cross
// product, exponential, isometry types, axis map and boundary fixed points.

using Matrix2c = Eigen::Matrix2cd;

// <M,N> = (tr(MN) - tr M tr N)/2; equals tr(VW)/2 on traceless matrices and
// <V,V> = -det V there.
Complex mat2_inner(const Matrix2c& m, const Matrix2c& n);

// Linear isometry (C^4, sum z_i^2) -> (Mat2, -det); carries X_3 onto SL(2,C).
Matrix2c f_iso(const VectorXcd& z);
VectorXcd f_iso_inverse(const Matrix2c& m);

// V x W = [V,W]/(2i) on traceless matrices.
Matrix2c cross(const Matrix2c& v, const Matrix2c& w);

// Positive orthonormal basis of the traceless matrices.
Matrix2c basis_v1();
Matrix2c basis_v2();
Matrix2c basis_v3();

// Branch-free exponential cosh(sqrt<V,V>) I + sinhc(sqrt<V,V>) V.
Matrix2c sl2_exp(const Matrix2c& v);

enum class IsometryType { Identity, Elliptic, Parabolic, Hyperbolic, Loxodromic };

struct Classification {
    IsometryType type;
    bool boundary_flag;  // the invariant sits inside a tolerance band
};

// Type of exp(V) from the norm of V; tolerance bands around the lattice
// { |V| in 2 i pi Z } and around |V| = 0, Re|V| = 0, Im|V| in 2 pi Z.
Classification classify_tangent(const Matrix2c& v, double band = 1e-9);

// Type of a group element from its trace.
Classification classify_element(const Matrix2c& a, double band = 1e-9);

const char* isometry_type_name(IsometryType t);

// Axis of the order-two rotation represented by a traceless matrix with
// det = 1: the ordered pair ((a+i)/c, (a-i)/c) with the printed fallbacks.
// For a tangent V with <V,V> != 0 the input is first scaled to det 1.
std::pair<Complex, Complex> axis_of_involution(const Matrix2c& m);
std::pair<Complex, Complex> axis(const Matrix2c& v);

// Mobius action on the boundary chart, infinity handled.
Complex mobius_apply(const Matrix2c& a, Complex z);

// Fixed points on the boundary; one entry for parabolic, two otherwise.
std::vector<Complex> boundary_fixed_points(const Matrix2c& a, double band = 1e-9);

// Isometric embeddings through f_iso composed with the quadric embeddings:
// H3 (hyperboloid point), AdS3 (signature (2,2) quadric point), -S3 (round
// sphere point). Images land in the hermitian slice, SL(2,R) and SU(2).
Matrix2c embed_h3(const VectorXd& x);
Matrix2c embed_sl2r(const VectorXd& x);
Matrix2c embed_su2(const VectorXd& x);

// A ~ +-B.
bool psl_equal(const Matrix2c& a, const Matrix2c& b, double tol = 1e-9);

Matrix2c random_sl2(Rng& rng, double scale = 0.7);
Matrix2c random_traceless(Rng& rng, double scale = 1.0);

}  // namespace spaceforms
