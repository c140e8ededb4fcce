#pragma once

#include "spaceforms/core.hpp"

namespace spaceforms {

// The unit tangent bundle of H^(n+1) in the hyperboloid model, the geodesic
// flow, the para-Sasaki metric, and the induced para-Kahler structure on the
// space of oriented geodesics G = boundary x boundary minus the diagonal.

struct UnitTangent {
    VectorXd x;  // <x,x> = -1, last coordinate > 0
    VectorXd v;  // <x,v> = 0, <v,v> = 1

    int ambient_dim() const { return static_cast<int>(x.size()); }
    bool valid(double tol = kDefaultTol) const;
};

// Renormalize after numeric drift.
UnitTangent project_unit_tangent_pair(const VectorXd& x, const VectorXd& v);

struct TangentT1 {
    VectorXd xdot;
    VectorXd vdot;

    TangentT1 operator+(const TangentT1& o) const { return {xdot + o.xdot, vdot + o.vdot}; }
    TangentT1 operator-(const TangentT1& o) const { return {xdot - o.xdot, vdot - o.vdot}; }
    TangentT1 operator*(double s) const { return {s * xdot, s * vdot}; }
    double norm() const { return std::sqrt(xdot.squaredNorm() + vdot.squaredNorm()); }
};

bool is_tangent_t1(const UnitTangent& ut, const TangentT1& X, double tol = 1e-7);

// phi_t(x,v) = (cosh t x + sinh t v, sinh t x + cosh t v).
UnitTangent geodesic_flow(const UnitTangent& ut, double t);
TangentT1 geodesic_flow_differential(const TangentT1& X, double t);

// Lifts at (x,v): horizontal (w,0) and vertical (0,w) for w in v-perp, and
// the flow generator chi = (v,x).
TangentT1 horizontal_lift(const VectorXd& w, const UnitTangent& ut, double tol = 1e-8);
TangentT1 vertical_lift(const VectorXd& w, const UnitTangent& ut, double tol = 1e-8);
TangentT1 chi(const UnitTangent& ut);

// Split X into a*chi + u^H + w^V.
struct SasakiSplit {
    double a;
    VectorXd u;
    VectorXd w;
};
SasakiSplit split_tangent(const UnitTangent& ut, const TangentT1& X);

// Para-Sasaki metric: +<,> on horizontal lifts, -<,> on vertical ones,
// chi of unit norm, the three summands mutually orthogonal.
double sasaki_inner(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y);

// Product-metric restriction <xdot1,xdot2> - <vdot1,vdot2>; agrees with the
// para-Sasaki metric on the orthogonal complement of chi.
double sasaki_star(const TangentT1& X, const TangentT1& Y);

// Principal connection of p: T^1 H -> G; omega(X) = Sas(X, chi).
double connection_form(const UnitTangent& ut, const TangentT1& X);

// Remove the chi component.
TangentT1 project_chi_perp(const UnitTangent& ut, const TangentT1& X);

// ---------------------------------------------------------------------------
// Space of oriented geodesics.

struct GeodesicLine {
    VectorXd plus;   // endpoint of exp(t v), t -> +infinity, on { last = 1 }
    VectorXd minus;  // t -> -infinity
};

GeodesicLine project_to_line(const UnitTangent& ut);

// Tangent of G carried as (representative unit tangent, chi-perp vector).
struct TangentG {
    UnitTangent base;
    TangentT1 vec;  // Sas(vec, chi) = 0
};

TangentG make_tangent_g(const UnitTangent& ut, const TangentT1& X, double tol = 1e-7);

// Move the representative along the flow; the line is unchanged.
TangentG transport_representative(const TangentG& t, double s);

// Flow time c with phi_c(from) = to; throws if the two unit tangents do not
// lie on a common fiber.
double flow_offset(const UnitTangent& from, const UnitTangent& to, double tol = 1e-6);

// Para-Kahler structure evaluated at a representative.
double parakahler_g(const TangentG& X, const TangentG& Y);
TangentG parakahler_J(const TangentG& X);
double parakahler_omega(const TangentG& X, const TangentG& Y);

// Exterior derivative of the connection form by nested central differences
// along a coordinate surface through ut with velocities X, Y (both chi-perp).
double numeric_domega(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y,
                      double h = 1e-4, double h_nested = 1e-3);

// Numeric exterior derivative of the fundamental form on a coordinate
// 3-parameter family (closedness check).
double numeric_domega3(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y,
                       const TangentT1& Z, double h = 1e-3);

// ---------------------------------------------------------------------------
// Dimension three: boundary = CP^1 via stereographic charts, and the
// holomorphic metric -4/(z1-z2)^2 dz1 dz2 on G_3.

struct BoundaryChart {
    // Rotation applied before the stereographic map; identity by default.
    MatrixXd rot;

    static BoundaryChart standard(int ambient_dim);
    // A fixed rotated chart moving the standard chart's infinity away.
    static BoundaryChart rotated(int ambient_dim);

    Complex map(const VectorXd& null_slice_point) const;
    // Derivative of the chart along a curve of null-slice points.
    Complex map_derivative(const VectorXd& y, const VectorXd& ydot) const;
    // Euclidean distance of the point from the chart's infinity direction.
    double distance_to_infinity(const VectorXd& null_slice_point) const;
};

// Chart choice that keeps both endpoints at distance > 0.1 from infinity.
BoundaryChart choose_chart(const GeodesicLine& line);

// Endpoint velocities of the lines swept by a chi-perp tangent; exact
// derivative of the normalized null rays pushed through the chart.
struct BoundaryVelocity {
    Complex zplus, zminus;      // chart values of the endpoints
    Complex zplus_dot, zminus_dot;
};

BoundaryVelocity dp_boundary(const UnitTangent& ut, const TangentT1& X,
                             const BoundaryChart& chart);
BoundaryVelocity dp_boundary(const UnitTangent& ut, const TangentT1& X);

// Closed form of the projection differential at the standard base point
// ((0,0,0,1), e1): input components alpha, beta (horizontal part along e2, e3)
// and gamma, delta (vertical part along e2, e3). Matches dp_boundary with the
// two slots swapped; the swap is recorded in the docs.
std::pair<Complex, Complex> dp_standard_form(double alpha, double beta, double gamma,
                                             double delta);

// -4/(z1-z2)^2 * (z1dot w2dot + w1dot z2dot)/2 on boundary-velocity pairs.
Complex g3_inner(const BoundaryVelocity& X, const BoundaryVelocity& Y);

// Same quantity for chi-perp tangents at a common representative.
Complex g3_inner(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y);

}  // namespace spaceforms
