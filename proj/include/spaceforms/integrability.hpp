#pragma once

#include "spaceforms/hypersurface.hpp"

namespace spaceforms {

// Local, global and equivariant integrability of immersions into the space of
// geodesics: Lagrangian residuals, lift solving against the connection form,
// reconstruction, loop holonomy, the curvature-mean one-form and its loop
// integrals, and the Lagrangian flux of isotopies.

struct DeckPair {
    // Domain translation p -> p + shift paired with the boundary isometry
    // that matches it on the lines.
    VectorXd shift;
    MatrixXd isometry;  // acts on the ambient Minkowski space
};

struct ImmersionIntoG {
    DomainBox domain;
    // Smooth lift oracle; the lines are its fiber projections.
    std::function<UnitTangent(const VectorXd&)> lift;
    std::vector<DeckPair> deck;

    GeodesicLine line(const VectorXd& p) const { return project_to_line(lift(p)); }
};

// Gauss map of a hypersurface immersion, with the canonical lift.
ImmersionIntoG gauss_map_into_g(const Immersion& imm);

// Geodesics meeting a fixed axis at angle theta0: a ruled family over the
// axis parameter (domain dimension one), deck-translatable along the axis.
ImmersionIntoG constant_angle_family(double theta0, int ambient_dim = 3);

// Derivative of the lift along direction a, projected orthogonal to chi;
// the projected vector represents dG.
TangentT1 lift_derivative(const ImmersionIntoG& g, const VectorXd& p, int a,
                          double h = 1e-5);

// max over coordinate pairs of |Omega(dG(e_i), dG(e_j))|.
double lagrangian_residual(const ImmersionIntoG& g, const VectorXd& p);

// ---------------------------------------------------------------------------
// Lift solving: any section orthogonal to the fibers along a path is the
// registered lift flowed by tau with tau' = -omega(lift').

struct SolvedLift {
    std::vector<double> s;       // samples of the path parameter
    std::vector<double> tau;     // flow offsets
    std::vector<UnitTangent> zeta;
};

// Path given as a map s in [0,1] -> domain point.
using DomainPath = std::function<VectorXd(double)>;

SolvedLift lift_solve(const ImmersionIntoG& g, const DomainPath& path,
                      const UnitTangent& initial, int samples = 257,
                      double tol = 1e-10);

// Integral of the connection form along the lift of a closed (or deck-closed)
// loop; for a deck loop the closing offset through the deck isometry is
// included. Equals the kappa difference along any integrating immersion.
double loop_holonomy(const ImmersionIntoG& g, const DomainPath& loop,
                     const DeckPair* deck = nullptr, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Reconstruction over a grid region (domain dimension <= 2).

struct Reconstruction {
    Immersion sigma;
    double flow_shift;        // applied desingularizing flow time
    double max_cell_closure;  // per-cell holonomy residuals
};

Reconstruction reconstruct_sigma(const ImmersionIntoG& g, const UnitTangent& initial,
                                 int grid = 9);

// ---------------------------------------------------------------------------
// Mean curvature of the Gauss map and the curvature-mean one-form.

// -J(dG(grad kappa)) at p, as a tangent carried at the Gauss lift; also
// returns the finite-difference trace route for the cross-check.
struct MeanCurvatureG {
    TangentG value;       // -J dG(grad kappa)
    TangentG trace_route; // (1/n) trace of the second fundamental form
    double route_gap;
};
MeanCurvatureG gauss_mean_curvature(const Immersion& imm, const VectorXd& p);

// Integral over a loop of Omega(Hbar, dG(.)) by composite quadrature.
double maslov_integral(const Immersion& imm, const DomainPath& loop, int samples = 129);

// ---------------------------------------------------------------------------
// Lagrangian flux of an isotopy of immersions into G.

using Isotopy = std::function<ImmersionIntoG(double)>;  // s in [0,1]

double flux(const Isotopy& isotopy, const DomainPath& loop, int s_samples = 33,
            int loop_samples = 129);

}  // namespace spaceforms
