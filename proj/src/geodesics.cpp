#include "spaceforms/geodesics.hpp"

#include <cmath>

namespace spaceforms {

bool UnitTangent::valid(double tol) const {
    return on_hyperboloid(x, tol) && std::abs(minkowski_inner(x, v)) < tol &&
           std::abs(minkowski_inner(v, v) - 1.0) < tol;
}

UnitTangent project_unit_tangent_pair(const VectorXd& x, const VectorXd& v) {
    UnitTangent ut;
    ut.x = project_hyperboloid(x);
    ut.v = project_unit_tangent(ut.x, v);
    return ut;
}

bool is_tangent_t1(const UnitTangent& ut, const TangentT1& X, double tol) {
    return std::abs(minkowski_inner(ut.x, X.xdot)) < tol &&
           std::abs(minkowski_inner(ut.v, X.vdot)) < tol &&
           std::abs(minkowski_inner(ut.x, X.vdot) + minkowski_inner(ut.v, X.xdot)) < tol;
}

UnitTangent geodesic_flow(const UnitTangent& ut, double t) {
    const double c = std::cosh(t), s = std::sinh(t);
    return {c * ut.x + s * ut.v, s * ut.x + c * ut.v};
}

TangentT1 geodesic_flow_differential(const TangentT1& X, double t) {
    const double c = std::cosh(t), s = std::sinh(t);
    return {c * X.xdot + s * X.vdot, s * X.xdot + c * X.vdot};
}

TangentT1 horizontal_lift(const VectorXd& w, const UnitTangent& ut, double tol) {
    if (std::abs(minkowski_inner(w, ut.v)) > tol || std::abs(minkowski_inner(w, ut.x)) > tol)
        throw NumericError("horizontal_lift: w not in v-perp");
    return {w, VectorXd::Zero(w.size())};
}

TangentT1 vertical_lift(const VectorXd& w, const UnitTangent& ut, double tol) {
    if (std::abs(minkowski_inner(w, ut.v)) > tol || std::abs(minkowski_inner(w, ut.x)) > tol)
        throw NumericError("vertical_lift: w not in v-perp");
    return {VectorXd::Zero(w.size()), w};
}

TangentT1 chi(const UnitTangent& ut) { return {ut.v, ut.x}; }

SasakiSplit split_tangent(const UnitTangent& ut, const TangentT1& X) {
    SasakiSplit s;
    s.a = minkowski_inner(X.xdot, ut.v);
    s.u = X.xdot - s.a * ut.v;
    s.w = X.vdot - s.a * ut.x;
    return s;
}

double sasaki_inner(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y) {
    if (!is_tangent_t1(ut, X) || !is_tangent_t1(ut, Y))
        throw NumericError("sasaki_inner: argument not tangent at the base point");
    const SasakiSplit sx = split_tangent(ut, X), sy = split_tangent(ut, Y);
    return minkowski_inner(sx.u, sy.u) + sx.a * sy.a - minkowski_inner(sx.w, sy.w);
}

double sasaki_star(const TangentT1& X, const TangentT1& Y) {
    return minkowski_inner(X.xdot, Y.xdot) - minkowski_inner(X.vdot, Y.vdot);
}

double connection_form(const UnitTangent& ut, const TangentT1& X) {
    return minkowski_inner(X.xdot, ut.v);
}

TangentT1 project_chi_perp(const UnitTangent& ut, const TangentT1& X) {
    const double a = connection_form(ut, X);
    return {X.xdot - a * ut.v, X.vdot - a * ut.x};
}

GeodesicLine project_to_line(const UnitTangent& ut) {
    return {boundary_endpoint(ut.x, ut.v, +1), boundary_endpoint(ut.x, ut.v, -1)};
}

TangentG make_tangent_g(const UnitTangent& ut, const TangentT1& X, double tol) {
    if (std::abs(connection_form(ut, X)) > tol)
        throw NumericError("make_tangent_g: vector has a component along chi");
    return {ut, X};
}

TangentG transport_representative(const TangentG& t, double s) {
    return {geodesic_flow(t.base, s), geodesic_flow_differential(t.vec, s)};
}

double flow_offset(const UnitTangent& from, const UnitTangent& to, double tol) {
    // to.x = cosh(c) from.x + sinh(c) from.v
    const double ch = -minkowski_inner(to.x, from.x);
    const double sh = minkowski_inner(to.x, from.v);
    const double c = std::asinh(sh);
    if (std::abs(std::cosh(c) - ch) > 1e-6)
        throw NumericError("flow_offset: points not on a common fiber");
    const UnitTangent moved = geodesic_flow(from, c);
    if ((moved.x - to.x).norm() + (moved.v - to.v).norm() > tol)
        throw NumericError("flow_offset: fiber mismatch");
    return c;
}

double parakahler_g(const TangentG& X, const TangentG& Y) {
    if ((X.base.x - Y.base.x).norm() + (X.base.v - Y.base.v).norm() > 1e-7)
        throw NumericError("parakahler_g: mismatched representatives");
    return sasaki_inner(X.base, X.vec, Y.vec);
}

TangentG parakahler_J(const TangentG& X) {
    return {X.base, {X.vec.vdot, X.vec.xdot}};
}

double parakahler_omega(const TangentG& X, const TangentG& Y) {
    return parakahler_g(X, parakahler_J(Y));
}

namespace {

// Retraction used to build coordinate surfaces in T^1 H around a point.
UnitTangent retract(const VectorXd& x, const VectorXd& v) {
    return project_unit_tangent_pair(x, v);
}

}  // namespace

double numeric_domega(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y,
                      double h, double h_nested) {
    // f(s,t) = retract(base + s X + t Y); coordinate fields commute, so
    // domega(X,Y) = d/ds omega(d f/dt) - d/dt omega(d f/ds).
    auto point = [&](double s, double t) -> UnitTangent {
        return retract(ut.x + s * X.xdot + t * Y.xdot, ut.v + s * X.vdot + t * Y.vdot);
    };
    auto omega_t = [&](double s) -> double {
        // omega of the t-coordinate field at (s, 0).
        const UnitTangent c = point(s, 0.0);
        const UnitTangent cp = point(s, h_nested), cm = point(s, -h_nested);
        const TangentT1 d{(cp.x - cm.x) / (2 * h_nested), (cp.v - cm.v) / (2 * h_nested)};
        return connection_form(c, d);
    };
    auto omega_s = [&](double t) -> double {
        const UnitTangent c = point(0.0, t);
        const UnitTangent cp = point(h_nested, t), cm = point(-h_nested, t);
        const TangentT1 d{(cp.x - cm.x) / (2 * h_nested), (cp.v - cm.v) / (2 * h_nested)};
        return connection_form(c, d);
    };
    return central_diff(omega_t, 0.0, h) - central_diff(omega_s, 0.0, h);
}

double numeric_domega3(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y,
                       const TangentT1& Z, double h) {
    // Coordinate 3-parameter family of lines through the base point; the
    // fundamental form is evaluated on pairs of coordinate fields and
    // differentiated along the third direction.
    const TangentT1 dirs[3] = {X, Y, Z};
    auto point = [&](const Eigen::Vector3d& s) -> UnitTangent {
        VectorXd x = ut.x, v = ut.v;
        for (int i = 0; i < 3; ++i) {
            x += s[i] * dirs[i].xdot;
            v += s[i] * dirs[i].vdot;
        }
        return retract(x, v);
    };
    auto coord_field = [&](const Eigen::Vector3d& s, int i) -> TangentG {
        Eigen::Vector3d sp = s, sm = s;
        sp[i] += h;
        sm[i] -= h;
        const UnitTangent c = point(s), cp = point(sp), cm = point(sm);
        TangentT1 d{(cp.x - cm.x) / (2 * h), (cp.v - cm.v) / (2 * h)};
        return {c, project_chi_perp(c, d)};
    };
    auto omega_pair = [&](const Eigen::Vector3d& s, int i, int j) -> double {
        return parakahler_omega(coord_field(s, i), coord_field(s, j));
    };
    auto d_along = [&](int k, int i, int j) -> double {
        Eigen::Vector3d sp = Eigen::Vector3d::Zero(), sm = Eigen::Vector3d::Zero();
        sp[k] += h;
        sm[k] -= h;
        return (omega_pair(sp, i, j) - omega_pair(sm, i, j)) / (2 * h);
    };
    return d_along(0, 1, 2) - d_along(1, 0, 2) + d_along(2, 0, 1);
}

BoundaryChart BoundaryChart::standard(int ambient_dim) {
    return {MatrixXd::Identity(ambient_dim, ambient_dim)};
}

BoundaryChart BoundaryChart::rotated(int ambient_dim) {
    // Swap the first spatial axis with the chart's infinity direction.
    MatrixXd r = MatrixXd::Identity(ambient_dim, ambient_dim);
    const int k = ambient_dim - 2;  // infinity direction of the standard chart
    r(0, 0) = 0.0;
    r(k, k) = 0.0;
    r(0, k) = -1.0;
    r(k, 0) = 1.0;
    return {r};
}

Complex BoundaryChart::map(const VectorXd& y) const {
    const VectorXd u = rot * y;
    const int n = static_cast<int>(u.size());
    const double denom = 1.0 - u[n - 2];
    return Complex(u[0], u[1]) / denom;
}

Complex BoundaryChart::map_derivative(const VectorXd& y, const VectorXd& ydot) const {
    const VectorXd u = rot * y, ud = rot * ydot;
    const int n = static_cast<int>(u.size());
    const double denom = 1.0 - u[n - 2];
    return (Complex(ud[0], ud[1]) * denom + Complex(u[0], u[1]) * ud[n - 2]) /
           (denom * denom);
}

double BoundaryChart::distance_to_infinity(const VectorXd& y) const {
    const VectorXd u = rot * y;
    const int n = static_cast<int>(u.size());
    VectorXd sph = u.head(n - 1);
    VectorXd pole = VectorXd::Zero(n - 1);
    pole[n - 2] = 1.0;
    return (sph - pole).norm();
}

BoundaryChart choose_chart(const GeodesicLine& line) {
    const int n = static_cast<int>(line.plus.size());
    BoundaryChart std_chart = BoundaryChart::standard(n);
    if (std_chart.distance_to_infinity(line.plus) > 0.1 &&
        std_chart.distance_to_infinity(line.minus) > 0.1)
        return std_chart;
    BoundaryChart rot_chart = BoundaryChart::rotated(n);
    if (rot_chart.distance_to_infinity(line.plus) > 0.1 &&
        rot_chart.distance_to_infinity(line.minus) > 0.1)
        return rot_chart;
    throw NumericError("choose_chart: endpoints straddle both chart infinities");
}

BoundaryVelocity dp_boundary(const UnitTangent& ut, const TangentT1& X,
                             const BoundaryChart& chart) {
    BoundaryVelocity out;
    const int n = ut.ambient_dim();
    for (int sign : {+1, -1}) {
        const VectorXd u = (sign > 0) ? VectorXd(ut.x + ut.v) : VectorXd(ut.x - ut.v);
        const VectorXd udot =
            (sign > 0) ? VectorXd(X.xdot + X.vdot) : VectorXd(X.xdot - X.vdot);
        const VectorXd y = u / u[n - 1];
        const VectorXd ydot = udot / u[n - 1] - u * (udot[n - 1] / (u[n - 1] * u[n - 1]));
        const Complex z = chart.map(y);
        const Complex zdot = chart.map_derivative(y, ydot);
        if (sign > 0) {
            out.zplus = z;
            out.zplus_dot = zdot;
        } else {
            out.zminus = z;
            out.zminus_dot = zdot;
        }
    }
    return out;
}

BoundaryVelocity dp_boundary(const UnitTangent& ut, const TangentT1& X) {
    return dp_boundary(ut, X, choose_chart(project_to_line(ut)));
}

std::pair<Complex, Complex> dp_standard_form(double alpha, double beta, double gamma,
                                             double delta) {
    return {Complex(delta - beta, alpha - gamma), Complex(delta + beta, alpha + gamma)};
}

Complex g3_inner(const BoundaryVelocity& X, const BoundaryVelocity& Y) {
    const Complex dz = X.zplus - X.zminus;
    return -4.0 / (dz * dz) * 0.5 *
           (X.zplus_dot * Y.zminus_dot + Y.zplus_dot * X.zminus_dot);
}

Complex g3_inner(const UnitTangent& ut, const TangentT1& X, const TangentT1& Y) {
    const BoundaryChart chart = choose_chart(project_to_line(ut));
    return g3_inner(dp_boundary(ut, X, chart), dp_boundary(ut, Y, chart));
}

}  // namespace spaceforms
