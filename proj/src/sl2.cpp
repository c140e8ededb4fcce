#include "spaceforms/sl2.hpp"

#include <cmath>

namespace spaceforms {

namespace {
const Complex I{0.0, 1.0};

double dist_to_lattice(double x, double step) {
    // distance of x to step * Z
    const double r = std::remainder(x, step);
    return std::abs(r);
}
}  // namespace

Complex mat2_inner(const Matrix2c& m, const Matrix2c& n) {
    return 0.5 * ((m * n).trace() - m.trace() * n.trace());
}

Matrix2c f_iso(const VectorXcd& z) {
    Matrix2c m;
    m << -z[0] - I * z[3], -z[1] - I * z[2], -z[1] + I * z[2], z[0] - I * z[3];
    return m;
}

VectorXcd f_iso_inverse(const Matrix2c& m) {
    VectorXcd z(4);
    z[0] = (m(1, 1) - m(0, 0)) / 2.0;
    z[1] = -(m(0, 1) + m(1, 0)) / 2.0;
    z[2] = (m(1, 0) - m(0, 1)) / (2.0 * I);
    z[3] = -(m(0, 0) + m(1, 1)) / (2.0 * I);
    return z;
}

Matrix2c cross(const Matrix2c& v, const Matrix2c& w) {
    return (v * w - w * v) / (2.0 * I);
}

Matrix2c basis_v1() {
    Matrix2c m;
    m << 1, 0, 0, -1;
    return m;
}
Matrix2c basis_v2() {
    Matrix2c m;
    m << 0, 1, 1, 0;
    return m;
}
Matrix2c basis_v3() {
    Matrix2c m;
    m << 0, -I, I, 0;
    return m;
}

Matrix2c sl2_exp(const Matrix2c& v) {
    const Complex w = mat2_inner(v, v);
    return cosh_sqrt(w) * Matrix2c::Identity() + sinhc_sqrt(w) * v;
}

Classification classify_tangent(const Matrix2c& v, double band) {
    if (v.norm() < band) return {IsometryType::Identity, v.norm() > band / 16};
    const Complex w = mat2_inner(v, v);  // = |V|^2
    if (std::abs(w) < band) return {IsometryType::Parabolic, std::abs(w) > band / 16};
    const Complex mu = std::sqrt(w);  // principal branch, Re >= 0
    const double re = mu.real(), im = std::abs(mu.imag());
    const bool re_zero = re < band;
    const double im_lattice = dist_to_lattice(im, 2.0 * M_PI);
    if (re_zero && im_lattice < band && im > band)
        return {IsometryType::Identity, true};  // |V| in 2 i pi Z, V != 0
    if (re_zero) return {IsometryType::Elliptic, im_lattice < 16 * band};
    if (im_lattice < band) return {IsometryType::Hyperbolic, false};
    return {IsometryType::Loxodromic, im_lattice < 16 * band || re < 16 * band};
}

Classification classify_element(const Matrix2c& a, double band) {
    const Complex t = a.trace();
    if ((a - Matrix2c::Identity()).norm() < band ||
        (a + Matrix2c::Identity()).norm() < band)
        return {IsometryType::Identity, false};
    const bool tr_real = std::abs(t.imag()) < band;
    if (tr_real) {
        const double tr = std::abs(t.real());
        if (std::abs(tr - 2.0) < band) return {IsometryType::Parabolic, true};
        if (tr < 2.0) return {IsometryType::Elliptic, std::abs(tr - 2.0) < 16 * band};
        return {IsometryType::Hyperbolic, std::abs(tr - 2.0) < 16 * band};
    }
    return {IsometryType::Loxodromic, std::abs(t.imag()) < 16 * band};
}

const char* isometry_type_name(IsometryType t) {
    switch (t) {
        case IsometryType::Identity: return "identity";
        case IsometryType::Elliptic: return "elliptic";
        case IsometryType::Parabolic: return "parabolic";
        case IsometryType::Hyperbolic: return "hyperbolic";
        case IsometryType::Loxodromic: return "loxodromic";
    }
    return "?";
}

std::pair<Complex, Complex> axis_of_involution(const Matrix2c& m) {
    const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0);
    const Complex inf{std::numeric_limits<double>::infinity(), 0.0};
    auto first = [&]() -> Complex {
        if (std::abs(c) >= std::abs(a - I)) {
            if (std::abs(c) == 0.0) return inf;
            return (a + I) / c;
        }
        return -b / (a - I);
    };
    auto second = [&]() -> Complex {
        if (std::abs(c) >= std::abs(a + I)) {
            if (std::abs(c) == 0.0) return inf;
            return (a - I) / c;
        }
        return -b / (a + I);
    };
    return {first(), second()};
}

std::pair<Complex, Complex> axis(const Matrix2c& v) {
    const Complex w = mat2_inner(v, v);
    if (std::abs(w) < 1e-12) throw NumericError("axis: isotropic tangent has no axis");
    // scale to det = 1 (principal root)
    const Matrix2c m = v / std::sqrt(v.determinant());
    return axis_of_involution(m);
}

Complex mobius_apply(const Matrix2c& m, Complex z) {
    const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    if (std::isinf(z.real()) || std::isinf(z.imag())) {
        if (std::abs(c) == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
        return a / c;
    }
    const Complex den = c * z + d;
    if (std::abs(den) == 0.0) return {std::numeric_limits<double>::infinity(), 0.0};
    return (a * z + b) / den;
}

std::vector<Complex> boundary_fixed_points(const Matrix2c& m, double band) {
    if (psl_equal(m, Matrix2c::Identity(), band))
        throw NumericError("boundary_fixed_points: the identity fixes everything");
    const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const Complex inf{std::numeric_limits<double>::infinity(), 0.0};
    // fixed points of (az+b)/(cz+d): c z^2 + (d-a) z - b = 0
    if (std::abs(c) < band) {
        if (std::abs(d - a) < band) return {inf};  // parabolic fixing infinity
        return {b / (d - a), inf};
    }
    const Complex disc = (d - a) * (d - a) + 4.0 * b * c;  // = tr^2 - 4 for det 1
    if (std::abs(disc) < band * band) return {(a - d) / (2.0 * c)};
    const Complex s = std::sqrt(disc);
    return {(a - d + s) / (2.0 * c), (a - d - s) / (2.0 * c)};
}

Matrix2c embed_h3(const VectorXd& x) { return f_iso(pseudo_quadric_embed(x, 3)); }
Matrix2c embed_sl2r(const VectorXd& x) { return f_iso(pseudo_quadric_embed(x, 2)); }
Matrix2c embed_su2(const VectorXd& x) { return f_iso(pseudo_quadric_embed(x, 0)); }

bool psl_equal(const Matrix2c& a, const Matrix2c& b, double tol) {
    return (a - b).norm() < tol || (a + b).norm() < tol;
}

Matrix2c random_sl2(Rng& rng, double scale) {
    return sl2_exp(random_traceless(rng, scale));
}

Matrix2c random_traceless(Rng& rng, double scale) {
    Matrix2c v;
    const Complex a = scale * rng.cnormal(), b = scale * rng.cnormal(),
                  c = scale * rng.cnormal();
    v << a, b, c, -a;
    return v;
}

}  // namespace spaceforms
