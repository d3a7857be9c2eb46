#pragma once

// Unit-sphere geometry: distances and angles, triangle excess, spherical versions
// of the triangle and quadrilateral inequalities, polyline metrics, hemisphere
// hulls and the curvature bound for spherical polylines.

#include <dna/config.hpp>
#include <dna/inequalities.hpp>
#include <dna/planar.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace dna {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::hypot(a.x, a.y, a.z); }
constexpr double det(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

inline Vec3 normalized(Vec3 a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DegenerateInput("normalized: zero or non-finite vector");
    }
    return (1.0 / n) * a;
}

/// Point on the unit sphere.
class SphPoint {
public:
    /// Normalizes v; throws on a zero or non-finite vector.
    explicit SphPoint(Vec3 v) : v_(normalized(v)) {}
    SphPoint(double x, double y, double z) : SphPoint(Vec3{x, y, z}) {}

    const Vec3& v() const { return v_; }
    friend bool operator==(const SphPoint&, const SphPoint&) = default;

private:
    Vec3 v_;
};

inline double sph_distance(const SphPoint& u, const SphPoint& v) {
    return std::atan2(norm(cross(u.v(), v.v())), dot(u.v(), v.v()));
}

/// Angle at v between the geodesics v->u and v->w.
inline double sph_angle(const SphPoint& u, const SphPoint& v, const SphPoint& w) {
    const Vec3 nu = cross(v.v(), u.v());
    const Vec3 nw = cross(v.v(), w.v());
    const double scale = 1e-14;
    if (norm(nu) <= scale || norm(nw) <= scale) {
        throw DegenerateInput("sph_angle: coincident or antipodal points");
    }
    return std::atan2(std::abs(det(v.v(), u.v(), w.v())), dot(nu, nw));
}

namespace detail {

struct QuarterSides {
    double S, X, Y, Z;
};

/// Validates sides and returns S = (a+b+c)/4 and X = S - a/2, Y = S - b/2, Z = S - c/2.
inline QuarterSides quarter_sides(double a, double b, double c) {
    for (const double s : {a, b, c}) {
        if (!std::isfinite(s) || s < 0.0 || s > pi) {
            throw InvalidInput("spherical triangle: side outside [0, pi]");
        }
    }
    const double slack = 1e-12;
    if (a > b + c + slack || b > a + c + slack || c > a + b + slack) {
        throw InvalidInput("spherical triangle: triangle inequality violated");
    }
    if (a + b + c > two_pi + slack) {
        throw InvalidInput("spherical triangle: perimeter exceeds 2pi");
    }
    const double S = (a + b + c) / 4.0;
    return {S, std::max(S - a / 2.0, 0.0), std::max(S - b / 2.0, 0.0), std::max(S - c / 2.0, 0.0)};
}

inline void require_proper(const QuarterSides& q) {
    if (!(q.X > 0.0 && q.Y > 0.0 && q.Z > 0.0 && q.S < pi / 2.0)) {
        throw DegenerateInput("spherical triangle: degenerate sides");
    }
}

} // namespace detail

/// Area of the spherical triangle with the given sides (L'Huilier).
inline double sph_triangle_excess(double a, double b, double c) {
    const auto q = detail::quarter_sides(a, b, c);
    if (q.S >= pi / 2.0) {
        return two_pi;
    }
    const double prod = std::tan(q.S) * std::tan(q.X) * std::tan(q.Y) * std::tan(q.Z);
    return 4.0 * std::atan(std::sqrt(std::max(prod, 0.0)));
}

/// Spherical angle opposite side a.
inline double sph_half_angle(double a, double b, double c) {
    const auto q = detail::quarter_sides(a, b, c);
    detail::require_proper(q);
    const double r = std::sin(2.0 * q.Y) * std::sin(2.0 * q.Z) / (std::sin(2.0 * q.X) * std::sin(2.0 * q.S));
    return 2.0 * std::atan(std::sqrt(r));
}

/// Angles of the flat triangle with sides a, b, c, opposite a, b, c respectively.
inline std::array<double, 3> planar_angles(double a, double b, double c) {
    const auto q = detail::quarter_sides(a, b, c);
    detail::require_proper(q);
    const auto half = [&](double x, double y, double z) { return 2.0 * std::atan(std::sqrt(y * z / (x * q.S))); };
    return {half(q.X, q.Y, q.Z), half(q.Y, q.Z, q.X), half(q.Z, q.X, q.Y)};
}

/// Triangle with sides a = BC, b = CA, c = AB and opposite angles alpha, beta, gamma.
struct SphTriangle {
    double a = 0.0, b = 0.0, c = 0.0;
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    double E = 0.0;
    /// Angles of the flat triangle with the same sides.
    double alpha_p = 0.0, beta_p = 0.0, gamma_p = 0.0;

    static SphTriangle from_sides(double a, double b, double c) {
        SphTriangle t{a, b, c};
        t.alpha = sph_half_angle(a, b, c);
        t.beta = sph_half_angle(b, c, a);
        t.gamma = sph_half_angle(c, a, b);
        t.E = sph_triangle_excess(a, b, c);
        const auto p = planar_angles(a, b, c);
        t.alpha_p = p[0];
        t.beta_p = p[1];
        t.gamma_p = p[2];
        return t;
    }

    static SphTriangle from_points(const SphPoint& A, const SphPoint& B, const SphPoint& C) {
        return from_sides(sph_distance(B, C), sph_distance(C, A), sph_distance(A, B));
    }
};

/// alpha - alpha' < (beta - beta') + (gamma - gamma').
inline InequalityMargin lemma1s_margin(double a, double b, double c) {
    const auto t = SphTriangle::from_sides(a, b, c);
    return InequalityMargin::make(t.alpha - t.alpha_p, (t.beta - t.beta_p) + (t.gamma - t.gamma_p));
}

/// (a + c) / (2pi - beta) < (a + b + c) / (2pi - E), beta the angle between a and c.
inline InequalityMargin lemma2s_margin(double a, double b, double c) {
    const auto t = SphTriangle::from_sides(a, b, c);
    return InequalityMargin::make((a + c) / (two_pi - t.beta), (a + b + c) / (two_pi - t.E));
}

namespace detail {

inline double min_dot(Vec3 c, std::span<const SphPoint> pts) {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        m = std::min(m, dot(c, p.v()));
    }
    return m;
}

} // namespace detail

/// Unit vector c with c . v >= hemisphere_margin for every point, if one is found.
/// Tries the normalized vertex sum, then subgradient ascent on min(c . v).
inline std::optional<Vec3> hemisphere_center(std::span<const SphPoint> pts) {
    if (pts.empty()) {
        return std::nullopt;
    }
    const double margin = tolerances().hemisphere_margin;
    Vec3 sum{};
    for (const auto& p : pts) {
        sum = sum + p.v();
    }
    Vec3 c = norm(sum) > 1e-12 ? normalized(sum) : pts[0].v();
    double best = detail::min_dot(c, pts);
    Vec3 best_c = c;
    for (int it = 0; it < 2000 && best < margin; ++it) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (dot(c, pts[i].v()) < dot(c, pts[worst].v())) {
                worst = i;
            }
        }
        const double step = 0.5 / (1.0 + 0.05 * it);
        const Vec3 moved = c + step * pts[worst].v();
        if (norm(moved) < 1e-12) {
            break;
        }
        c = normalized(moved);
        if (const double m = detail::min_dot(c, pts); m > best) {
            best = m;
            best_c = c;
        }
    }
    if (best < margin) {
        return std::nullopt;
    }
    return best_c;
}

/// Closed geodesic polyline inside an open hemisphere.
class SphPolyline {
public:
    explicit SphPolyline(std::vector<SphPoint> vertices) : v_(std::move(vertices)) {
        if (v_.size() < 3) {
            throw InvalidInput("SphPolyline: need at least 3 vertices");
        }
        const double tol = tolerances().eps_point;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            const double d = sph_distance(v_[i], v_[(i + 1) % v_.size()]);
            if (d <= tol) {
                throw DegenerateInput("SphPolyline: consecutive vertices coincide");
            }
        }
        if (!hemisphere_center(v_)) {
            throw InvalidInput("SphPolyline: vertices not inside an open hemisphere");
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<SphPoint>& vertices() const { return v_; }
    const SphPoint& at(std::ptrdiff_t i) const {
        const auto n = static_cast<std::ptrdiff_t>(v_.size());
        return v_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

private:
    std::vector<SphPoint> v_;
};

inline double sph_length(const SphPolyline& p) {
    double L = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
        L += sph_distance(p.at(i), p.at(i + 1));
    }
    return L;
}

/// Sum of (pi - angle) over the vertices.
inline double sph_full_rotation(const SphPolyline& p) {
    double V = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
        V += pi - sph_angle(p.at(i - 1), p.at(i), p.at(i + 1));
    }
    return V;
}

inline double sph_mean_curvature(const SphPolyline& p) { return sph_full_rotation(p) / sph_length(p); }

/// Convex spherical polygon, counterclockwise seen from outside the sphere.
struct SphConvexPolygon {
    std::vector<SphPoint> vertices;
    double area = 0.0;
    double perimeter = 0.0;
    /// Centre of the gnomonic chart used to build it.
    Vec3 center;

    /// Point inside or on the boundary, up to slack in the edge-plane test.
    bool contains(const SphPoint& x, double slack = 1e-9) const {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const Vec3 n = cross(vertices[i].v(), vertices[(i + 1) % vertices.size()].v());
            if (dot(n, x.v()) < -slack * std::max(norm(n), 1e-300)) {
                return false;
            }
        }
        return dot(center, x.v()) > 0.0;
    }
};

/// Area of a convex spherical polygon from its interior angles.
inline double sph_polygon_area(std::span<const SphPoint> ccw) {
    const auto n = static_cast<std::ptrdiff_t>(ccw.size());
    double sum = 0.0;
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        sum += sph_angle(ccw[static_cast<std::size_t>((i + n - 1) % n)], ccw[static_cast<std::size_t>(i)],
                         ccw[static_cast<std::size_t>((i + 1) % n)]);
    }
    return sum - static_cast<double>(n - 2) * pi;
}

/// Convex hull through the gnomonic projection centred on a hemisphere witness.
inline SphConvexPolygon sph_hull(std::span<const SphPoint> pts) {
    const auto c = hemisphere_center(pts);
    if (!c) {
        throw InvalidInput("sph_hull: points not inside an open hemisphere");
    }
    // right-handed frame (e1, e2, c)
    const Vec3 helper = std::abs(c->x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 e1 = normalized(cross(helper, *c));
    const Vec3 e2 = cross(*c, e1);
    std::vector<Point2> flat;
    flat.reserve(pts.size());
    for (const auto& p : pts) {
        const double h = dot(p.v(), *c);
        flat.push_back({dot(p.v(), e1) / h, dot(p.v(), e2) / h});
    }
    const ConvexPolygon2 hull = convex_hull(std::span<const Point2>(flat));
    SphConvexPolygon out;
    out.center = *c;
    for (const auto& q : hull.vertices()) {
        const auto it = std::find(flat.begin(), flat.end(), q);
        out.vertices.push_back(pts[static_cast<std::size_t>(it - flat.begin())]);
    }
    out.area = sph_polygon_area(out.vertices);
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        out.perimeter += sph_distance(out.vertices[i], out.vertices[(i + 1) % out.vertices.size()]);
    }
    return out;
}

inline SphConvexPolygon sph_hull(const SphPolyline& p) { return sph_hull(std::span<const SphPoint>(p.vertices())); }

struct SphVerdict {
    double L = 0.0;
    double V = 0.0;
    double T = 0.0;
    /// Hull area S and perimeter.
    double S = 0.0;
    double P = 0.0;
    /// (2pi - S) / P, the curvature of the hull boundary.
    double T1 = 0.0;
    double margin = 0.0;
};

/// T(polyline) against (2pi - S) / L(hull boundary).
inline SphVerdict theorem_s_check(const SphPolyline& p) {
    SphVerdict v;
    v.L = sph_length(p);
    v.V = sph_full_rotation(p);
    v.T = v.V / v.L;
    const auto hull = sph_hull(p);
    v.S = hull.area;
    v.P = hull.perimeter;
    v.T1 = (two_pi - v.S) / v.P;
    v.margin = v.T - v.T1;
    return v;
}

/// Convex spherical quadrilateral ABCD with diagonals AC, BD meeting at O.
class SphQuad {
public:
    SphQuad(const SphPoint& A, const SphPoint& B, const SphPoint& C, const SphPoint& D) : p_{A, B, C, D} {
        const auto center = hemisphere_center(p_);
        if (!center) {
            throw InvalidInput("SphQuad: vertices not inside an open hemisphere");
        }
        // counterclockwise seen from outside: swap B and D otherwise
        if (det(*center, p_[0].v(), p_[1].v()) + det(*center, p_[1].v(), p_[2].v()) +
                det(*center, p_[2].v(), p_[3].v()) + det(*center, p_[3].v(), p_[0].v()) <
            0.0) {
            std::swap(p_[1], p_[3]);
        }
        const double eps = tolerances().eps_area;
        for (std::size_t i = 0; i < 4; ++i) {
            if (det(p_[(i + 3) % 4].v(), p_[i].v(), p_[(i + 1) % 4].v()) <= eps) {
                throw InvalidInput("SphQuad: vertices not in strictly convex position");
            }
        }
        const Vec3 nac = cross(p_[0].v(), p_[2].v());
        const Vec3 nbd = cross(p_[1].v(), p_[3].v());
        Vec3 o = normalized(cross(nac, nbd));
        if (dot(o, *center) < 0.0) {
            o = -o;
        }
        o_ = SphPoint(o);
        const auto on_arc = [&](const SphPoint& u, const SphPoint& w) {
            return std::abs(sph_distance(u, o_) + sph_distance(o_, w) - sph_distance(u, w)) <= 1e-9;
        };
        if (!on_arc(p_[0], p_[2]) || !on_arc(p_[1], p_[3])) {
            throw InvalidInput("SphQuad: diagonals do not intersect inside");
        }
        a_ = sph_distance(p_[0], p_[1]);
        b_ = sph_distance(p_[1], p_[2]);
        c_ = sph_distance(p_[2], p_[3]);
        d_ = sph_distance(p_[3], p_[0]);
        m_ = sph_distance(p_[1], p_[3]);
        n_ = sph_distance(p_[0], p_[2]);
        phi_ = sph_angle(p_[0], o_, p_[1]);
        for (std::size_t i = 0; i < 4; ++i) {
            const SphPoint& u = p_[i];
            const SphPoint& w = p_[(i + 1) % 4];
            e_[i] = sph_triangle_excess(sph_distance(u, w), sph_distance(w, o_), sph_distance(o_, u));
        }
    }

    const SphPoint& A() const { return p_[0]; }
    const SphPoint& B() const { return p_[1]; }
    const SphPoint& C() const { return p_[2]; }
    const SphPoint& D() const { return p_[3]; }
    const SphPoint& O() const { return o_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    /// Diagonals BD and AC.
    double m() const { return m_; }
    double n() const { return n_; }
    double phi() const { return phi_; }
    /// Areas of OAB, OBC, OCD, ODA.
    double E(std::size_t i) const { return e_.at(i - 1); }
    double E() const { return e_[0] + e_[1] + e_[2] + e_[3]; }
    double x() const { return (a_ + c_) / (m_ + n_); }
    double y() const { return (b_ + d_) / (m_ + n_); }
    double z() const { return (a_ + c_ + m_ + n_) / (a_ + b_ + c_ + d_); }

private:
    std::array<SphPoint, 4> p_;
    SphPoint o_{0.0, 0.0, 1.0};
    double a_ = 0.0, b_ = 0.0, c_ = 0.0, d_ = 0.0, m_ = 0.0, n_ = 0.0, phi_ = 0.0;
    std::array<double, 4> e_{};
};

/// (a + c + m + n) / (2pi - (E1 + E3) + 2phi) < (a + b + c + d) / (2pi - E).
inline InequalityMargin lemma3s_margin(const SphQuad& q) {
    return InequalityMargin::make((q.a() + q.c() + q.m() + q.n()) / (two_pi - (q.E(1) + q.E(3)) + 2.0 * q.phi()),
                                  (q.a() + q.b() + q.c() + q.d()) / (two_pi - q.E()));
}

/// x cot x on [0, pi/2), continuous at 0.
inline double f_xcotx(double x) {
    if (!(x >= 0.0 && x < pi / 2.0)) {
        throw DomainError("f_xcotx: argument outside [0, pi/2)");
    }
    if (x == 0.0) {
        return 1.0;
    }
    return x / std::tan(x);
}

/// f(Y) f(Z) - f(X) f(X + Y + Z).
inline double probe_4s(double X, double Y, double Z) {
    return f_xcotx(Y) * f_xcotx(Z) - f_xcotx(X) * f_xcotx(X + Y + Z);
}

/// f(Y) f(Z) - f(Y + Z).
inline double probe_5s(double Y, double Z) { return f_xcotx(Y) * f_xcotx(Z) - f_xcotx(Y + Z); }

/// (sin t / t)^2 - cos t, positive on (0, pi).
inline double probe_sinc_cos(double t) {
    if (!(t > 0.0 && t < pi)) {
        throw DomainError("probe_sinc_cos: argument outside (0, pi)");
    }
    const double s = std::sin(t) / t;
    return s * s - std::cos(t);
}

/// ln f((x + y) / 2) - (ln f(x) + ln f(y)) / 2; non-negative by concavity.
inline double probe_log_f_midpoint(double x, double y) {
    return std::log(f_xcotx((x + y) / 2.0)) - 0.5 * (std::log(f_xcotx(x)) + std::log(f_xcotx(y)));
}

} // namespace dna
