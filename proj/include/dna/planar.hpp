#pragma once

// Planar primitives: points, directions, closed polylines, curvature metrics
// and strictly convex hulls.

#include <dna/config.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dna {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Length of the bounding-box diagonal; the scale for relative tolerances.
inline double span_of(std::span<const Point2> pts) {
    if (pts.empty()) {
        return 0.0;
    }
    double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
    for (const auto& p : pts) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return std::hypot(x1 - x0, y1 - y0);
}

/// Unit direction on the circle, stored as an angle in [0, 2pi).
class Direction {
public:
    Direction() = default;
    explicit Direction(double theta) : theta_(canonical(theta)) {}

    /// Direction of a non-zero vector.
    static Direction of(Point2 v) {
        if (v.x == 0.0 && v.y == 0.0) {
            throw DegenerateInput("direction of a zero vector");
        }
        return Direction(std::atan2(v.y, v.x));
    }
    static Direction from(Point2 a, Point2 b) { return of(b - a); }

    double theta() const { return theta_; }
    Point2 unit() const { return {std::cos(theta_), std::sin(theta_)}; }

private:
    static double canonical(double t) {
        double r = std::fmod(t, two_pi);
        if (r < 0.0) {
            r += two_pi;
        }
        // fmod of a value just below 0 can round up to exactly 2pi
        if (r >= two_pi) {
            r = 0.0;
        }
        return r;
    }

    double theta_ = 0.0;
};

/// Intrinsic distance on the unit circle, in [0, pi].
inline double rho(Direction u, Direction v) {
    const double d = std::abs(u.theta() - v.theta());
    return std::min(d, two_pi - d);
}

/// Sign of the turn p -> q -> r: +1 counterclockwise, -1 clockwise, 0 collinear.
/// The collinearity threshold is relative to the squared span of the triple.
inline int orient(Point2 p, Point2 q, Point2 r) {
    const double area2 = cross(q - p, r - p);
    const double s = std::max({distance(p, q), distance(p, r), distance(q, r)});
    if (std::abs(area2) <= tolerances().eps_area * s * s) {
        return 0;
    }
    return area2 > 0.0 ? 1 : -1;
}

/// Exterior angle at b of the path a -> b -> c, in [0, pi].
inline double turn_angle(Point2 a, Point2 b, Point2 c) {
    if (a == b || b == c) {
        throw DegenerateInput("turn_angle: coincident consecutive points");
    }
    return rho(Direction::from(a, b), Direction::from(b, c));
}

/// Cyclic vertex list on the plane; the closing edge is implicit.
class ClosedPolyline2 {
public:
    ClosedPolyline2() = default;

    explicit ClosedPolyline2(std::vector<Point2> vertices) : v_(std::move(vertices)) {
        if (v_.size() < 3) {
            throw DegenerateInput("closed polyline needs at least 3 vertices");
        }
        for (const auto& p : v_) {
            if (!is_finite(p)) {
                throw InvalidInput("closed polyline has a non-finite coordinate");
            }
        }
        const double tol = tolerances().eps_point * std::max(span_of(v_), 1e-300);
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (distance(v_[i], v_[(i + 1) % v_.size()]) <= tol) {
                throw DegenerateInput("closed polyline has coincident consecutive vertices");
            }
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<Point2>& vertices() const { return v_; }

    /// Cyclic access; any integer index is reduced modulo size().
    const Point2& at(std::ptrdiff_t i) const {
        const auto n = static_cast<std::ptrdiff_t>(v_.size());
        return v_[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    const Point2& operator[](std::size_t i) const { return v_[i]; }

    double span() const { return span_of(v_); }

private:
    std::vector<Point2> v_;
};

inline double length(const ClosedPolyline2& poly) {
    double L = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        L += distance(poly.at(i), poly.at(i + 1));
    }
    return L;
}

inline double full_rotation(const ClosedPolyline2& poly) {
    double V = 0.0;
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        V += turn_angle(poly.at(i - 1), poly.at(i), poly.at(i + 1));
    }
    return V;
}

inline double mean_abs_curvature(const ClosedPolyline2& poly) {
    const double L = length(poly);
    if (!(L > 0.0)) {
        throw DegenerateInput("mean_abs_curvature: zero-length polyline");
    }
    return full_rotation(poly) / L;
}

/// Drops vertices whose turn is below eps_collinear and merges coincident
/// neighbours, repeating until nothing changes.
inline ClosedPolyline2 normalize(std::span<const Point2> pts) {
    const auto& tol = tolerances();
    const double merge = tol.eps_point * std::max(span_of(pts), 1e-300);
    std::vector<Point2> v(pts.begin(), pts.end());
    for (const auto& p : v) {
        if (!is_finite(p)) {
            throw InvalidInput("normalize: non-finite coordinate");
        }
    }
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        std::vector<Point2> kept;
        kept.reserve(v.size());
        for (const auto& p : v) {
            if (kept.empty() || distance(kept.back(), p) > merge) {
                kept.push_back(p);
            } else {
                changed = true;
            }
        }
        while (kept.size() >= 2 && distance(kept.front(), kept.back()) <= merge) {
            kept.pop_back();
            changed = true;
        }
        v = std::move(kept);
        if (v.size() < 3) {
            break;
        }
        // Remove at most one straight vertex per pass so neighbours are re-evaluated.
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[(i + v.size() - 1) % v.size()];
            const auto& c = v[(i + 1) % v.size()];
            if (turn_angle(a, v[i], c) < tol.eps_collinear) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) {
        throw DegenerateInput("normalize: fewer than 3 vertices survive");
    }
    return ClosedPolyline2(std::move(v));
}

inline ClosedPolyline2 normalize(const ClosedPolyline2& poly) {
    return normalize(std::span<const Point2>(poly.vertices()));
}

/// Strictly convex polygon, vertices counterclockwise.
class ConvexPolygon2 {
public:
    ConvexPolygon2() = default;

    explicit ConvexPolygon2(std::vector<Point2> ccw) : v_(std::move(ccw)) {
        if (v_.size() < 3) {
            throw DegenerateInput("convex polygon needs at least 3 vertices");
        }
        const std::size_t n = v_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (orient(v_[(i + n - 1) % n], v_[i], v_[(i + 1) % n]) <= 0) {
                throw InvalidInput("polygon is not strictly convex counterclockwise");
            }
        }
        cum_.resize(n + 1, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            cum_[i + 1] = cum_[i] + distance(v_[i], v_[(i + 1) % n]);
        }
        // turning must total 2pi, otherwise the list winds more than once
        double turning = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            turning += turn_angle(v_[(i + n - 1) % n], v_[i], v_[(i + 1) % n]);
        }
        if (std::abs(turning - two_pi) > 1e-6) {
            throw InvalidInput("polygon winds more than once");
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<Point2>& vertices() const { return v_; }
    const Point2& at(std::ptrdiff_t i) const {
        const auto n = static_cast<std::ptrdiff_t>(v_.size());
        return v_[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    double perimeter() const { return cum_.back(); }
    double span() const { return span_of(v_); }

    /// Absolute distance tolerance derived from eps_point and the polygon span.
    double tol() const { return tolerances().eps_point * std::max(span(), 1e-300); }

    /// Signed distance of p to the line of edge j; positive inside.
    double edge_distance(std::size_t j, Point2 p) const {
        const Point2 a = v_[j];
        const Point2 b = v_[(j + 1) % v_.size()];
        return cross(b - a, p - a) / distance(a, b);
    }

    bool contains(Point2 p, double slack) const {
        for (std::size_t j = 0; j < v_.size(); ++j) {
            if (edge_distance(j, p) < -slack) {
                return false;
            }
        }
        return true;
    }
    bool contains(Point2 p) const { return contains(p, tol()); }

    bool strictly_inside(Point2 p) const {
        for (std::size_t j = 0; j < v_.size(); ++j) {
            if (edge_distance(j, p) <= tol()) {
                return false;
            }
        }
        return true;
    }

    /// Arc-length parameter in [0, perimeter) of a boundary point, counterclockwise
    /// from vertex 0; empty when p is not on the boundary.
    std::optional<double> locate(Point2 p) const {
        const double t = tol();
        const std::size_t n = v_.size();
        for (std::size_t j = 0; j < n; ++j) {
            if (distance(p, v_[j]) <= t) {
                return cum_[j];
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Point2 a = v_[j];
            const Point2 b = v_[(j + 1) % n];
            const double len = cum_[j + 1] - cum_[j];
            const double along = dot(p - a, b - a) / len;
            if (along > 0.0 && along < len && std::abs(edge_distance(j, p)) <= t) {
                return cum_[j] + along;
            }
        }
        return std::nullopt;
    }
    bool on_boundary(Point2 p) const { return locate(p).has_value(); }

    /// Boundary point at arc-length parameter s (taken modulo the perimeter).
    Point2 point_at(double s) const {
        const double P = perimeter();
        s = std::fmod(s, P);
        if (s < 0.0) {
            s += P;
        }
        const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
        const auto j = static_cast<std::size_t>(std::distance(cum_.begin(), it)) - 1;
        const double along = s - cum_[j];
        if (along <= 0.0) {
            return v_[j];
        }
        const Point2 a = v_[j];
        const Point2 b = v_[(j + 1) % v_.size()];
        return a + (along / (cum_[j + 1] - cum_[j])) * (b - a);
    }

    /// Parameter of vertex j.
    double vertex_param(std::size_t j) const { return cum_[j]; }

    /// Boundary length travelled from s0 to s1 in the given direction, in [0, P).
    double arc_length(double s0, double s1, bool ccw) const {
        const double P = perimeter();
        double d = ccw ? s1 - s0 : s0 - s1;
        d = std::fmod(d, P);
        if (d < 0.0) {
            d += P;
        }
        return d;
    }

    /// Hull vertices met strictly inside a walk of the given length starting at
    /// parameter s0, in walking order. The walk may wrap around several times.
    std::vector<Point2> corners_along(double s0, double len, bool ccw) const {
        const double t = tol();
        const double P = perimeter();
        std::vector<std::pair<double, Point2>> hits;
        for (std::size_t j = 0; j < v_.size(); ++j) {
            for (double d = arc_length(s0, cum_[j], ccw); d < len - t; d += P) {
                if (d > t) {
                    hits.emplace_back(d, v_[j]);
                }
            }
        }
        std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Point2> out;
        out.reserve(hits.size());
        for (const auto& h : hits) {
            out.push_back(h.second);
        }
        return out;
    }

    /// Hull vertices met strictly between s0 and s1 walking in the given direction.
    std::vector<Point2> corners_between(double s0, double s1, bool ccw) const {
        return corners_along(s0, arc_length(s0, s1, ccw), ccw);
    }

private:
    std::vector<Point2> v_;
    std::vector<double> cum_;
};

/// Strictly convex hull (Andrew's monotone chain, collinear points dropped).
inline ConvexPolygon2 convex_hull(std::span<const Point2> pts) {
    std::vector<Point2> p(pts.begin(), pts.end());
    std::sort(p.begin(), p.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    p.erase(std::unique(p.begin(), p.end()), p.end());
    if (p.size() < 3) {
        throw DegenerateInput("convex_hull: fewer than 3 distinct points");
    }
    std::vector<Point2> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 0) {
            --k;
        }
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && orient(h[k - 2], h[k - 1], p[i]) <= 0) {
            --k;
        }
        h[k++] = p[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) {
        throw DegenerateInput("convex_hull: all points collinear");
    }
    return ConvexPolygon2(std::move(h));
}

inline ConvexPolygon2 convex_hull(const ClosedPolyline2& poly) {
    return convex_hull(std::span<const Point2>(poly.vertices()));
}

struct PolylineMetrics {
    double L = 0.0;
    double V = 0.0;
    double T = 0.0;
    double P = 0.0;
};

inline PolylineMetrics metrics(const ClosedPolyline2& poly) {
    PolylineMetrics m;
    m.L = length(poly);
    m.V = full_rotation(poly);
    if (!(m.L > 0.0)) {
        throw DegenerateInput("metrics: zero-length polyline");
    }
    m.T = m.V / m.L;
    m.P = convex_hull(poly).perimeter();
    return m;
}

/// k consecutive traversals of the hull, counterclockwise unless ccw is false.
inline ClosedPolyline2 boundary_circuit(const ConvexPolygon2& hull, int k, bool ccw = true) {
    if (k < 1) {
        throw InvalidInput("boundary_circuit: k must be positive");
    }
    std::vector<Point2> out;
    const auto m = static_cast<std::ptrdiff_t>(hull.size());
    for (int rep = 0; rep < k; ++rep) {
        for (std::ptrdiff_t j = 0; j < m; ++j) {
            out.push_back(hull.at(ccw ? j : -j));
        }
    }
    return ClosedPolyline2(std::move(out));
}

/// k when the normalized vertex sequence of poly equals k consecutive traversals of
/// hull in one consistent direction, starting anywhere.
inline std::optional<int> is_multiple_circuit(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    const ClosedPolyline2 p = normalize(poly);
    const std::size_t m = hull.size();
    const std::size_t n = p.size();
    if (n % m != 0) {
        return std::nullopt;
    }
    const double tol = hull.tol();
    std::optional<std::size_t> start;
    for (std::size_t j = 0; j < m; ++j) {
        if (distance(p[0], hull.vertices()[j]) <= tol) {
            start = j;
            break;
        }
    }
    if (!start) {
        return std::nullopt;
    }
    for (const int step : {1, -1}) {
        bool ok = true;
        for (std::size_t t = 0; t < n && ok; ++t) {
            const auto idx = static_cast<std::ptrdiff_t>(*start) + step * static_cast<std::ptrdiff_t>(t);
            ok = distance(p[t], hull.at(idx)) <= tol;
        }
        if (ok) {
            return static_cast<int>(n / m);
        }
    }
    return std::nullopt;
}

} // namespace dna
