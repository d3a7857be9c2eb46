#pragma once

// Closed-form planar inequalities evaluated as signed margins, and the
// polyline verdict T >= 2pi / P.

#include <dna/planar.hpp>

#include <array>
#include <cmath>
#include <optional>

namespace dna {

/// lhs <= rhs style inequality; margin = rhs - lhs.
struct InequalityMargin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    /// False when the inequality is only claimed non-strictly (degenerate input).
    bool strict = true;

    static InequalityMargin make(double lhs, double rhs, bool strict = true) {
        return {lhs, rhs, rhs - lhs, strict};
    }
};

/// Lower bound on the rotation of a curve piece from A to B, given the curve's
/// directions at both ends and the chord direction A -> B.
inline double lemma1_bound(Direction at_a, Direction at_b, Direction chord) {
    return rho(at_a, chord) + rho(at_b, chord);
}

/// Triangle with the angle of interest at B.
class Triangle2 {
public:
    Triangle2(Point2 a, Point2 b, Point2 c, bool allow_degenerate = false) : a_(a), b_(b), c_(c) {
        if (!is_finite(a) || !is_finite(b) || !is_finite(c)) {
            throw InvalidInput("triangle: non-finite vertex");
        }
        if (a == b || b == c || a == c) {
            throw DegenerateInput("triangle: coincident vertices");
        }
        degenerate_ = orient(a, b, c) == 0;
        if (degenerate_ && !allow_degenerate) {
            throw DegenerateInput("triangle: collinear vertices");
        }
    }

    Point2 A() const { return a_; }
    Point2 B() const { return b_; }
    Point2 C() const { return c_; }
    double AB() const { return distance(a_, b_); }
    double BC() const { return distance(b_, c_); }
    double CA() const { return distance(c_, a_); }
    /// Interior angle at B.
    double beta() const { return rho(Direction::from(b_, a_), Direction::from(b_, c_)); }
    bool degenerate() const { return degenerate_; }

private:
    Point2 a_, b_, c_;
    bool degenerate_ = false;
};

/// (AB + BC) / (2pi - beta) < (AB + BC + AC) / (2pi).
inline InequalityMargin lemma4_margin(const Triangle2& t) {
    const double ab = t.AB();
    const double bc = t.BC();
    const double ac = t.CA();
    return InequalityMargin::make((ab + bc) / (two_pi - t.beta()), (ab + bc + ac) / two_pi, !t.degenerate());
}

namespace detail {

/// Intersection of lines p0p1 and q0q1 (assumed non-parallel).
inline Point2 line_intersection(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
    const Point2 r = p1 - p0;
    const Point2 s = q1 - q0;
    const double t = cross(q0 - p0, s) / cross(r, s);
    return p0 + t * r;
}

} // namespace detail

/// Convex quadrilateral ABCD (stored counterclockwise) with its diagonal
/// intersection O and the angle phi = angle AOB.
///
/// With allow_degenerate, a vertex may lie on the segment joining its two
/// neighbours (a straight corner); the diagonals then meet at that vertex.
class ConvexQuad2 {
public:
    ConvexQuad2(Point2 a, Point2 b, Point2 c, Point2 d, bool allow_degenerate = false) : p_{a, b, c, d} {
        for (const auto& p : p_) {
            if (!is_finite(p)) {
                throw InvalidInput("quad: non-finite vertex");
            }
        }
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i + 1; j < 4; ++j) {
                if (p_[i] == p_[j]) {
                    throw DegenerateInput("quad: coincident vertices");
                }
            }
        }
        // canonicalize to counterclockwise by reversing B and D
        const double area2 = cross(p_[2] - p_[0], p_[3] - p_[1]);
        if (area2 < 0.0) {
            std::swap(p_[1], p_[3]);
        }
        int straight = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const int o = orient(p_[(i + 3) % 4], p_[i], p_[(i + 1) % 4]);
            if (o < 0) {
                throw InvalidInput("quad: vertices not in convex position");
            }
            if (o == 0) {
                ++straight;
            }
        }
        degenerate_ = straight > 0;
        if (degenerate_ && (!allow_degenerate || straight > 1)) {
            throw InvalidInput("quad: degenerate vertex order");
        }
        // diagonals must properly cross (non-strictly when degenerate)
        const int s1 = orient(p_[0], p_[2], p_[1]) * orient(p_[0], p_[2], p_[3]);
        const int s2 = orient(p_[1], p_[3], p_[0]) * orient(p_[1], p_[3], p_[2]);
        if (s1 > 0 || s2 > 0 || (!degenerate_ && (s1 == 0 || s2 == 0))) {
            throw InvalidInput("quad: diagonals do not intersect inside");
        }
        o_ = detail::line_intersection(p_[0], p_[2], p_[1], p_[3]);
        for (std::size_t i = 0; i < 4; ++i) {
            if (orient(p_[(i + 3) % 4], p_[i], p_[(i + 1) % 4]) == 0) {
                o_ = p_[i];
            }
        }
        if (o_ == p_[0] || o_ == p_[1]) {
            // straight corner at A or B: angle AOB is the limit angle along the diagonals
            phi_ = rho(Direction::from(p_[2], p_[0]), Direction::from(p_[3], p_[1]));
        } else {
            phi_ = rho(Direction::from(o_, p_[0]), Direction::from(o_, p_[1]));
        }
    }

    Point2 A() const { return p_[0]; }
    Point2 B() const { return p_[1]; }
    Point2 C() const { return p_[2]; }
    Point2 D() const { return p_[3]; }
    Point2 O() const { return o_; }
    double phi() const { return phi_; }
    bool degenerate() const { return degenerate_; }

private:
    std::array<Point2, 4> p_;
    Point2 o_;
    double phi_ = 0.0;
    bool degenerate_ = false;
};

/// (AB + BD + DC + CA) / (2(pi + phi)) < (AB + BC + CD + DA) / (2pi).
inline InequalityMargin lemma5_margin(const ConvexQuad2& q) {
    const double ab = distance(q.A(), q.B());
    const double bc = distance(q.B(), q.C());
    const double cd = distance(q.C(), q.D());
    const double da = distance(q.D(), q.A());
    const double ac = distance(q.A(), q.C());
    const double bd = distance(q.B(), q.D());
    return InequalityMargin::make((ab + bd + cd + ac) / (2.0 * (pi + q.phi())), (ab + bc + cd + da) / two_pi,
                                  !q.degenerate());
}

/// Mean absolute curvature of a polyline against that of its hull boundary.
struct DnaVerdict {
    PolylineMetrics metrics;
    double T = 0.0;
    double T1 = 0.0;
    /// T - T1; never below -1e-9 for a valid polyline.
    double margin = 0.0;
    std::optional<int> multiple_circuit;
};

inline DnaVerdict dna_check(const ClosedPolyline2& poly) {
    DnaVerdict v;
    v.metrics = metrics(poly);
    v.T = v.metrics.T;
    v.T1 = two_pi / v.metrics.P;
    v.margin = v.T - v.T1;
    v.multiple_circuit = is_multiple_circuit(poly, convex_hull(poly));
    return v;
}

} // namespace dna
