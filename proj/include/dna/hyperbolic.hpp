#pragma once

// Hyperboloid model of the hyperbolic plane, just enough to build closed
// polylines and measure their curvature. The counterexample configuration shows
// that T(polyline) >= T(hull boundary) fails there for large triangles.

#include <dna/config.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace dna {

/// Point on the upper sheet x0^2 - x1^2 - x2^2 = 1. Polar coordinates about the
/// origin (1, 0, 0) are kept alongside; distances are computed from them because
/// Minkowski products of far-apart points cancel catastrophically.
class HypPoint {
public:
    HypPoint(double x0, double x1, double x2) : x_{x0, x1, x2} {
        if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(x2) || x0 <= 0.0) {
            throw InvalidInput("HypPoint: not on the upper sheet");
        }
        const double q = x0 * x0 - x1 * x1 - x2 * x2;
        if (std::abs(q - 1.0) > 1e-10 * x0 * x0) {
            throw InvalidInput("HypPoint: Minkowski norm is not -1");
        }
        r_ = std::asinh(std::hypot(x1, x2));
        theta_ = std::atan2(x2, x1);
    }

    /// Point at distance r from the origin in direction angle.
    static HypPoint from_polar(double r, double angle) {
        if (!(r >= 0.0) || r > 350.0 || !std::isfinite(angle)) {
            throw InvalidInput("HypPoint::from_polar: bad radius or angle");
        }
        const double s = std::sinh(r);
        HypPoint p(std::cosh(r), s * std::cos(angle), s * std::sin(angle));
        p.r_ = r;
        p.theta_ = angle;
        return p;
    }

    double x0() const { return x_[0]; }
    double x1() const { return x_[1]; }
    double x2() const { return x_[2]; }
    /// Distance from the origin and direction angle.
    double r() const { return r_; }
    double theta() const { return theta_; }

private:
    double x_[3];
    double r_ = 0.0;
    double theta_ = 0.0;
};

/// <u, v> = -u0 v0 + u1 v1 + u2 v2.
inline double minkowski(const HypPoint& u, const HypPoint& v) {
    return -u.x0() * v.x0() + u.x1() * v.x1() + u.x2() * v.x2();
}

/// arcosh(-<u, v>), evaluated as
/// sinh^2(d/2) = sinh^2((r1 - r2)/2) + sinh r1 sinh r2 sin^2((t1 - t2)/2).
inline double hyp_distance(const HypPoint& u, const HypPoint& v) {
    const double h = std::sinh((u.r() - v.r()) / 2.0);
    const double s = std::sin((u.theta() - v.theta()) / 2.0);
    return 2.0 * std::asinh(std::sqrt(h * h + std::sinh(u.r()) * std::sinh(v.r()) * s * s));
}

/// Angle at v between the geodesics towards u and w, from the side lengths by the
/// half-angle formulas (sin^2 and cos^2 of alpha/2 in terms of sinh of the
/// semi-perimeter differences).
inline double hyp_angle(const HypPoint& u, const HypPoint& v, const HypPoint& w) {
    const double b = hyp_distance(v, u);
    const double c = hyp_distance(v, w);
    const double a = hyp_distance(u, w);
    if (b <= 0.0 || c <= 0.0) {
        throw DegenerateInput("hyp_angle: coincident points");
    }
    const double s = (a + b + c) / 2.0;
    const double sb = std::max(s - b, 0.0);
    const double sc = std::max(s - c, 0.0);
    const double sa = std::max(s - a, 0.0);
    return 2.0 * std::atan2(std::sqrt(std::sinh(sb) * std::sinh(sc)), std::sqrt(std::sinh(s) * std::sinh(sa)));
}

class HypPolyline {
public:
    explicit HypPolyline(std::vector<HypPoint> vertices) : v_(std::move(vertices)) {
        if (v_.size() < 3) {
            throw InvalidInput("HypPolyline: need at least 3 vertices");
        }
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (hyp_distance(v_[i], v_[(i + 1) % v_.size()]) <= tolerances().eps_point) {
                throw DegenerateInput("HypPolyline: consecutive vertices coincide");
            }
        }
    }

    std::size_t size() const { return v_.size(); }
    const std::vector<HypPoint>& vertices() const { return v_; }
    const HypPoint& at(std::ptrdiff_t i) const {
        const auto n = static_cast<std::ptrdiff_t>(v_.size());
        return v_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

private:
    std::vector<HypPoint> v_;
};

inline double hyp_length(const HypPolyline& p) {
    double L = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
        L += hyp_distance(p.at(i), p.at(i + 1));
    }
    return L;
}

inline double hyp_full_rotation(const HypPolyline& p) {
    double V = 0.0;
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(p.size()); ++i) {
        V += pi - hyp_angle(p.at(i - 1), p.at(i), p.at(i + 1));
    }
    return V;
}

inline double hyp_mean_curvature(const HypPolyline& p) { return hyp_full_rotation(p) / hyp_length(p); }

struct CounterexampleResult {
    double t = 0.0;
    double T_gamma = 0.0;
    double T_gamma1 = 0.0;
    /// T_gamma - T_gamma1; negative means the planar inequality fails.
    double margin = 0.0;
    double ratio_V = 0.0;
    double ratio_L = 0.0;
    /// Area of the small triangle A B1 C1 (angle defect).
    double small_area = 0.0;
};

/// Triangle ABC with A at the origin, B at distance t along angle 0 and C at
/// distance t/2 along angle pi/3; B1, C1 are the midpoints of AB and AC.
/// Compares the polyline A B C C1 B1 B C with the boundary A B C.
inline CounterexampleResult counterexample(double t) {
    if (!(t > 0.0) || t > 300.0) {
        throw InvalidInput("counterexample: t must lie in (0, 300]");
    }
    const double theta = pi / 3.0;
    const HypPoint A = HypPoint::from_polar(0.0, 0.0);
    const HypPoint B = HypPoint::from_polar(t, 0.0);
    const HypPoint C = HypPoint::from_polar(t / 2.0, theta);
    const HypPoint B1 = HypPoint::from_polar(t / 2.0, 0.0);
    const HypPoint C1 = HypPoint::from_polar(t / 4.0, theta);
    const HypPolyline gamma({A, B, C, C1, B1, B, C});
    const HypPolyline gamma1({A, B, C});

    CounterexampleResult r;
    r.t = t;
    const double V = hyp_full_rotation(gamma);
    const double L = hyp_length(gamma);
    const double V1 = hyp_full_rotation(gamma1);
    const double L1 = hyp_length(gamma1);
    r.T_gamma = V / L;
    r.T_gamma1 = V1 / L1;
    r.margin = r.T_gamma - r.T_gamma1;
    r.ratio_V = V / V1;
    r.ratio_L = L / L1;
    r.small_area = pi - hyp_angle(B1, A, C1) - hyp_angle(A, B1, C1) - hyp_angle(A, C1, B1);
    return r;
}

} // namespace dna
