#pragma once

// Sampled parametric curves and inscribed polylines.

#include <dna/planar.hpp>

#include <cmath>
#include <functional>
#include <vector>

namespace dna {

class SampledCurve {
public:
    explicit SampledCurve(std::vector<Point2> points, bool closed = true)
        : points_(std::move(points)), closed_(closed) {
        if (points_.size() < 16) {
            throw InvalidInput("SampledCurve: need at least 16 samples");
        }
        const double tol = tolerances().eps_point * span_of(points_);
        const std::size_t edges = closed_ ? points_.size() : points_.size() - 1;
        for (std::size_t i = 0; i < edges; ++i) {
            if (!is_finite(points_[i]) || distance(points_[i], points_[(i + 1) % points_.size()]) <= tol) {
                throw DegenerateInput("SampledCurve: consecutive samples coincide");
            }
        }
    }

    /// count samples of f over one period [0, 2pi).
    static SampledCurve sample(const std::function<Point2(double)>& f, std::size_t count) {
        std::vector<Point2> pts;
        pts.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            pts.push_back(f(two_pi * static_cast<double>(i) / static_cast<double>(count)));
        }
        return SampledCurve(std::move(pts));
    }

    static SampledCurve ellipse(double a, double b, std::size_t count) {
        return sample([=](double t) { return Point2{a * std::cos(t), b * std::sin(t)}; }, count);
    }
    static SampledCurve circle(double r, std::size_t count) { return ellipse(r, r, count); }
    /// r = 1 + 2 cos(t): a loop with an inner loop, self-intersecting at the origin.
    static SampledCurve limacon(std::size_t count) {
        return sample(
            [](double t) {
                const double r = 1.0 + 2.0 * std::cos(t);
                return Point2{r * std::cos(t), r * std::sin(t)};
            },
            count);
    }

    const std::vector<Point2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool closed() const { return closed_; }

    /// Polyline through every sample.
    ClosedPolyline2 polyline() const { return ClosedPolyline2(points_); }
    double length() const { return dna::length(polyline()); }
    /// Rotation of the densest available sampling; inscribed polylines stay below it.
    double rotation_estimate() const { return full_rotation(polyline()); }

    /// Every stride-th sample starting at offset.
    ClosedPolyline2 subsample(std::size_t stride, std::size_t offset = 0) const {
        if (stride == 0) {
            throw InvalidInput("subsample: stride must be positive");
        }
        std::vector<Point2> v;
        for (std::size_t i = offset % stride; i < points_.size(); i += stride) {
            v.push_back(points_[i]);
        }
        return ClosedPolyline2(std::move(v));
    }

private:
    std::vector<Point2> points_;
    bool closed_;
};

/// Coarsest regular subsampling whose length reaches ratio times the length of
/// the full sampling.
inline ClosedPolyline2 inscribe(const SampledCurve& c, double ratio) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw InvalidInput("inscribe: ratio must lie in (0, 1)");
    }
    if (!c.closed()) {
        throw InvalidInput("inscribe: curve must be closed");
    }
    const double target = ratio * c.length();
    for (std::size_t stride = c.size() / 3; stride >= 1; --stride) {
        ClosedPolyline2 p = c.subsample(stride);
        if (length(p) >= target) {
            return p;
        }
    }
    throw InvalidInput("inscribe: ratio not reachable; sample the curve more densely");
}

} // namespace dna
