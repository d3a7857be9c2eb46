#pragma once

// Seeded instance generators. Every instance of a campaign gets its own stream
// derived from (seed, index), so instances can be generated in any order or in
// parallel and still come out identical.

#include <dna/inequalities.hpp>
#include <dna/planar.hpp>
#include <dna/spherical.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>
#include <vector>

namespace dna {

inline constexpr std::string_view rng_algorithm = "splitmix64";

/// SplitMix64 (Steele, Lea, Flood). Small, fast, and splittable by reseeding
/// with a mixed (seed, index) pair.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for instance `index` of a campaign seeded with `seed`.
    static Rng for_instance(std::uint64_t seed, std::uint64_t index) { return Rng(mix(seed ^ mix(index))); }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        const std::uint64_t out = mix(state_);
        state_ += 0x9E3779B97F4A7C15ULL;
        return out;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

private:
    std::uint64_t state_;
};

inline Point2 random_point_in_disk(Rng& rng) {
    for (;;) {
        const Point2 p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (dot(p, p) < 1.0) {
            return p;
        }
    }
}

inline Point2 random_point_in(Rng& rng, const ConvexPolygon2& region) {
    double x0 = region.vertices()[0].x, x1 = x0, y0 = region.vertices()[0].y, y1 = y0;
    for (const auto& v : region.vertices()) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    for (;;) {
        const Point2 p{rng.uniform(x0, x1), rng.uniform(y0, y1)};
        if (region.contains(p, 0.0)) {
            return p;
        }
    }
}

namespace detail {

inline constexpr int max_attempts = 1000;

template <class Sample>
ClosedPolyline2 random_polyline_with(std::size_t n, Sample&& sample) {
    if (n < 3) {
        throw InvalidInput("random_polyline: need n >= 3");
    }
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Point2> v(n);
        for (auto& p : v) {
            p = sample();
        }
        try {
            ClosedPolyline2 poly(v);
            const ClosedPolyline2 norm = normalize(poly);
            (void)convex_hull(norm);
            return poly;
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("random_polyline: rejection budget exhausted");
}

} // namespace detail

/// n vertices i.i.d. uniform in the unit disk.
inline ClosedPolyline2 random_polyline(Rng& rng, std::size_t n) {
    return detail::random_polyline_with(n, [&] { return random_point_in_disk(rng); });
}

/// n vertices i.i.d. uniform in a convex region.
inline ClosedPolyline2 random_polyline(Rng& rng, std::size_t n, const ConvexPolygon2& region) {
    return detail::random_polyline_with(n, [&] { return random_point_in(rng, region); });
}

inline ClosedPolyline2 random_polyline(std::uint64_t seed, std::size_t n, const ConvexPolygon2& region) {
    Rng rng(seed);
    return random_polyline(rng, n, region);
}

inline Triangle2 random_triangle(Rng& rng) {
    for (int attempt = 0; attempt < detail::max_attempts; ++attempt) {
        const Point2 a = random_point_in_disk(rng), b = random_point_in_disk(rng), c = random_point_in_disk(rng);
        if (orient(a, b, c) != 0) {
            return Triangle2(a, b, c);
        }
    }
    throw DegenerateInput("random_triangle: rejection budget exhausted");
}

/// Four disk points in strictly convex position, in random cyclic labelling.
inline ConvexQuad2 random_convex_quad(Rng& rng) {
    for (int attempt = 0; attempt < detail::max_attempts; ++attempt) {
        std::array<Point2, 4> p;
        for (auto& q : p) {
            q = random_point_in_disk(rng);
        }
        try {
            const auto hull = convex_hull(std::span<const Point2>(p));
            if (hull.size() != 4) {
                continue;
            }
            const auto shift = static_cast<std::ptrdiff_t>(rng.between(0, 3));
            return ConvexQuad2(hull.at(shift), hull.at(shift + 1), hull.at(shift + 2), hull.at(shift + 3));
        } catch (const DegenerateInput&) {
        } catch (const InvalidInput&) {
        }
    }
    throw DegenerateInput("random_convex_quad: rejection budget exhausted");
}

/// Uniform point in the cap of angular radius `radius` around `center`.
inline SphPoint random_cap_point(Rng& rng, const Vec3& center, double radius) {
    const double z = 1.0 - rng.uniform() * (1.0 - std::cos(radius));
    const double phi = rng.uniform(0.0, two_pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const Vec3 helper = std::abs(center.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    const Vec3 e1 = normalized(cross(helper, center));
    const Vec3 e2 = cross(center, e1);
    return SphPoint(z * center + (r * std::cos(phi)) * e1 + (r * std::sin(phi)) * e2);
}

inline Vec3 random_unit_vector(Rng& rng) {
    for (;;) {
        const Vec3 v{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        const double n = norm(v);
        if (n > 1e-3 && n < 1.0) {
            return (1.0 / n) * v;
        }
    }
}

namespace detail {

inline void check_cap(double radius) {
    if (!(radius > 0.0 && radius < pi / 2.0 - tolerances().hemisphere_margin)) {
        throw InvalidInput("cap radius must lie in (0, pi/2 - hemisphere_margin)");
    }
}

} // namespace detail

struct SphTriangleSample {
    std::array<SphPoint, 3> points;
    SphTriangle triangle;
};

/// Triangle in a randomly centred cap, smallest angle at least 1e-3.
inline SphTriangleSample random_sph_triangle(Rng& rng, double cap_radius) {
    detail::check_cap(cap_radius);
    const Vec3 c = random_unit_vector(rng);
    for (int attempt = 0; attempt < detail::max_attempts; ++attempt) {
        const std::array<SphPoint, 3> p{random_cap_point(rng, c, cap_radius), random_cap_point(rng, c, cap_radius),
                                        random_cap_point(rng, c, cap_radius)};
        try {
            const auto t = SphTriangle::from_points(p[0], p[1], p[2]);
            if (std::min({t.alpha, t.beta, t.gamma}) >= 1e-3) {
                return {p, t};
            }
        } catch (const DegenerateInput&) {
        }
    }
    throw DegenerateInput("random_sph_triangle: rejection budget exhausted");
}

/// Convex quadrilateral in a randomly centred cap, smallest angle at least 1e-3.
inline SphQuad random_sph_quad(Rng& rng, double cap_radius) {
    detail::check_cap(cap_radius);
    const Vec3 c = random_unit_vector(rng);
    for (int attempt = 0; attempt < detail::max_attempts; ++attempt) {
        std::vector<SphPoint> p;
        for (int i = 0; i < 4; ++i) {
            p.push_back(random_cap_point(rng, c, cap_radius));
        }
        try {
            const auto hull = sph_hull(p);
            if (hull.vertices.size() != 4) {
                continue;
            }
            const auto& h = hull.vertices;
            bool sharp = false;
            for (std::size_t i = 0; i < 4; ++i) {
                sharp = sharp || sph_angle(h[(i + 3) % 4], h[i], h[(i + 1) % 4]) < 1e-3;
            }
            if (!sharp) {
                return SphQuad(h[0], h[1], h[2], h[3]);
            }
        } catch (const DegenerateInput&) {
        } catch (const InvalidInput&) {
        }
    }
    throw DegenerateInput("random_sph_quad: rejection budget exhausted");
}

/// Closed polyline with n vertices uniform in a randomly centred cap.
inline SphPolyline random_sph_polyline(Rng& rng, std::size_t n, double cap_radius) {
    detail::check_cap(cap_radius);
    if (n < 3) {
        throw InvalidInput("random_sph_polyline: need n >= 3");
    }
    const Vec3 c = random_unit_vector(rng);
    for (int attempt = 0; attempt < detail::max_attempts; ++attempt) {
        std::vector<SphPoint> p;
        for (std::size_t i = 0; i < n; ++i) {
            p.push_back(random_cap_point(rng, c, cap_radius));
        }
        try {
            SphPolyline poly(p);
            (void)sph_hull(poly);
            return poly;
        } catch (const DegenerateInput&) {
        } catch (const InvalidInput&) {
        }
    }
    throw DegenerateInput("random_sph_polyline: rejection budget exhausted");
}

} // namespace dna
