#pragma once

// Seeded fuzz campaigns: evaluate one property's margin on many generated
// instances and report the minimum.

#include <dna/improver.hpp>
#include <dna/io.hpp>
#include <dna/random.hpp>
#include <dna/spherical.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace dna {

enum class Property { Lemma4, Lemma5, Dna, Improve, Lemma1s, Lemma2s, Lemma3s, TheoremS };

inline constexpr std::array<std::pair<Property, std::string_view>, 8> property_names{{
    {Property::Lemma4, "lemma4"},
    {Property::Lemma5, "lemma5"},
    {Property::Dna, "dna"},
    {Property::Improve, "improve"},
    {Property::Lemma1s, "lemma1s"},
    {Property::Lemma2s, "lemma2s"},
    {Property::Lemma3s, "lemma3s"},
    {Property::TheoremS, "theorem_s"},
}};

inline std::string_view to_string(Property p) {
    for (const auto& [k, name] : property_names) {
        if (k == p) {
            return name;
        }
    }
    return "unknown";
}

inline std::optional<Property> property_from_string(std::string_view s) {
    for (const auto& [k, name] : property_names) {
        if (name == s) {
            return k;
        }
    }
    return std::nullopt;
}

struct FuzzConfig {
    Property property = Property::Dna;
    std::uint64_t count = 1000;
    std::uint64_t seed = 0;
    /// Upper bound on polyline size; 12 for planar and 8 for spherical properties when unset.
    std::optional<std::size_t> max_vertices;
    /// Angular radius of the cap spherical instances are drawn from.
    double cap_radius = 1.3;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Record wall time in the report (makes it non-reproducible byte for byte).
    bool timing = false;
};

struct FuzzReport {
    Property property = Property::Dna;
    std::uint64_t seed = 0;
    std::uint64_t count = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::uint64_t worst_index = 0;
    /// Instances with margin below -1e-9 (or that failed outright).
    std::uint64_t violations = 0;
    Json worst_instance;
    std::optional<double> elapsed_seconds;

    bool ok() const { return violations == 0; }
};

inline constexpr double violation_threshold = -1e-9;

namespace detail {

inline Json point_json(Point2 p) { return Json::array({p.x, p.y}); }
inline Json point_json(const SphPoint& p) { return Json::array({p.v().x, p.v().y, p.v().z}); }

struct Evaluation {
    double margin = 0.0;
    Json instance;
    std::string failure;
};

inline std::size_t vertex_bound(const FuzzConfig& cfg) {
    const bool spherical = cfg.property == Property::TheoremS;
    return std::max<std::size_t>(3, cfg.max_vertices.value_or(spherical ? 8 : 12));
}

/// Margin of instance `index`; the instance itself is serialized only on request.
inline Evaluation evaluate(const FuzzConfig& cfg, std::uint64_t index, bool with_instance) {
    Rng rng = Rng::for_instance(cfg.seed, index);
    Evaluation ev;
    const auto n = [&] { return static_cast<std::size_t>(rng.between(3, vertex_bound(cfg))); };
    try {
        switch (cfg.property) {
        case Property::Lemma4: {
            const Triangle2 t = random_triangle(rng);
            ev.margin = lemma4_margin(t).margin;
            if (with_instance) {
                ev.instance = {{"A", point_json(t.A())}, {"B", point_json(t.B())}, {"C", point_json(t.C())}};
            }
            break;
        }
        case Property::Lemma5: {
            const ConvexQuad2 q = random_convex_quad(rng);
            ev.margin = lemma5_margin(q).margin;
            if (with_instance) {
                ev.instance = {{"A", point_json(q.A())},
                               {"B", point_json(q.B())},
                               {"C", point_json(q.C())},
                               {"D", point_json(q.D())}};
            }
            break;
        }
        case Property::Dna: {
            const ClosedPolyline2 p = random_polyline(rng, n());
            ev.margin = dna_check(p).margin;
            if (with_instance) {
                ev.instance = to_json(p);
            }
            break;
        }
        case Property::Improve: {
            const ClosedPolyline2 p = random_polyline(rng, n());
            if (with_instance) {
                ev.instance = to_json(p);
            }
            const auto [result, trace] = improve_to_circuit(p);
            const auto before = trace.initial_metrics;
            const auto after = metrics(result);
            ev.margin = before.T - after.T;
            if (hull_monotonicity_violation(trace)) {
                ev.failure = "hull grew along the trace";
            } else if (std::abs(after.T - two_pi / trace.container.perimeter()) > 1e-9) {
                ev.failure = "final T differs from 2pi/P";
            }
            break;
        }
        case Property::Lemma1s:
        case Property::Lemma2s: {
            const auto s = random_sph_triangle(rng, cfg.cap_radius);
            const auto& t = s.triangle;
            ev.margin = cfg.property == Property::Lemma1s ? lemma1s_margin(t.a, t.b, t.c).margin
                                                          : lemma2s_margin(t.a, t.b, t.c).margin;
            if (with_instance) {
                ev.instance = {{"A", point_json(s.points[0])},
                               {"B", point_json(s.points[1])},
                               {"C", point_json(s.points[2])}};
            }
            break;
        }
        case Property::Lemma3s: {
            const SphQuad q = random_sph_quad(rng, cfg.cap_radius);
            ev.margin = lemma3s_margin(q).margin;
            if (with_instance) {
                ev.instance = {{"A", point_json(q.A())},
                               {"B", point_json(q.B())},
                               {"C", point_json(q.C())},
                               {"D", point_json(q.D())}};
            }
            break;
        }
        case Property::TheoremS: {
            const SphPolyline p = random_sph_polyline(rng, n(), cfg.cap_radius);
            ev.margin = theorem_s_check(p).margin;
            if (with_instance) {
                ev.instance = to_json(p);
            }
            break;
        }
        }
    } catch (const std::exception& e) {
        ev.failure = e.what();
    }
    if (!ev.failure.empty()) {
        ev.margin = -std::numeric_limits<double>::infinity();
    }
    return ev;
}

} // namespace detail

inline FuzzReport run_fuzz(const FuzzConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> margins(cfg.count);
    unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(cfg.count, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < cfg.count; i += workers) {
                    margins[i] = detail::evaluate(cfg, i, false).margin;
                }
            });
        }
    }

    FuzzReport r;
    r.property = cfg.property;
    r.seed = cfg.seed;
    r.count = cfg.count;
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        if (margins[i] < r.min_margin) {
            r.min_margin = margins[i];
            r.worst_index = i;
        }
        r.violations += margins[i] < violation_threshold ? 1 : 0;
    }
    if (cfg.count > 0) {
        const auto worst = detail::evaluate(cfg, r.worst_index, true);
        r.worst_instance = worst.instance;
        if (!worst.failure.empty()) {
            r.worst_instance["failure"] = worst.failure;
        }
    }
    if (cfg.timing) {
        r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return r;
}

inline Json to_json(const FuzzReport& r) {
    Json j{{"property", std::string(to_string(r.property))},
           {"seed", r.seed},
           {"count", r.count},
           {"rng", std::string(rng_algorithm)},
           {"min_margin", std::isfinite(r.min_margin) ? Json(r.min_margin) : Json(nullptr)},
           {"violations", r.violations},
           {"worst_index", r.worst_index},
           {"worst_instance", r.worst_instance}};
    if (r.elapsed_seconds) {
        j["elapsed_seconds"] = *r.elapsed_seconds;
    }
    return j;
}

} // namespace dna
