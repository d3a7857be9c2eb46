#pragma once

// Polyline improvement engine: interior vertices are pushed to the hull
// boundary, full boundary circuits are removed, same-direction chords are
// stretched onto the boundary and opposite-direction blocks are flipped, until
// the polyline is a multiple circuit of its hull.

#include <dna/inequalities.hpp>
#include <dna/planar.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dna {

enum class Turn { Left, Right };

/// One turn per vertex; collinear (including reversals) counts as Left.
inline std::vector<Turn> classify_turns(const ClosedPolyline2& poly) {
    std::vector<Turn> out(poly.size());
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            orient(poly.at(i - 1), poly.at(i), poly.at(i + 1)) < 0 ? Turn::Right : Turn::Left;
    }
    return out;
}

inline std::size_t direction_changes(const std::vector<Turn>& turns) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        c += turns[i] != turns[(i + 1) % turns.size()] ? 1 : 0;
    }
    return c;
}

enum class MoveKind { CaseA, CaseB, CaseCShift, Stretch, CircuitRemoval, BlockFlip };

inline std::string_view to_string(MoveKind k) {
    switch (k) {
    case MoveKind::CaseA: return "case_a";
    case MoveKind::CaseB: return "case_b";
    case MoveKind::CaseCShift: return "case_c_shift";
    case MoveKind::Stretch: return "stretch";
    case MoveKind::CircuitRemoval: return "circuit_removal";
    case MoveKind::BlockFlip: return "block_flip";
    }
    return "unknown";
}

struct Move {
    MoveKind kind = MoveKind::Stretch;
    /// Block flips: cyclic-order case 1..6. Case a: 1 when the contact was the
    /// neighbouring ray rather than the boundary. Zero otherwise.
    int case_tag = 0;
    /// Affected vertex range [first, last] (cyclic) in the polyline before the move.
    std::size_t first = 0;
    std::size_t last = 0;
    /// Case c: the index the dispatch moves on to.
    std::optional<std::size_t> shift_target;
    /// Case c: the angle used for the minimal-angle selection.
    double selection_angle = 0.0;
    /// Block flip whose cyclic order is not literally one of the six listed orders.
    bool unlisted_order = false;
    /// True when the move left the polyline unchanged.
    bool identity = false;
    /// Vertices created or moved by this step, in the new polyline.
    std::vector<Point2> changed;
};

struct MoveResult {
    ClosedPolyline2 polyline;
    Move move;
};

/// Lexicographic termination measure.
struct ImprovementMeasure {
    std::size_t interior = 0;
    std::size_t direction_changes = 0;
    std::size_t off_boundary_edges = 0;

    friend auto operator<=>(const ImprovementMeasure&, const ImprovementMeasure&) = default;
};

struct TraceStep {
    Move move;
    ClosedPolyline2 polyline;
    PolylineMetrics metrics;
    ImprovementMeasure measure;
};

struct ImprovementTrace {
    ClosedPolyline2 initial;
    PolylineMetrics initial_metrics;
    /// Hull of the initial polyline; every boundary operation refers to it.
    ConvexPolygon2 container;
    std::vector<TraceStep> steps;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }
    const ClosedPolyline2& polyline_after(std::size_t step) const {
        return step == 0 ? initial : steps[step - 1].polyline;
    }
};

/// Thrown when the move budget is exhausted; carries the partial trace.
class NonTermination : public std::runtime_error {
public:
    NonTermination(const std::string& what, ImprovementTrace trace)
        : std::runtime_error(what), trace_(std::move(trace)) {}
    const ImprovementTrace& trace() const { return trace_; }

private:
    ImprovementTrace trace_;
};

namespace detail {

inline std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

inline ClosedPolyline2 replace_vertex(const ClosedPolyline2& poly, std::size_t i, Point2 p) {
    std::vector<Point2> v = poly.vertices();
    v[i] = p;
    return normalize(std::span<const Point2>(v));
}

inline ClosedPolyline2 erase_vertex(const ClosedPolyline2& poly, std::size_t i) {
    std::vector<Point2> v = poly.vertices();
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    return normalize(std::span<const Point2>(v));
}

/// Parameter t >= 0 at which p + t d leaves the convex polygon.
inline double ray_exit(const ConvexPolygon2& hull, Point2 p, Point2 d) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = hull.size();
    for (std::size_t j = 0; j < m; ++j) {
        const Point2 a = hull.at(static_cast<std::ptrdiff_t>(j));
        const Point2 b = hull.at(static_cast<std::ptrdiff_t>(j) + 1);
        const Point2 e = b - a;
        // inside means cross(e, x - a) >= 0
        const double rate = cross(e, d);
        if (rate < 0.0) {
            const double t = cross(e, p - a) / -rate;
            best = std::min(best, std::max(t, 0.0));
        }
    }
    return best;
}

/// Interior angle at b of the triangle a b c.
inline double angle_at(Point2 a, Point2 b, Point2 c) {
    return rho(Direction::from(b, a), Direction::from(b, c));
}

/// Case a in one direction. step = +1 pivots on the line A_i A_{i+1} and slides
/// A_i along A_{i-1} -> A_i; step = -1 is the mirror image.
inline std::optional<MoveResult> try_case_a(const ClosedPolyline2& poly, const ConvexPolygon2& hull,
                                            std::size_t i, int step) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const Point2 cur = poly.at(ii);
    const Point2 prev = poly.at(ii - step);
    const Point2 next = poly.at(ii + step);
    const Point2 next2 = poly.at(ii + 2 * step);
    const int side_next2 = orient(cur, next, next2);
    if (side_next2 == 0 || orient(cur, next, prev) * side_next2 < 0) {
        return std::nullopt;
    }
    const Point2 d = (1.0 / distance(prev, cur)) * (cur - prev);
    double t = ray_exit(hull, cur, d);
    bool ray_contact = false;
    // Crossing the line A_{i+1} A_{i+2} anywhere flips the turn at A_{i+1}, so
    // the slide stops at the first contact with that line.
    const Point2 e = next - next2;
    const double den = cross(e, d);
    if (den != 0.0) {
        const double th = cross(e, next2 - cur) / den;
        if (th > 0.0 && th < t) {
            t = th;
            ray_contact = true;
        }
    }
    Point2 moved = cur + t * d;
    if (ray_contact) {
        // land exactly on the line through A_{i+1} A_{i+2}
        const Point2 u = (1.0 / norm(e)) * e;
        moved = next2 + dot(moved - next2, u) * u;
    }
    Move mv;
    mv.kind = MoveKind::CaseA;
    mv.case_tag = ray_contact ? 1 : 0;
    mv.first = wrap(ii - step, poly.size());
    mv.last = wrap(ii + 2 * step, poly.size());
    if (step < 0) {
        std::swap(mv.first, mv.last);
    }
    mv.changed = {moved};
    return MoveResult{replace_vertex(poly, i, moved), std::move(mv)};
}

struct CaseCInfo {
    std::size_t target = 0;
    double angle = 0.0;
};

/// Case c condition at i: the line A_{i-1} A_{i+1} separates A_i from A_{i+2}
/// (forward) or from A_{i-2} (backward). Only meaningful once case a failed.
inline std::optional<CaseCInfo> case_c_at(const ClosedPolyline2& poly, std::size_t i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const Point2 a0 = poly.at(ii - 1), a1 = poly.at(ii), a2 = poly.at(ii + 1);
    const int side = orient(a0, a2, a1);
    std::optional<CaseCInfo> best;
    if (orient(a0, a2, poly.at(ii + 2)) * side < 0) {
        best = CaseCInfo{wrap(ii + 1, poly.size()), angle_at(a0, a2, a1)};
    }
    if (orient(a0, a2, poly.at(ii - 2)) * side < 0) {
        const CaseCInfo back{wrap(ii - 1, poly.size()), angle_at(a2, a0, a1)};
        if (!best || back.angle < best->angle) {
            best = back;
        }
    }
    return best;
}

inline bool case_a_applies(const ClosedPolyline2& poly, std::size_t i) {
    const auto ii = static_cast<std::ptrdiff_t>(i);
    for (const int step : {1, -1}) {
        const Point2 cur = poly.at(ii), prev = poly.at(ii - step), next = poly.at(ii + step),
                     next2 = poly.at(ii + 2 * step);
        const int side_next2 = orient(cur, next, next2);
        if (side_next2 != 0 && orient(cur, next, prev) * side_next2 >= 0) {
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Moves an interior vertex towards the boundary of `hull` (the container).
///
/// Case a slides the vertex along its incoming (or outgoing) edge line until it
/// meets the boundary or the ray through the next edge, keeping V and growing L.
/// Case b deletes the vertex. Case c moves nothing and names the index at which
/// the dispatch continues.
inline MoveResult push_interior_vertex(const ClosedPolyline2& poly, const ConvexPolygon2& hull, std::size_t i) {
    if (i >= poly.size()) {
        throw PreconditionError("push_interior_vertex: index out of range");
    }
    if (!hull.strictly_inside(poly[i])) {
        throw PreconditionError("push_interior_vertex: vertex is not strictly inside the hull");
    }
    for (const int step : {1, -1}) {
        if (auto r = detail::try_case_a(poly, hull, i, step)) {
            return std::move(*r);
        }
    }
    const auto ii = static_cast<std::ptrdiff_t>(i);
    if (!detail::case_c_at(poly, i)) {
        Move mv;
        mv.kind = MoveKind::CaseB;
        mv.first = detail::wrap(ii - 1, poly.size());
        mv.last = detail::wrap(ii + 1, poly.size());
        return MoveResult{detail::erase_vertex(poly, i), std::move(mv)};
    }
    // Case c: the minimal angle over every interior vertex in case c, lowest index on ties.
    std::optional<std::pair<std::size_t, detail::CaseCInfo>> pick;
    for (std::size_t j = 0; j < poly.size(); ++j) {
        if (!hull.strictly_inside(poly[j]) || detail::case_a_applies(poly, j)) {
            continue;
        }
        if (auto c = detail::case_c_at(poly, j); c && (!pick || c->angle < pick->second.angle)) {
            pick = std::make_pair(j, *c);
        }
    }
    Move mv;
    mv.kind = MoveKind::CaseCShift;
    mv.identity = true;
    mv.first = mv.last = pick->first;
    mv.shift_target = pick->second.target;
    mv.selection_angle = pick->second.angle;
    return MoveResult{poly, std::move(mv)};
}

inline MoveResult push_interior_vertex(const ClosedPolyline2& poly, std::size_t i) {
    return push_interior_vertex(poly, convex_hull(poly), i);
}

namespace detail {

/// Direction of an edge that runs along the boundary: +1 ccw, -1 cw, 0 not a boundary segment.
inline int boundary_edge_direction(const ConvexPolygon2& hull, Point2 a, Point2 b) {
    const auto sa = hull.locate(a);
    const auto sb = hull.locate(b);
    if (!sa || !sb) {
        return 0;
    }
    // a boundary segment meets no corner strictly between its endpoints
    if (hull.corners_between(*sa, *sb, true).empty()) {
        return 1;
    }
    if (hull.corners_between(*sa, *sb, false).empty()) {
        return -1;
    }
    return 0;
}

/// normalize, then drop non-corner boundary vertices that the polyline passes
/// straight through along the boundary. Their turn is zero up to rounding noise
/// that an absolute angle threshold cannot see near a corner.
inline ClosedPolyline2 normalize_on(const ConvexPolygon2& hull, std::span<const Point2> pts) {
    ClosedPolyline2 p = normalize(pts);
    for (bool changed = true; changed && p.size() > 3;) {
        changed = false;
        const auto n = static_cast<std::ptrdiff_t>(p.size());
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Point2 x = p.at(i);
            const auto s = hull.locate(x);
            if (!s || std::any_of(hull.vertices().begin(), hull.vertices().end(),
                                  [&](Point2 c) { return distance(c, x) <= hull.tol(); })) {
                continue;
            }
            const int d = boundary_edge_direction(hull, p.at(i - 1), x);
            if (d != 0 && d == boundary_edge_direction(hull, x, p.at(i + 1))) {
                std::vector<Point2> v = p.vertices();
                v.erase(v.begin() + i);
                p = normalize(std::span<const Point2>(v));
                changed = true;
                break;
            }
        }
    }
    return p;
}

inline std::size_t count_off_boundary(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    std::size_t c = 0;
    const auto n = static_cast<std::ptrdiff_t>(poly.size());
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        c += boundary_edge_direction(hull, poly.at(i), poly.at(i + 1)) == 0 ? 1 : 0;
    }
    return c;
}

inline std::size_t count_interior(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    std::size_t c = 0;
    for (const auto& p : poly.vertices()) {
        c += hull.strictly_inside(p) ? 1 : 0;
    }
    return c;
}

/// Every corner of the hull is a vertex of the polyline.
inline bool covers_corners(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    const double tol = hull.tol();
    return std::all_of(hull.vertices().begin(), hull.vertices().end(), [&](Point2 c) {
        return std::any_of(poly.vertices().begin(), poly.vertices().end(),
                           [&](Point2 p) { return distance(p, c) <= tol; });
    });
}

inline bool all_on_boundary(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    return std::all_of(poly.vertices().begin(), poly.vertices().end(),
                       [&](Point2 p) { return hull.on_boundary(p); });
}

} // namespace detail

inline ImprovementMeasure measure(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    return {detail::count_interior(poly, hull), direction_changes(classify_turns(poly)),
            detail::count_off_boundary(poly, hull)};
}

/// Replaces edge i (A_i -> A_{i+1}) by the boundary path walked in the
/// direction of the two equal turns bounding it.
inline MoveResult stretch(const ClosedPolyline2& poly, const ConvexPolygon2& hull, std::size_t i) {
    if (i >= poly.size()) {
        throw PreconditionError("stretch: index out of range");
    }
    const auto turns = classify_turns(poly);
    const std::size_t j = (i + 1) % poly.size();
    if (turns[i] != turns[j]) {
        throw PreconditionError("stretch: edge is not bounded by equal turns");
    }
    const auto si = hull.locate(poly[i]);
    const auto sj = hull.locate(poly[j]);
    if (!si || !sj) {
        throw PreconditionError("stretch: edge endpoints are not on the boundary");
    }
    Move mv;
    mv.kind = MoveKind::Stretch;
    mv.first = i;
    mv.last = j;
    if (detail::boundary_edge_direction(hull, poly[i], poly[j]) != 0) {
        mv.identity = true;
        return MoveResult{poly, std::move(mv)};
    }
    const bool ccw = turns[i] == Turn::Left;
    auto corners = hull.corners_between(*si, *sj, ccw);
    std::vector<Point2> v = poly.vertices();
    v.insert(v.begin() + static_cast<std::ptrdiff_t>(i) + 1, corners.begin(), corners.end());
    mv.changed = std::move(corners);
    return MoveResult{detail::normalize_on(hull, std::span<const Point2>(v)), std::move(mv)};
}

inline MoveResult stretch(const ClosedPolyline2& poly, std::size_t i) {
    return stretch(poly, convex_hull(poly), i);
}

/// Removes one full boundary circuit from a run of consecutive boundary edges
/// walked in one direction whose length exceeds the perimeter. Length drops by
/// exactly the perimeter and rotation by exactly 2pi.
inline std::optional<MoveResult> remove_full_circuit(const ClosedPolyline2& poly, const ConvexPolygon2& hull) {
    const std::size_t n = poly.size();
    const double P = hull.perimeter();
    const double tol = 16.0 * hull.tol();
    std::vector<int> dir(n);
    std::vector<double> len(n);
    for (std::size_t e = 0; e < n; ++e) {
        dir[e] = detail::boundary_edge_direction(hull, poly[e], poly[(e + 1) % n]);
        len[e] = distance(poly[e], poly[(e + 1) % n]);
    }
    Move mv;
    mv.kind = MoveKind::CircuitRemoval;

    if (std::all_of(dir.begin(), dir.end(), [&](int d) { return d != 0 && d == dir[0]; })) {
        double total = 0.0;
        for (double l : len) {
            total += l;
        }
        if (total < 2.0 * P - tol) {
            return std::nullopt;
        }
        const bool ccw = dir[0] > 0;
        const Point2 u = poly[0];
        std::vector<Point2> v{u};
        auto walk = hull.corners_along(*hull.locate(u), total - P, ccw);
        v.insert(v.end(), walk.begin(), walk.end());
        mv.first = 0;
        mv.last = n - 1;
        return MoveResult{detail::normalize_on(hull, std::span<const Point2>(v)), std::move(mv)};
    }

    // find a maximal non-cyclic run starting right after an edge of another kind
    for (std::size_t start = 0; start < n; ++start) {
        const std::size_t before = (start + n - 1) % n;
        if (dir[start] == 0 || dir[before] == dir[start]) {
            continue;
        }
        double total = 0.0;
        std::size_t count = 0;
        while (count < n && dir[(start + count) % n] == dir[start]) {
            total += len[(start + count) % n];
            ++count;
        }
        if (total <= P + tol) {
            continue;
        }
        const bool ccw = dir[start] > 0;
        const std::size_t end = (start + count) % n;  // end vertex of the run
        std::vector<Point2> v;
        // rest of the polyline from the end vertex back to the start vertex
        for (std::size_t k = end;; k = (k + 1) % n) {
            v.push_back(poly[k]);
            if (k == start) {
                break;
            }
        }
        auto walk = hull.corners_along(*hull.locate(poly[start]), total - P, ccw);
        v.insert(v.end(), walk.begin(), walk.end());
        mv.first = start;
        mv.last = end;
        return MoveResult{detail::normalize_on(hull, std::span<const Point2>(v)), std::move(mv)};
    }
    return std::nullopt;
}

inline std::optional<MoveResult> remove_full_circuit(const ClosedPolyline2& poly) {
    return remove_full_circuit(poly, convex_hull(poly));
}

/// A maximal run of equal turns A_{i+1} .. A_{k-1} bounded by opposite turns at A_i and A_k.
struct TurnBlock {
    std::size_t before = 0;  // i
    std::size_t after = 0;   // k
    std::size_t length = 0;  // k - i - 1, cyclic
    Turn turn = Turn::Left;
};

inline std::vector<TurnBlock> find_blocks(const std::vector<Turn>& turns, Turn which) {
    std::vector<TurnBlock> out;
    const std::size_t n = turns.size();
    for (std::size_t s = 0; s < n; ++s) {
        if (turns[s] != which || turns[(s + n - 1) % n] == which) {
            continue;
        }
        std::size_t len = 0;
        while (len < n && turns[(s + len) % n] == which) {
            ++len;
        }
        if (len == n) {
            break;
        }
        out.push_back({(s + n - 1) % n, (s + len) % n, len, which});
    }
    return out;
}

namespace detail {

/// Classifies the positive-direction cyclic order of A_i, A_{i+1}, A_{k-1}, A_k.
/// Returns the case number and whether the order is literally absent from the
/// six listed orders (the listed fourth and sixth coincide).
inline std::pair<int, bool> classify_block_order(const ConvexPolygon2& hull, double si, double s1, double sk1,
                                                 double sk, bool positive_ccw) {
    struct Item {
        double key;
        int id;  // 0: A_{i+1}, 1: A_{k-1}, 2: A_k
    };
    std::array<Item, 3> items{Item{hull.arc_length(si, s1, positive_ccw), 0},
                              Item{hull.arc_length(si, sk1, positive_ccw), 1},
                              Item{hull.arc_length(si, sk, positive_ccw), 2}};
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.key < b.key; });
    const int code = items[0].id * 100 + items[1].id * 10 + items[2].id;
    switch (code) {
    case 12: return {1, false};   // i, i+1, k-1, k
    case 201: return {2, false};  // i, k, i+1, k-1
    case 21: return {3, false};   // i, i+1, k, k-1
    case 120: return {4, false};  // i, k-1, k, i+1
    case 102: return {5, false};  // i, k-1, i+1, k
    default: return {6, true};    // i, k, k-1, i+1
    }
}

} // namespace detail

/// Replaces the path A_i A_{i+1} .. A_k across a block of equal turns by the
/// boundary arc from A_i to A_k walked against the block's turn direction.
inline MoveResult flip_monotone_block(const ClosedPolyline2& poly, const ConvexPolygon2& hull,
                                      const TurnBlock& block) {
    const std::size_t n = poly.size();
    const auto turns = classify_turns(poly);
    if (block.before >= n || block.after >= n || block.length == 0 || block.length >= n) {
        throw PreconditionError("flip_monotone_block: bad block range");
    }
    const Turn other = block.turn == Turn::Left ? Turn::Right : Turn::Left;
    for (std::size_t t = 1; t <= block.length; ++t) {
        if (turns[(block.before + t) % n] != block.turn) {
            throw PreconditionError("flip_monotone_block: block turns are not uniform");
        }
    }
    if (turns[block.before] != other || turns[block.after] != other ||
        (block.before + block.length + 1) % n != block.after) {
        throw PreconditionError("flip_monotone_block: block is not maximal");
    }
    for (std::size_t t = 0; t <= block.length + 1; ++t) {
        if (!hull.on_boundary(poly[(block.before + t) % n])) {
            throw PreconditionError("flip_monotone_block: block vertex off the boundary");
        }
    }
    for (std::size_t t = 1; t < block.length; ++t) {
        const std::size_t a = (block.before + t) % n;
        if (detail::boundary_edge_direction(hull, poly[a], poly[(a + 1) % n]) == 0) {
            throw PreconditionError("flip_monotone_block: block is not in stretched form");
        }
    }
    const std::size_t i = block.before;
    const std::size_t k = block.after;
    const double si = *hull.locate(poly[i]);
    const double sk = *hull.locate(poly[k]);
    const double s1 = *hull.locate(poly[(i + 1) % n]);
    const double sk1 = *hull.locate(poly[(k + n - 1) % n]);
    // the "positive" sense is the block's own turning sense
    const bool block_ccw = block.turn == Turn::Left;
    const auto [tag, unlisted] = detail::classify_block_order(hull, si, s1, sk1, sk, block_ccw);

    Move mv;
    mv.kind = MoveKind::BlockFlip;
    mv.case_tag = tag;
    mv.unlisted_order = unlisted;
    mv.first = i;
    mv.last = k;

    const bool arc_ccw = !block_ccw;
    std::vector<Point2> rest;
    for (std::size_t t = k;; t = (t + 1) % n) {
        rest.push_back(poly[t]);
        if (t == i) {
            break;
        }
    }
    const bool same_point = distance(poly[i], poly[k]) <= hull.tol();
    std::vector<Point2> arc;
    if (i == k || (same_point && rest.size() <= 3)) {
        // the block closes the whole loop: walk once around
        if (i == k) {
            rest.pop_back();
        }
        arc = hull.corners_along(si, hull.perimeter(), arc_ccw);
    } else if (!same_point) {
        arc = hull.corners_between(si, sk, arc_ccw);
    }
    std::vector<Point2> v = rest;
    v.insert(v.end(), arc.begin(), arc.end());
    mv.changed = std::move(arc);
    return MoveResult{detail::normalize_on(hull, std::span<const Point2>(v)), std::move(mv)};
}

inline MoveResult flip_monotone_block(const ClosedPolyline2& poly, const TurnBlock& block) {
    return flip_monotone_block(poly, convex_hull(poly), block);
}

struct ImproveOptions {
    /// Move budget is budget_factor * n^2 for an n-vertex input.
    std::size_t budget_factor = 10;
    /// Direction every turn ends up with; blocks of the other direction are flipped.
    Turn target = Turn::Right;
    /// Skip circuit removals and block flips that would drop a hull corner, so the
    /// hull never shrinks along the trace. Blocks of either turn direction are then
    /// eligible, target-direction blocks first.
    bool keep_corners = true;
};

namespace detail {

class TraceRecorder {
public:
    TraceRecorder(ImprovementTrace& trace, std::size_t budget) : trace_(trace), budget_(budget) {}

    void record(MoveResult&& r) {
        TraceStep step{std::move(r.move), std::move(r.polyline), {}, {}};
        step.metrics = metrics(step.polyline);
        step.measure = measure(step.polyline, trace_.container);
        trace_.steps.push_back(std::move(step));
        if (trace_.steps.size() > budget_) {
            throw NonTermination("improve_to_circuit: move budget exceeded", trace_);
        }
    }
    const ClosedPolyline2& current() const {
        return trace_.steps.empty() ? trace_.initial : trace_.steps.back().polyline;
    }

private:
    ImprovementTrace& trace_;
    std::size_t budget_;
};

inline bool single_direction(const ClosedPolyline2& poly) {
    const auto t = classify_turns(poly);
    return std::all_of(t.begin(), t.end(), [&](Turn x) { return x == t[0]; });
}

/// Stretches every chord bounded by equal turns; returns false if none was found.
inline bool stretch_pass(TraceRecorder& rec, const ConvexPolygon2& hull) {
    bool any = false;
    for (bool again = true; again;) {
        again = false;
        const ClosedPolyline2& cur = rec.current();
        const auto turns = classify_turns(cur);
        for (std::size_t e = 0; e < cur.size(); ++e) {
            const std::size_t f = (e + 1) % cur.size();
            if (turns[e] == turns[f] && boundary_edge_direction(hull, cur[e], cur[f]) == 0) {
                rec.record(stretch(cur, hull, e));
                again = any = true;
                break;
            }
        }
    }
    return any;
}

} // namespace detail

/// Runs the improvement phases until the polyline is a multiple circuit of the
/// hull of the input. Every move is recorded in the returned trace.
inline std::pair<ClosedPolyline2, ImprovementTrace> improve_to_circuit(const ClosedPolyline2& input,
                                                                       const ImproveOptions& opt = {}) {
    ClosedPolyline2 start = normalize(input);
    PolylineMetrics start_metrics = metrics(start);
    ConvexPolygon2 container = convex_hull(start);
    ImprovementTrace trace{std::move(start), start_metrics, std::move(container), {}};
    const ConvexPolygon2& hull = trace.container;
    const std::size_t n0 = input.size();
    detail::TraceRecorder rec(trace, opt.budget_factor * n0 * n0);

    if (is_multiple_circuit(trace.initial, hull)) {
        return {trace.initial, std::move(trace)};
    }

    // vertices to the boundary
    for (;;) {
        const ClosedPolyline2& cur = rec.current();
        std::optional<std::size_t> idx;
        for (std::size_t j = 0; j < cur.size() && !idx; ++j) {
            if (hull.strictly_inside(cur[j])) {
                idx = j;
            }
        }
        if (!idx) {
            break;
        }
        MoveResult r = push_interior_vertex(cur, hull, *idx);
        for (std::size_t hops = 0; r.move.kind == MoveKind::CaseCShift; ++hops) {
            if (hops > cur.size()) {
                throw NonTermination("improve_to_circuit: case c dispatch does not settle", trace);
            }
            const std::size_t target = *r.move.shift_target;
            rec.record(std::move(r));
            r = push_interior_vertex(rec.current(), hull, target);
        }
        rec.record(std::move(r));
    }

    // direction changes
    const Turn flip_turn = opt.target == Turn::Right ? Turn::Left : Turn::Right;
    const Turn keep_turn = opt.target;
    while (!detail::single_direction(rec.current())) {
        for (;;) {
            auto r = remove_full_circuit(rec.current(), hull);
            if (!r || (opt.keep_corners && !detail::covers_corners(r->polyline, hull))) {
                break;
            }
            rec.record(std::move(*r));
        }
        detail::stretch_pass(rec, hull);
        if (detail::single_direction(rec.current())) {
            break;
        }
        const ClosedPolyline2& cur = rec.current();
        const auto turns = classify_turns(cur);
        auto blocks = find_blocks(turns, flip_turn);
        const auto others = find_blocks(turns, keep_turn);
        blocks.insert(blocks.end(), others.begin(), others.end());
        std::optional<MoveResult> chosen;
        for (const auto& b : blocks) {
            try {
                MoveResult r = flip_monotone_block(cur, hull, b);
                if (!opt.keep_corners || detail::covers_corners(r.polyline, hull)) {
                    chosen = std::move(r);
                    break;
                }
            } catch (const DegenerateInput&) {
                // the flip collapses the polyline to a doubled segment
            }
        }
        if (!chosen) {
            chosen = flip_monotone_block(cur, hull, blocks.front());
        }
        rec.record(std::move(*chosen));
    }
    detail::stretch_pass(rec, hull);

    ClosedPolyline2 result = rec.current();
    if (!is_multiple_circuit(result, hull)) {
        throw NonTermination("improve_to_circuit: final polyline is not a multiple circuit", trace);
    }
    return {std::move(result), std::move(trace)};
}

/// First step whose polyline leaves the hull of the previous one; empty when the
/// trace is hull-monotone.
inline std::optional<std::size_t> hull_monotonicity_violation(const ImprovementTrace& trace) {
    for (std::size_t s = 1; s <= trace.size(); ++s) {
        const ConvexPolygon2 prev = convex_hull(trace.polyline_after(s - 1));
        for (const auto& p : trace.polyline_after(s).vertices()) {
            if (!prev.contains(p)) {
                return s;
            }
        }
    }
    return std::nullopt;
}

/// CSV with one row per snapshot: step_index, move_kind, case_tag, L, V, T, P.
/// Row 0 is the initial polyline.
inline void write_trace_csv(const ImprovementTrace& trace, std::ostream& os) {
    const auto old_prec = os.precision(17);
    os << "step_index,move_kind,case_tag,L,V,T,P\n";
    const auto row = [&](std::size_t idx, std::string_view kind, int tag, const PolylineMetrics& m) {
        os << idx << ',' << kind << ',' << tag << ',' << m.L << ',' << m.V << ',' << m.T << ',' << m.P << '\n';
    };
    row(0, "initial", 0, trace.initial_metrics);
    for (std::size_t s = 0; s < trace.size(); ++s) {
        row(s + 1, to_string(trace.steps[s].move.kind), trace.steps[s].move.case_tag, trace.steps[s].metrics);
    }
    os.precision(old_prec);
}

} // namespace dna
