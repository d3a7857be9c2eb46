#pragma once

// One SVG frame per snapshot of an improvement trace: the container hull in
// gray, the polyline in black, vertices touched by the step in red.

#include <dna/improver.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace dna {

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

struct Frame {
    double x0, y1, scale;

    // y grows downwards in SVG
    std::string pt(Point2 p) const { return fmt((p.x - x0) * scale) + "," + fmt((y1 - p.y) * scale); }
};

inline std::string render_frame(const ConvexPolygon2& hull, const ClosedPolyline2& poly,
                                const std::vector<Point2>& changed, const std::string& title) {
    double x0 = hull.vertices()[0].x, x1 = x0, y0 = hull.vertices()[0].y, y1 = y0;
    for (const auto& v : hull.vertices()) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    const double size = 480.0;
    const double pad = 0.05 * std::max(x1 - x0, y1 - y0);
    x0 -= pad;
    y0 -= pad;
    x1 += pad;
    y1 += pad;
    const Frame f{x0, y1, size / std::max(x1 - x0, y1 - y0)};
    const double w = (x1 - x0) * f.scale;
    const double h = (y1 - y0) * f.scale;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
         "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    s += "<title>" + title + "</title>\n";
    s += "<polygon fill=\"none\" stroke=\"gray\" stroke-width=\"3\" points=\"";
    for (std::size_t i = 0; i < hull.size(); ++i) {
        s += (i ? " " : "") + f.pt(hull.vertices()[i]);
    }
    s += "\"/>\n<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
        s += (i ? " " : "") + f.pt(poly[i]);
    }
    s += "\"/>\n";
    for (const auto& p : poly.vertices()) {
        const auto c = f.pt(p);
        const auto comma = c.find(',');
        s += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"2.5\" fill=\"black\"/>\n";
    }
    for (const auto& p : changed) {
        const auto c = f.pt(p);
        const auto comma = c.find(',');
        s += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"5\" fill=\"red\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

} // namespace detail

/// Writes step_000.svg .. step_NNN.svg (trace length + 1 frames) into dir and
/// returns the paths in order.
inline std::vector<std::filesystem::path> emit_svg(const ImprovementTrace& trace, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create " + dir.string() + ": " + ec.message());
    }
    std::vector<std::filesystem::path> out;
    for (std::size_t s = 0; s <= trace.size(); ++s) {
        char name[32];
        std::snprintf(name, sizeof name, "step_%03zu.svg", s);
        const auto path = dir / name;
        const std::string title =
            s == 0 ? std::string("initial") : "step " + std::to_string(s) + ": " + std::string(to_string(trace.steps[s - 1].move.kind));
        static const std::vector<Point2> none;
        const auto& changed = s == 0 ? none : trace.steps[s - 1].move.changed;
        std::ofstream os(path, std::ios::binary);
        os << detail::render_frame(trace.container, trace.polyline_after(s), changed, title);
        if (!os) {
            throw IoError("cannot write " + path.string());
        }
        out.push_back(path);
    }
    return out;
}

} // namespace dna
