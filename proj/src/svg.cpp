#include "fcover/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace fcover {

namespace {

// Fixed-format numbers keep the output byte-stable.
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct Frame {
    double min_x, max_y, scale;
    std::string x(double v) const { return num((v - min_x) * scale); }
    std::string y(double v) const { return num((max_y - v) * scale); }
    std::string pt(Point p) const { return x(p.x) + "," + y(p.y); }
};

std::string polyline(const Frame& f, const std::vector<Point>& pts, bool closed) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + f.pt(pts[i]);
    if (closed && !pts.empty()) s += " " + f.pt(pts.front());
    return s;
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<PolyCurve>& witness, const RenderOptions& options) {
    double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
    double hi_x = -lo_x, hi_y = -lo_x;
    auto grow = [&](Point p) {
        lo_x = std::min(lo_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_x = std::max(hi_x, p.x);
        hi_y = std::max(hi_y, p.y);
    };
    for (auto p : inst.target) grow(p);
    for (auto p : inst.points) grow(p);
    for (const auto& sq : inst.squares)
        for (auto p : sq) grow(p);
    if (witness)
        for (auto p : witness->vertices()) grow(p);
    if (lo_x > hi_x) lo_x = lo_y = hi_x = hi_y = 0.0;

    const double pad = options.margin + inst.epsilon.value_or(0.0);
    const Frame f{lo_x - pad, hi_y + pad, options.scale};
    const double w = (hi_x - lo_x + 2 * pad) * options.scale;
    const double h = (hi_y - lo_y + 2 * pad) * options.scale;
    const bool closed = inst.kind == InstanceKind::ConvexPolygon;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
        << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // The tube is the union of per-edge cylinders: a round-capped stroke of
    // width 2*eps along each edge.
    if (options.draw_tube && inst.epsilon && *inst.epsilon > 0.0 && !inst.target.empty()) {
        out << "<g id=\"tube\" fill=\"none\" stroke=\"#cfe3f7\" stroke-linecap=\"round\" stroke-linejoin=\"round\" "
               "stroke-width=\""
            << num(2 * *inst.epsilon * options.scale) << "\">\n";
        if (inst.target.size() == 1) {
            out << "<circle cx=\"" << f.x(inst.target[0].x) << "\" cy=\"" << f.y(inst.target[0].y) << "\" r=\""
                << num(*inst.epsilon * options.scale) << "\" fill=\"#cfe3f7\" stroke=\"none\"/>\n";
        } else {
            const std::size_t n = inst.target.size();
            const std::size_t edges = closed ? n : n - 1;
            for (std::size_t i = 0; i < edges; ++i) {
                const Point a = inst.target[i], b = inst.target[(i + 1) % n];
                out << "<line x1=\"" << f.x(a.x) << "\" y1=\"" << f.y(a.y) << "\" x2=\"" << f.x(b.x) << "\" y2=\""
                    << f.y(b.y) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }

    if (!inst.squares.empty()) {
        out << "<g id=\"squares\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4,3\">\n";
        for (const auto& sq : inst.squares) out << "<polygon points=\"" << polyline(f, sq, false) << "\"/>\n";
        out << "</g>\n";
    }

    out << "<polyline id=\"target\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\""
        << polyline(f, inst.target, closed) << "\"/>\n";

    if (witness && !witness->empty()) {
        const auto v = witness->vertices();
        out << "<polyline id=\"witness\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\""
            << polyline(f, std::vector<Point>(v.begin(), v.end()), false) << "\"/>\n";
    }

    out << "<g id=\"points\" fill=\"black\">\n";
    for (auto p : inst.points)
        out << "<circle cx=\"" << f.x(p.x) << "\" cy=\"" << f.y(p.y) << "\" r=\"3\"/>\n";
    out << "</g>\n";

    if (options.draw_labels && !inst.labels.empty()) {
        out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"11\">\n";
        for (std::size_t i = 0; i < inst.labels.size() && i < inst.points.size(); ++i)
            out << "<text x=\"" << num((inst.points[i].x - f.min_x) * f.scale + 5) << "\" y=\""
                << num((f.max_y - inst.points[i].y) * f.scale - 5) << "\">" << escape(inst.labels[i]) << "</text>\n";
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace fcover
