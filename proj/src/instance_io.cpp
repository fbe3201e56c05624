#include "fcover/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fcover/sat_reduce.hpp"

namespace fcover {

using nlohmann::json;

namespace {

Point read_point(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FormatError(std::string(what) + ": expected a point [x, y]");
    Point p{j[0].get<double>(), j[1].get<double>()};
    if (!is_finite(p)) throw FormatError(std::string(what) + ": coordinates must be finite");
    return p;
}

std::vector<Point> read_points(const json& j, const char* what) {
    if (!j.is_array()) throw FormatError(std::string(what) + ": expected an array of points");
    std::vector<Point> out;
    for (const auto& e : j) out.push_back(read_point(e, what));
    return out;
}

// One point per line so fixtures diff cleanly; json's number output is
// round-trip exact.
std::string point_list(const std::vector<Point>& pts, const std::string& indent) {
    if (pts.empty()) return "[]";
    std::string out = "[\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += indent + "  " + json::array({pts[i].x, pts[i].y}).dump();
        out += i + 1 < pts.size() ? ",\n" : "\n";
    }
    return out + indent + "]";
}

void field(std::string& out, const std::string& key, const std::string& value) {
    out += out.size() > 2 ? ",\n" : "";
    out += "  " + json(key).dump() + ": " + value;
}

}  // namespace

PolyCurve Instance::target_curve() const { return PolyCurve(target); }
ConvexPolygon Instance::target_polygon() const { return ConvexPolygon(target); }

Instance parse_instance(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("instance must be a JSON object");

    Instance inst;
    const auto kind = j.find("kind");
    if (kind == j.end() || !kind->is_string()) throw FormatError("missing string field 'kind'");
    if (*kind == "curve")
        inst.kind = InstanceKind::Curve;
    else if (*kind == "convex-polygon")
        inst.kind = InstanceKind::ConvexPolygon;
    else
        throw FormatError("kind must be 'curve' or 'convex-polygon'");

    if (!j.contains("target")) throw FormatError("missing field 'target'");
    if (!j.contains("points")) throw FormatError("missing field 'points'");
    inst.target = read_points(j["target"], "target");
    inst.points = read_points(j["points"], "points");
    if (inst.target.empty()) throw FormatError("target needs at least one vertex");
    if (inst.points.empty()) throw FormatError("points must not be empty");

    if (j.contains("epsilon") && !j["epsilon"].is_null()) {
        if (!j["epsilon"].is_number()) throw FormatError("epsilon must be a number");
        const double e = j["epsilon"].get<double>();
        if (!(e >= 0.0) || !std::isfinite(e)) throw FormatError("epsilon must be a finite nonnegative number");
        inst.epsilon = e;
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw FormatError("labels must be an array of strings");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw FormatError("labels must be an array of strings");
            inst.labels.push_back(l.get<std::string>());
        }
        if (inst.labels.size() != inst.points.size()) throw FormatError("labels must match points one to one");
    }
    if (j.contains("squares")) {
        if (!j["squares"].is_array()) throw FormatError("squares must be an array of point lists");
        for (const auto& sq : j["squares"]) inst.squares.push_back(read_points(sq, "squares"));
    }
    if (j.contains("clauses")) {
        if (!j["clauses"].is_number_unsigned()) throw FormatError("clauses must be a nonnegative integer");
        inst.clauses = j["clauses"].get<std::size_t>();
    }

    if (inst.kind == InstanceKind::ConvexPolygon) {
        try {
            (void)inst.target_polygon();
        } catch (const GeometryError& e) {
            throw FormatError(std::string("target: ") + e.what());
        }
    }
    return inst;
}

std::string write_instance(const Instance& inst) {
    std::string out = "{\n";
    field(out, "kind", inst.kind == InstanceKind::Curve ? "\"curve\"" : "\"convex-polygon\"");
    field(out, "target", point_list(inst.target, "  "));
    field(out, "points", point_list(inst.points, "  "));
    if (inst.epsilon) field(out, "epsilon", json(*inst.epsilon).dump());
    if (!inst.labels.empty()) field(out, "labels", json(inst.labels).dump());
    if (!inst.squares.empty()) {
        std::string sq = "[\n";
        for (std::size_t i = 0; i < inst.squares.size(); ++i)
            sq += "    " + point_list(inst.squares[i], "    ") + (i + 1 < inst.squares.size() ? ",\n" : "\n");
        field(out, "squares", sq + "  ]");
    }
    if (inst.clauses) field(out, "clauses", std::to_string(*inst.clauses));
    return out + "\n}\n";
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

Instance gadget_to_instance(const GadgetInstance& g) {
    Instance inst;
    inst.kind = InstanceKind::Curve;
    const auto v = g.curve.vertices();
    inst.target.assign(v.begin(), v.end());
    inst.points = g.points;
    inst.epsilon = g.eps;
    inst.labels = g.labels;
    for (std::size_t j = 1; j <= g.k; ++j) inst.squares.push_back(g.square(j));
    inst.clauses = g.k;
    return inst;
}

std::string write_witness(const PolyCurve& q) {
    const auto v = q.vertices();
    std::string out = "{\n";
    field(out, "witness", point_list(std::vector<Point>(v.begin(), v.end()), "  "));
    return out + "\n}\n";
}

PolyCurve parse_witness(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("witness")) throw FormatError("missing field 'witness'");
    auto pts = read_points(j["witness"], "witness");
    if (pts.empty()) throw FormatError("witness needs at least one vertex");
    return PolyCurve(std::move(pts));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << text;
}

}  // namespace fcover
