#include <doctest.h>

#include <string>

#include "fcover/instance_io.hpp"
#include "fcover/sat_reduce.hpp"
#include "fcover/svg.hpp"

using namespace fcover;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("instance round trip keeps every bit") {
    Instance inst;
    inst.kind = InstanceKind::ConvexPolygon;
    inst.target = {{0, 0}, {3, 0}, {0.1 + 0.2, 1.0 / 3.0}};
    inst.points = {{1e-17, -2.5}, {1.0 / 7.0, 22.0 / 7.0}};
    inst.epsilon = 0.1;
    inst.labels = {"a", "b"};
    const Instance back = parse_instance(write_instance(inst));
    CHECK(back.kind == inst.kind);
    CHECK(back.target == inst.target);
    CHECK(back.points == inst.points);
    CHECK(back.epsilon == inst.epsilon);
    CHECK(back.labels == inst.labels);
    CHECK_FALSE(back.clauses);
}

TEST_CASE("gadget instance round trip") {
    const GadgetInstance g = reduce(parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n"));
    const Instance inst = gadget_to_instance(g);
    CHECK(inst.kind == InstanceKind::Curve);
    CHECK(inst.clauses == 2u);
    CHECK(inst.squares.size() == 2);
    const Instance back = parse_instance(write_instance(inst));
    CHECK(PolyCurve(back.target) == g.curve);
    CHECK(back.points == g.points);
    CHECK(back.squares == inst.squares);
    CHECK(back.labels == g.labels);
}

TEST_CASE("malformed instances") {
    CHECK_THROWS_AS(parse_instance("{"), FormatError);
    CHECK_THROWS_AS(parse_instance("[]"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"target": [[0,0]], "points": [[0,0]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "blob", "target": [[0,0]], "points": [[0,0]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [], "points": [[0,0]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [[0,0]], "points": []})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [[0]], "points": [[0,0]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [[0,"a"]], "points": [[0,0]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [[0,0]], "points": [[0,0]], "epsilon": -1})"),
                    FormatError);
    CHECK_THROWS_AS(
        parse_instance(R"({"kind": "curve", "target": [[0,0]], "points": [[0,0]], "labels": ["a", "b"]})"),
        FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "curve", "target": [[0,0]], "points": [[0,0]], "clauses": -2})"),
                    FormatError);
    // A reflex vertex.
    CHECK_THROWS_AS(parse_instance(
                        R"({"kind": "convex-polygon", "target": [[0,0],[2,0],[1,1],[2,2],[0,2]], "points": [[0,0]]})"),
                    FormatError);
    CHECK_THROWS(load_instance("/nonexistent/instance.json"));
}

TEST_CASE("witness files") {
    const PolyCurve q{{0, 0}, {1.0 / 3.0, 2}, {5, -1}};
    CHECK(parse_witness(write_witness(q)) == q);
    CHECK_THROWS_AS(parse_witness(R"({"witness": []})"), FormatError);
    CHECK_THROWS_AS(parse_witness(R"({"curve": [[0,0]]})"), FormatError);
}

TEST_CASE("svg rendering") {
    Instance inst;
    inst.kind = InstanceKind::ConvexPolygon;
    inst.target = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    inst.points = {{0, 0}, {4, 4}};
    inst.epsilon = 0.5;
    const std::string a = render_svg(inst, PolyCurve{{0, 0}, {4, 4}, {0, 0}});
    CHECK(a == render_svg(inst, PolyCurve{{0, 0}, {4, 4}, {0, 0}}));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(contains(a, "</svg>"));
    CHECK(contains(a, "id=\"tube\""));
    CHECK_FALSE(contains(a, "id=\"labels\""));
    RenderOptions plain;
    plain.draw_tube = false;
    CHECK_FALSE(contains(render_svg(inst, std::nullopt, plain), "id=\"tube\""));
}

TEST_CASE("gadget rendering shows labels and squares") {
    const Instance inst = gadget_to_instance(reduce(parse_dimacs("p cnf 2 2\n1 0\n-2 0\n")));
    const std::string svg = render_svg(inst);
    for (const char* label : {">u<", ">v<", ">t<", ">s1<", ">g2<", ">c2<"}) {
        CAPTURE(label);
        CHECK(contains(svg, label));
    }
    CHECK(contains(svg, "id=\"squares\""));
    CHECK(contains(svg, "stroke-dasharray"));
}
