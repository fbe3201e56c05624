// Claims about the gadget that hold in the construction's intended
// geometry. Each is checked on the coordinates reduce() generates.

#include <doctest.h>

#include <cmath>

#include "fcover/frechet.hpp"
#include "fcover/sat_reduce.hpp"

using namespace fcover;

TEST_CASE("one clause: every lemma check passes") {
    const GadgetInstance g = reduce(CnfFormula{1, {{Literal{1, true}}}});
    const LemmaReport r = check_gadget_lemmas(g);
    for (std::size_t i = 0; i < r.ell_near_a.size(); ++i) {
        CAPTURE(i);
        CHECK(r.ell_near_a[i]);
        CHECK(r.ell_near_b[i]);
    }
    for (const auto& f : r.forbidden) CHECK(f.matched_by.empty());
    for (const auto& s : r.separations) {
        CAPTURE(s.name);
        CHECK(s.distance > 1.0);
    }
}

TEST_CASE("satisfying assignment gives a verified witness") {
    const GadgetInstance g = reduce(CnfFormula{1, {{Literal{1, true}}}});
    const PolyCurve q = build_witness(g, {true});
    CHECK(verify_witness(g, q));
    CHECK(decide_frechet(g.curve, q, 1.0));
}

TEST_CASE("first-segment walk rows for x in C1 are within 1") {
    const GadgetInstance g = reduce(CnfFormula{1, {{Literal{1, true}}}});
    std::vector<std::pair<Point, Point>> schedule;
    for (const auto& row : table_schedules(g)) {
        if (row.block != "x in C1" || row.j != 1) continue;
        if (!row.path_point || !row.ell_point) continue;
        CAPTURE(row.table);
        CAPTURE(row.path_at);
        CAPTURE(row.ell_at);
        CHECK(row.distance() <= 1.0 + 1e-9);
        schedule.emplace_back(*row.path_point, *row.ell_point);
    }
    CHECK_FALSE(schedule.empty());
    CHECK(verify_schedule(schedule, 1.0));
}
