#include "fcover/convex_decide.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fcover {

const char* to_string(PointType t) {
    switch (t) {
        case PointType::Good: return "Good";
        case PointType::B1: return "B1";
        case PointType::B2: return "B2";
        case PointType::B3: return "B3";
    }
    return "?";
}

std::optional<Anchor> anchor_start(const ConvexPolygon& polygon, std::span<const Point> s, double eps) {
    if (s.empty()) throw std::invalid_argument("anchor needs a nonempty point set");
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (lex_less(s[i], s[best])) best = i;
    const Point xp = polygon.closest_boundary_point(s[best]);
    if (dist(s[best], xp) > eps + kTolerance) return std::nullopt;
    return Anchor{best, s[best], xp};
}

PolyCurve boundary_curve(const ConvexPolygon& polygon, Point z) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!almost_equal(polygon[i], z)) continue;
        std::vector<Point> out;
        for (std::size_t t = 0; t <= n; ++t) out.push_back(polygon[(i + t) % n]);
        return PolyCurve(std::move(out));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (point_segment_distance(z, polygon.edge(i)) > kTolerance) continue;
        std::vector<Point> out{z};
        for (std::size_t t = 1; t <= n; ++t) out.push_back(polygon[(i + t) % n]);
        out.push_back(z);
        return PolyCurve(std::move(out));
    }
    throw GeometryError("boundary curve start is not on the polygon boundary");
}

bool hull_precondition(const ConvexPolygon& polygon, std::span<const Point> s, double eps) {
    std::optional<ConvexPolygon> hull;
    try {
        hull = convex_hull(s);
    } catch (const GeometryError&) {
        return true;  // not a polygon, nothing to check
    }
    const auto anchor = anchor_start(polygon, s, eps);
    if (!anchor) return false;
    // The leftmost point of S is always a hull vertex. Its partner z' may be
    // any boundary point within eps, not only the projection. Moving z' by
    // arc length h moves the closed-curve distance by at most h, so a scan
    // with step h decided at eps + h never rejects a good z'.
    const PolyCurve around = boundary_curve(*hull, anchor->x);
    if (decide_frechet(around, boundary_curve(polygon, anchor->x_prime), eps)) return true;
    const double h = 1e-3 * std::max(eps, 1e-3);
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Segment e = polygon.edge(i);
        const auto chord = ball_segment_intersection(Ball(anchor->x, eps), e);
        if (!chord) continue;
        const double len = chord->length();
        const auto steps = static_cast<std::size_t>(std::ceil(len / h));
        for (std::size_t k = 0; k <= steps; ++k) {
            const Point z = steps == 0 ? chord->a : chord->at(static_cast<double>(k) / steps);
            if (decide_frechet(around, boundary_curve(polygon, z), eps + h)) return true;
        }
    }
    return false;
}

namespace {

std::vector<Chain> split_chains(const ConvexPolygon& polygon, const PolyCurve& rho) {
    const std::size_t n = polygon.size();
    double minx = polygon[0].x, maxx = minx, miny = polygon[0].y, maxy = miny;
    for (const auto& p : polygon.vertices()) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    // Split on the axis of larger extent; the chain leaving the first split
    // vertex clockwise is called upper.
    const bool horizontal = (maxx - minx) >= (maxy - miny);
    std::size_t a = 0, b = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const Point p = polygon[i];
        if (horizontal) {
            if (p.x < polygon[a].x || (p.x == polygon[a].x && p.y < polygon[a].y)) a = i;
            if (p.x > polygon[b].x || (p.x == polygon[b].x && p.y > polygon[b].y)) b = i;
        } else {
            if (p.y < polygon[a].y || (p.y == polygon[a].y && p.x > polygon[a].x)) a = i;
            if (p.y > polygon[b].y || (p.y == polygon[b].y && p.x < polygon[b].x)) b = i;
        }
    }
    const std::size_t upper_edges = (b + n - a) % n;
    std::vector<Chain> out;
    for (std::size_t i = 0; i < rho.edge_count(); ++i) {
        const Point mid = midpoint(rho.edge(i));
        std::size_t e = 0;
        double best = point_segment_distance(mid, polygon.edge(0));
        for (std::size_t k = 1; k < n; ++k) {
            const double d = point_segment_distance(mid, polygon.edge(k));
            if (d < best) {
                best = d;
                e = k;
            }
        }
        out.push_back((e + n - a) % n < upper_edges ? Chain::Upper : Chain::Lower);
    }
    return out;
}

// A vertex sequence over S together with the reachable frontier after each vertex.
struct Walk {
    std::vector<std::size_t> idx;
    std::vector<Frontier> fr;
    std::vector<int> count;

    void push(std::size_t v, Frontier f) {
        idx.push_back(v);
        fr.push_back(std::move(f));
        ++count[v];
    }
    void pop() {
        --count[idx.back()];
        idx.pop_back();
        fr.pop_back();
    }
};

std::optional<std::size_t> earliest_edge(const Frontier& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i]) return i;
    return std::nullopt;
}

std::optional<Frontier> try_step(const ConvexInstance& inst, const Frontier& f, std::size_t from, std::size_t to) {
    Frontier g = advance(inst.rho, f, inst.points[from], inst.points[to], inst.eps);
    if (frontier_empty(g)) return std::nullopt;
    return g;
}

bool placed_by(const Frontier& f, std::size_t i) {
    const auto e = earliest_edge(f);
    return e && *e <= i;
}

// Appends target, directly or by one intermediate point, keeping it placed by cylinder i.
bool append_towards(const ConvexInstance& inst, Walk& w, std::size_t target, std::size_t i) {
    const std::size_t end = w.idx.back();
    if (auto f = try_step(inst, w.fr.back(), end, target); f && placed_by(*f, i)) {
        w.push(target, std::move(*f));
        return true;
    }
    for (std::size_t p = 0; p < inst.points.size(); ++p) {
        auto f1 = try_step(inst, w.fr.back(), end, p);
        if (!f1) continue;
        if (auto f2 = try_step(inst, *f1, p, target); f2 && placed_by(*f2, i)) {
            w.push(p, std::move(*f1));
            w.push(target, std::move(*f2));
            return true;
        }
    }
    return false;
}

std::optional<Frontier> walk_frontier(const ConvexInstance& inst, const std::vector<std::size_t>& idx) {
    Frontier f = start_frontier(inst.rho, inst.points[idx.front()], inst.eps);
    if (frontier_empty(f)) return std::nullopt;
    for (std::size_t t = 1; t < idx.size(); ++t) {
        f = advance(inst.rho, f, inst.points[idx[t - 1]], inst.points[idx[t]], inst.eps);
        if (frontier_empty(f)) return std::nullopt;
    }
    return f;
}

bool walk_feasible(const ConvexInstance& inst, const std::vector<std::size_t>& idx) {
    const auto f = walk_frontier(inst, idx);
    return f && frontier_finished(*f);
}

// Maps curve vertices back to point indices (vertices always come from S).
std::vector<std::size_t> to_indices(const PolyCurve& c, const ConvexInstance& inst) {
    std::vector<std::size_t> out;
    for (const auto& p : c.vertices()) {
        const auto it = std::find(inst.points.begin(), inst.points.end(), p);
        if (it == inst.points.end()) throw std::invalid_argument("curve vertex is not in the point set");
        out.push_back(static_cast<std::size_t>(it - inst.points.begin()));
    }
    return out;
}

PolyCurve to_curve(const std::vector<std::size_t>& idx, const ConvexInstance& inst) {
    std::vector<Point> out;
    for (auto i : idx) out.push_back(inst.points[i]);
    return PolyCurve(std::move(out));
}

// Shortest continuation from the end of w that finishes rho, found
// breadth first over (last point, frontier) with dominated states dropped.
bool close_loop(const ConvexInstance& inst, Walk& w) {
    struct State {
        std::size_t point;
        Frontier fr;
        std::optional<std::size_t> parent;
    };
    std::vector<State> states{{w.idx.back(), w.fr.back(), std::nullopt}};
    std::vector<std::vector<std::size_t>> seen(inst.points.size());
    seen[w.idx.back()].push_back(0);
    auto covered = [&](std::size_t p, const Frontier& f) {
        for (std::size_t k : seen[p])
            if (frontier_within(f, states[k].fr)) return true;
        return false;
    };
    std::size_t layer_begin = 0;
    for (std::size_t depth = 0; depth <= inst.points.size() && layer_begin < states.size(); ++depth) {
        const std::size_t layer_end = states.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k)
            for (std::size_t p = 0; p < inst.points.size(); ++p) {
                if (p == states[k].point) continue;
                auto f = try_step(inst, states[k].fr, states[k].point, p);
                if (!f || covered(p, *f)) continue;
                states.push_back({p, std::move(*f), k});
                seen[p].push_back(states.size() - 1);
                if (!frontier_finished(states.back().fr)) continue;
                std::vector<std::size_t> path;
                for (std::optional<std::size_t> at = states.size() - 1; at && *at != 0; at = states[*at].parent)
                    path.push_back(*at);
                for (auto it = path.rbegin(); it != path.rend(); ++it) w.push(states[*it].point, states[*it].fr);
                return true;
            }
        layer_begin = layer_end;
    }
    return false;
}

// Inserts p into the walk, alone or as a detour back to the previous
// vertex, at the first position the filter allows where the whole walk
// stays feasible.
template <class Allow>
bool insert_point(const ConvexInstance& inst, std::vector<std::size_t>& idx, std::size_t p, Allow allow) {
    std::vector<std::optional<std::size_t>> at(idx.size());
    {
        Frontier f = start_frontier(inst.rho, inst.points[idx[0]], inst.eps);
        at[0] = earliest_edge(f);
        for (std::size_t t = 1; t < idx.size() && !frontier_empty(f); ++t) {
            f = advance(inst.rho, f, inst.points[idx[t - 1]], inst.points[idx[t]], inst.eps);
            at[t] = earliest_edge(f);
        }
    }
    for (std::size_t pos = 1; pos <= idx.size(); ++pos) {
        const auto e = at[pos - 1];
        if (!e || !allow(*e)) continue;
        for (int detour = 0; detour < 2; ++detour) {
            std::vector<std::size_t> cand(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(pos));
            cand.push_back(p);
            if (detour) cand.push_back(idx[pos - 1]);
            cand.insert(cand.end(), idx.begin() + static_cast<std::ptrdiff_t>(pos), idx.end());
            if (walk_feasible(inst, cand)) {
                idx = std::move(cand);
                return true;
            }
        }
    }
    return false;
}

}  // namespace

ConvexInstance::ConvexInstance(ConvexPolygon poly, std::vector<Point> s, double e, Anchor a)
    : polygon(std::move(poly)),
      points(std::move(s)),
      eps(e),
      anchor(a),
      rho(boundary_curve(polygon, anchor.x_prime)),
      cylinders(rho, points, eps),
      chain(split_chains(polygon, rho)) {}

Classification classify(const ReachState& state, const ConvexInstance& inst) {
    const auto& d = inst.cylinders;
    const std::size_t n = d.cylinder_count();
    Classification out(n, d.point_count());
    for (const auto& node : state.nodes()) {
        const ReachSeed seed{node.point, node.cylinder, node.position};
        const ReachState from = propagate_from(d, std::span<const ReachSeed>(&seed, 1));
        std::optional<std::size_t> j;
        for (std::size_t k = node.cylinder + 1; k < n && !j; ++k)
            if (!state.set(k).empty()) j = k;

        PointType t = PointType::B3;
        if (!j) {
            for (std::size_t v : from.set(n - 1))
                if (can_finish(d, from, v, n - 1)) t = PointType::Good;
        } else if (from.node(*state.leftmost_entry(*j), *j)) {
            t = PointType::Good;
        } else if (!from.set(*j).empty()) {
            t = PointType::B1;
        } else {
            for (std::size_t k = *j + 1; k < n; ++k)
                if (!from.set(k).empty()) t = PointType::B2;
        }
        out.at(node.point, node.cylinder) = t;
    }
    return out;
}

std::optional<std::size_t> b3_everywhere(const Classification& types) {
    for (std::size_t v = 0; v < types.point_count(); ++v) {
        bool seen = false, all_b3 = true;
        for (std::size_t i = 0; i < types.cylinder_count(); ++i) {
            const auto& t = types.at(v, i);
            if (!t) continue;
            seen = true;
            all_b3 = all_b3 && *t == PointType::B3;
        }
        if (seen && all_b3) return v;
    }
    return std::nullopt;
}

bool good_before_semibad(const Classification& types, const ConvexInstance& inst) {
    const auto& d = inst.cylinders;
    for (std::size_t i = 0; i < types.cylinder_count(); ++i)
        for (std::size_t g = 0; g < types.point_count(); ++g) {
            if (types.at(g, i) != PointType::Good) continue;
            for (std::size_t b = 0; b < types.point_count(); ++b)
                if (types.semibad(b, i) && !entirely_before(g, b, i, d)) return false;
        }
    return true;
}

std::vector<DoubleBArea> find_doubleb(const Classification& types, const ConvexInstance& inst) {
    using Cell = std::pair<std::size_t, std::size_t>;
    std::vector<Cell> cells;
    std::vector<std::vector<std::size_t>> owners;
    for (std::size_t v = 0; v < types.point_count(); ++v) {
        std::vector<std::size_t> up, low;
        for (std::size_t i = 0; i < types.cylinder_count(); ++i)
            if (types.semibad(v, i)) (inst.chain[i] == Chain::Upper ? up : low).push_back(i);
        for (auto a : up)
            for (auto b : low) {
                const Cell c{a, b};
                auto it = std::find(cells.begin(), cells.end(), c);
                if (it == cells.end()) {
                    cells.push_back(c);
                    owners.push_back({v});
                } else {
                    owners[static_cast<std::size_t>(it - cells.begin())].push_back(v);
                }
            }
    }

    // Union cells that touch in the upper x lower grid.
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto near = [](std::size_t p, std::size_t q) { return (p > q ? p - q : q - p) <= 1; };
    for (std::size_t p = 0; p < cells.size(); ++p)
        for (std::size_t q = p + 1; q < cells.size(); ++q)
            if (near(cells[p].first, cells[q].first) && near(cells[p].second, cells[q].second))
                parent[find(p)] = find(q);

    std::vector<DoubleBArea> areas;
    std::vector<std::size_t> roots;
    for (std::size_t p = 0; p < cells.size(); ++p) {
        const std::size_t r = find(p);
        auto it = std::find(roots.begin(), roots.end(), r);
        std::size_t slot;
        if (it == roots.end()) {
            roots.push_back(r);
            areas.emplace_back();
            slot = areas.size() - 1;
        } else {
            slot = static_cast<std::size_t>(it - roots.begin());
        }
        areas[slot].cells.push_back(cells[p]);
        areas[slot].points.insert(areas[slot].points.end(), owners[p].begin(), owners[p].end());
    }
    for (auto& a : areas) {
        std::sort(a.cells.begin(), a.cells.end());
        std::sort(a.points.begin(), a.points.end());
        a.points.erase(std::unique(a.points.begin(), a.points.end()), a.points.end());
    }
    // Order areas by their first cell so the output is deterministic.
    std::sort(areas.begin(), areas.end(), [](const auto& l, const auto& r) { return l.cells < r.cells; });
    return areas;
}

PolyCurve build_alpha(const ReachState& state, const ConvexInstance& inst) {
    const auto& d = inst.cylinders;
    const std::size_t n = d.cylinder_count();
    const std::size_t x = inst.anchor.index;

    Walk w;
    w.count.assign(inst.points.size(), 0);
    Frontier f0 = start_frontier(inst.rho, inst.points[x], inst.eps);
    if (frontier_empty(f0)) return PolyCurve{inst.points[x]};
    w.push(x, std::move(f0));

    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = state.set(i);
        if (r.empty()) continue;
        const std::size_t lam = *state.leftmost_entry(i);
        if (w.count[lam] == 0) {
            // Back up until the leftmost entry point is reachable again.
            while (!append_towards(inst, w, lam, i) && w.idx.size() > 1) w.pop();
        }
        std::vector<std::size_t> order(r.begin(), r.end());
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const auto& ca = *d.chord(a, i);
            const auto& cb = *d.chord(b, i);
            if (ca.lo != cb.lo) return ca.lo < cb.lo;
            if (ca.hi != cb.hi) return ca.hi < cb.hi;
            return a < b;
        });
        for (std::size_t v : order) {
            if (w.count[v] > 0) continue;
            if (auto f = try_step(inst, w.fr.back(), w.idx.back(), v); f && placed_by(*f, i)) w.push(v, std::move(*f));
        }
    }

    // Close the loop: end within eps of x' at the end of rho.
    while (!frontier_finished(w.fr.back())) {
        if (close_loop(inst, w) || w.idx.size() == 1) break;
        w.pop();
    }
    return to_curve(w.idx, inst);
}

PolyCurve modify_for_twiceb(const PolyCurve& alpha, const DoubleBArea& area, Chain chain, const ConvexInstance& inst) {
    std::vector<std::size_t> cyl;
    for (const auto& [a, b] : area.cells) cyl.push_back(chain == Chain::Upper ? a : b);
    if (cyl.empty()) return alpha;
    const std::size_t lo = *std::min_element(cyl.begin(), cyl.end());
    const std::size_t hi = *std::max_element(cyl.begin(), cyl.end());
    const auto& d = inst.cylinders;

    // Area points in order along the chain.
    auto left_on_chain = [&](std::size_t v) {
        double best = 2.0 * static_cast<double>(d.cylinder_count());
        for (auto c : cyl)
            if (d.chord(v, c)) best = std::min(best, static_cast<double>(c) + d.chord(v, c)->lo);
        return best;
    };
    std::vector<std::size_t> todo = area.points;
    std::stable_sort(todo.begin(), todo.end(),
                     [&](std::size_t a, std::size_t b) { return left_on_chain(a) < left_on_chain(b); });

    std::vector<std::size_t> idx = to_indices(alpha, inst);
    for (std::size_t p : todo) {
        if (std::find(idx.begin(), idx.end(), p) != idx.end()) continue;
        insert_point(inst, idx, p, [&](std::size_t e) { return e + 1 >= lo && e <= hi + 1; });
    }
    return to_curve(idx, inst);
}

bool covers(const PolyCurve& q, std::span<const Point> s) {
    for (const auto& v : q.vertices())
        if (std::find(s.begin(), s.end(), v) == s.end()) return false;
    for (const auto& p : s)
        if (std::find(q.vertices().begin(), q.vertices().end(), p) == q.vertices().end()) return false;
    return true;
}

ConvexDecision decide_convex(const ConvexPolygon& polygon, std::span<const Point> s, double eps) {
    if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
    ConvexDecision out;
    if (s.empty()) {
        out.reason = "empty point set";
        return out;
    }
    const auto anchor = anchor_start(polygon, s, eps);
    if (!anchor) {
        out.reason = "leftmost point is farther than eps from the boundary";
        return out;
    }
    const ConvexInstance inst(polygon, std::vector<Point>(s.begin(), s.end()), eps, *anchor);
    out.rho = inst.rho;
    const auto& d = inst.cylinders;
    const ReachState state = propagate(d);

    for (std::size_t v = 0; v < d.point_count(); ++v)
        if (!state.reachable(v)) {
            out.reason = "a point is in no reachability set";
            return out;
        }
    const std::size_t last = d.cylinder_count() - 1;
    if (std::none_of(state.set(last).begin(), state.set(last).end(),
                     [&](std::size_t v) { return can_finish(d, state, v, last); })) {
        out.reason = "no reachable point closes the boundary";
        return out;
    }
    const Classification types = classify(state, inst);
    if (b3_everywhere(types)) {
        out.reason = "a point is B3 wherever it is reachable";
        return out;
    }

    std::vector<std::pair<const char*, PolyCurve>> candidates;
    const PolyCurve alpha = build_alpha(state, inst);
    candidates.emplace_back("alpha", alpha);
    const auto areas = find_doubleb(types, inst);
    if (!areas.empty()) {
        PolyCurve beta = alpha, gamma = alpha;
        for (const auto& a : areas) {
            beta = modify_for_twiceb(beta, a, Chain::Upper, inst);
            gamma = modify_for_twiceb(gamma, a, Chain::Lower, inst);
        }
        candidates.emplace_back("beta", std::move(beta));
        candidates.emplace_back("gamma", std::move(gamma));
    }

    // Points the constructions left out are inserted wherever the curve stays feasible.
    const std::size_t built = candidates.size();
    for (std::size_t c = 0; c < built; ++c) {
        if (covers(candidates[c].second, s) || !walk_feasible(inst, to_indices(candidates[c].second, inst))) continue;
        std::vector<std::size_t> idx = to_indices(candidates[c].second, inst);
        for (std::size_t p = 0; p < inst.points.size(); ++p)
            if (std::find(idx.begin(), idx.end(), p) == idx.end())
                insert_point(inst, idx, p, [](std::size_t) { return true; });
        candidates.emplace_back("repaired", to_curve(idx, inst));
    }

    for (auto& [name, q] : candidates) {
        if (!covers(q, s)) continue;
        const auto f = walk_frontier(inst, to_indices(q, inst));
        if (!f || !frontier_finished(*f)) continue;
        if (!decide_frechet(q, inst.rho, eps))
            throw std::logic_error(std::string("witness ") + name + " failed re-verification");
        out.feasible = true;
        out.witness = std::move(q);
        out.reason = name;
        return out;
    }
    out.reason = "no constructed curve covers every point";
    return out;
}

double minimize_convex(const ConvexPolygon& polygon, std::span<const Point> s, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (decide_convex(polygon, s, 0.0).feasible) return 0.0;
    double hi = polygon.diameter();
    for (const auto& p : s) {
        for (const auto& q : s) hi = std::max(hi, dist(p, q));
        for (const auto& q : polygon.vertices()) hi = std::max(hi, dist(p, q));
    }
    double lo = 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (decide_convex(polygon, s, mid).feasible)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace fcover
