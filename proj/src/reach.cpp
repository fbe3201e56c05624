#include "fcover/reach.hpp"

#include <algorithm>
#include <tuple>

namespace fcover {

CylinderDecomposition::CylinderDecomposition(PolyCurve curve, std::vector<Point> points, double eps)
    : curve_(std::move(curve)), points_(std::move(points)), eps_(eps) {
    if (curve_.edge_count() == 0) throw std::invalid_argument("cylinder decomposition needs a curve with an edge");
    if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
    chords_.resize(curve_.edge_count() * points_.size());
    for (std::size_t i = 0; i < curve_.edge_count(); ++i)
        for (std::size_t v = 0; v < points_.size(); ++v)
            chords_[i * points_.size() + v] = free_interval(points_[v], curve_.edge(i), eps + kTolerance);
}

std::vector<std::size_t> CylinderDecomposition::members(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < points_.size(); ++v)
        if (contains(i, v)) out.push_back(v);
    return out;
}

CylinderDecomposition build_cylinders(const PolyCurve& curve, std::span<const Point> s, double eps) {
    return CylinderDecomposition(curve, std::vector<Point>(s.begin(), s.end()), eps);
}

namespace {

const Interval& member_chord(const CylinderDecomposition& d, std::size_t v, std::size_t i) {
    if (i >= d.cylinder_count() || v >= d.point_count() || !d.contains(i, v))
        throw std::invalid_argument("point is not a member of the cylinder");
    return *d.chord(v, i);
}

}  // namespace

bool before(std::size_t u, std::size_t v, std::size_t i, const CylinderDecomposition& d) {
    return member_chord(d, u, i).lo < member_chord(d, v, i).lo;
}

bool entirely_before(std::size_t u, std::size_t v, std::size_t i, const CylinderDecomposition& d) {
    return member_chord(d, u, i).hi < member_chord(d, v, i).lo;
}

Frontier step_frontier(const CylinderDecomposition& d, std::size_t u, std::size_t i, double from, std::size_t v) {
    const Interval& c = member_chord(d, u, i);
    Frontier f(d.cylinder_count());
    const double lo = std::max(c.lo, from);
    if (lo > c.hi + kTolerance) return f;
    f[i] = Interval{std::min(lo, c.hi), c.hi};
    return advance(d.curve(), f, d.points()[u], d.points()[v], d.eps());
}

bool direct_reach(const CylinderDecomposition& d, std::size_t u, std::size_t i, std::size_t v, std::size_t j) {
    if (j < i) throw std::invalid_argument("direct_reach needs j >= i");
    member_chord(d, v, j);
    const Frontier f = step_frontier(d, u, i, 0.0, v);
    return f[j].has_value();
}

std::optional<std::size_t> ReachState::node(std::size_t point, std::size_t cylinder) const {
    return index_[cylinder * point_count_ + point];
}

std::optional<double> ReachState::position(std::size_t point, std::size_t cylinder) const {
    const auto n = node(point, cylinder);
    if (!n) return std::nullopt;
    return nodes_[*n].position;
}

bool ReachState::reachable(std::size_t point) const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
        if (node(point, i)) return true;
    return false;
}

PolyCurve ReachState::witness(std::size_t point, std::size_t cylinder, std::span<const Point> pts) const {
    auto n = node(point, cylinder);
    if (!n) throw std::invalid_argument("point is not reachable at this cylinder");
    std::vector<Point> rev;
    for (std::optional<std::size_t> at = n; at; at = nodes_[*at].predecessor) rev.push_back(pts[nodes_[*at].point]);
    return PolyCurve(std::vector<Point>(rev.rbegin(), rev.rend()));
}

namespace {

struct Candidate {
    double position;
    std::optional<std::size_t> predecessor;
    bool entry;
};

}  // namespace

ReachState propagate_from(const CylinderDecomposition& d, std::span<const ReachSeed> seeds) {
    const std::size_t n = d.cylinder_count();
    const std::size_t m = d.point_count();
    const auto pts = d.points();

    ReachState r;
    r.sets_.resize(n);
    r.lambda_.resize(n);
    r.index_.resize(n * m);
    r.point_count_ = m;

    std::vector<std::optional<Candidate>> pending(n * m);
    auto offer = [&](std::size_t v, std::size_t k, Candidate c) {
        auto& slot = pending[k * m + v];
        if (!slot || c.position < slot->position) slot = c;  // first discovered wins ties
    };
    for (const auto& s : seeds) {
        if (s.cylinder >= n || s.point >= m || !d.contains(s.cylinder, s.point))
            throw std::invalid_argument("seed is not inside its cylinder");
        offer(s.point, s.cylinder, {std::max(s.position, d.chord(s.point, s.cylinder)->lo), std::nullopt, true});
    }

    for (std::size_t k = 0; k < n; ++k) {
        // Label-setting in order of position: positions never decrease along a move.
        using Key = std::tuple<double, double, double, double, std::size_t>;
        auto key = [&](std::size_t v) {
            return Key{pending[k * m + v]->position, d.chord(v, k)->hi, pts[v].x, pts[v].y, v};
        };
        std::vector<bool> done(m, false);
        while (true) {
            std::optional<std::size_t> best;
            for (std::size_t v = 0; v < m; ++v)
                if (!done[v] && pending[k * m + v] && (!best || key(v) < key(*best))) best = v;
            if (!best) break;
            const std::size_t u = *best;
            done[u] = true;
            const Candidate c = *pending[k * m + u];
            const std::size_t id = r.nodes_.size();
            r.nodes_.push_back({u, k, c.position, c.entry, c.predecessor});
            r.index_[k * m + u] = id;
            if (!r.lambda_[k]) r.lambda_[k] = u;

            for (std::size_t v = 0; v < m; ++v) {
                const Frontier f = step_frontier(d, u, k, c.position, v);
                if (!done[v] && f[k]) offer(v, k, {f[k]->lo, id, false});
                for (std::size_t j = k + 1; j < n; ++j)
                    if (f[j]) offer(v, j, {f[j]->lo, id, true});
            }
        }
        for (std::size_t v = 0; v < m; ++v)
            if (done[v]) r.sets_[k].push_back(v);
    }
    return r;
}

ReachState propagate(const CylinderDecomposition& d) {
    std::vector<ReachSeed> seeds;
    const Point start = d.curve().front();
    for (std::size_t v = 0; v < d.point_count(); ++v)
        if (dist(d.points()[v], start) <= d.eps() + kTolerance && d.contains(0, v)) seeds.push_back({v, 0, 0.0});
    return propagate_from(d, seeds);
}

bool can_finish(const CylinderDecomposition& d, const ReachState& r, std::size_t point, std::size_t i) {
    const std::size_t last = d.cylinder_count() - 1;
    if (i != last || !r.node(point, i)) return false;
    return d.chord(point, i)->hi >= 1.0 - kTolerance;
}

bool decide_subset(const PolyCurve& curve, std::span<const Point> s, double eps) {
    if (curve.edge_count() == 0)
        return std::any_of(s.begin(), s.end(), [&](Point p) { return dist(p, curve.front()) <= eps + kTolerance; });
    const auto d = build_cylinders(curve, s, eps);
    const auto r = propagate(d);
    const std::size_t last = d.cylinder_count() - 1;
    for (std::size_t v : r.set(last))
        if (can_finish(d, r, v, last)) return true;
    return false;
}

}  // namespace fcover
