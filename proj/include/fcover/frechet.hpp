#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fcover/geometry.hpp"

namespace fcover {

/// Closed parameter interval [lo, hi] inside [0, 1].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double t, double tol = kTolerance) const { return t >= lo - tol && t <= hi + tol; }
};

/// Parameters t of `s` with dist(s(t), p) <= radius. A degenerate segment
/// yields [0,1] or nothing.
std::optional<Interval> free_interval(Point p, const Segment& s, double radius);

/// Free-space diagram of two curves: cell (i, j) pairs edge i of `p` with
/// edge j of `q`. A single-vertex curve is treated as one degenerate edge.
class FreeSpaceDiagram {
public:
    FreeSpaceDiagram(const PolyCurve& p, const PolyCurve& q, double eps);

    std::size_t rows() const { return p_edges_; }
    std::size_t cols() const { return q_edges_; }
    /// Free interval (parameter along q's edge j) on the vertical line through vertex i of p.
    const std::optional<Interval>& vertical(std::size_t i, std::size_t j) const { return vertical_[i * q_edges_ + j]; }
    /// Free interval (parameter along p's edge i) on the horizontal line through vertex j of q.
    const std::optional<Interval>& horizontal(std::size_t i, std::size_t j) const {
        return horizontal_[i * (q_edges_ + 1) + j];
    }

    /// True iff a monotone path joins (0,0) and the opposite corner.
    bool corner_to_corner() const;

private:
    std::size_t p_edges_;
    std::size_t q_edges_;
    bool start_free_;
    std::vector<std::optional<Interval>> vertical_;    // (p_edges+1) x q_edges
    std::vector<std::optional<Interval>> horizontal_;  // p_edges x (q_edges+1)
};

/// Positions reachable on a fixed target curve after walking a prefix of some
/// other curve: one optional interval (edge parameter) per target edge.
using Frontier = std::vector<std::optional<Interval>>;

/// Frontier of a one-vertex walk at `p` starting at target(0): the maximal
/// prefix of the target staying within eps of `p`. Empty when dist(p, start) > eps.
Frontier start_frontier(const PolyCurve& target, Point p, double eps);

/// Every target position within eps of `p`; the start of a subcurve match.
Frontier anywhere_frontier(const PolyCurve& target, Point p, double eps);

/// Frontier after walking the segment a→b, given the frontier at a.
Frontier advance(const PolyCurve& target, const Frontier& at_a, Point a, Point b, double eps);

bool frontier_empty(const Frontier& f);
/// The target's end point is in the frontier.
bool frontier_finished(const Frontier& f);
/// Every interval of a lies inside the matching interval of b.
bool frontier_within(const Frontier& a, const Frontier& b);

/// δ_F(p, q) <= eps (closed, with kTolerance slack).
bool decide_frechet(const PolyCurve& p, const PolyCurve& q, double eps);

/// Some subcurve of `curve` lies within Fréchet distance eps of `pattern`.
bool decide_subcurve_frechet(const PolyCurve& curve, const PolyCurve& pattern, double eps);

/// Checks that <a,c> and <b,d> are within max(|ab|, |cd|) of each other.
bool obs1_bound(Point a, Point b, Point c, Point d);

double discrete_frechet(const PolyCurve& p, const PolyCurve& q);

/// Bisection over decide_frechet in [0, max vertex-pair distance].
double min_frechet(const PolyCurve& p, const PolyCurve& q, double tol);

/// Every pair is within eps (closed, with kTolerance slack).
bool verify_schedule(std::span<const std::pair<Point, Point>> schedule, double eps);

/// Inserts evenly spaced vertices so that no edge is longer than `max_step`.
PolyCurve densify(const PolyCurve& c, double max_step);

}  // namespace fcover
