#include "fcover/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fcover/frechet.hpp"
#include "fcover/sat_reduce.hpp"

namespace fcover {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Feasible: return "feasible";
        case Verdict::InfeasibleUpToL: return "infeasible-up-to-L";
        case Verdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

bool is_feasible(const PolyCurve& q, const PolyCurve& target, std::span<const Point> s, double eps) {
    for (const auto& v : q.vertices())
        if (std::find(s.begin(), s.end(), v) == s.end()) return false;
    for (const auto& p : s)
        if (std::find(q.vertices().begin(), q.vertices().end(), p) == q.vertices().end()) return false;
    return decide_frechet(target, q, eps);
}

std::size_t default_convex_cap(std::size_t points) { return 2 * points + 2; }
std::size_t default_gadget_cap(std::size_t clauses) { return 3 * clauses + 9; }

namespace {

class Search {
public:
    Search(const PolyCurve& target, std::span<const Point> s, double eps, const EnumerationBudget& budget)
        : target_(target), pts_(s), eps_(eps), budget_(budget), full_(s.size() == 64 ? ~0ULL : (1ULL << s.size()) - 1) {}

    OracleResult run() {
        for (std::size_t v = 0; v < pts_.size() && !stop(); ++v) {
            seq_.assign(1, v);
            if (budget_.prune) {
                Frontier f = start_frontier(target_, pts_[v], eps_);
                if (!frontier_empty(f)) pruned(v, 1ULL << v, f);
            } else {
                plain(1ULL << v);
            }
        }
        OracleResult r;
        r.candidates_examined = examined_;
        r.max_vertices = budget_.max_vertices;
        if (found_) {
            std::vector<Point> out;
            for (auto i : *found_) out.push_back(pts_[i]);
            r.witness = PolyCurve(std::move(out));
            if (!is_feasible(*r.witness, target_, pts_, eps_)) throw std::logic_error("oracle witness failed its own check");
            r.verdict = Verdict::Feasible;
        } else {
            r.verdict = exhausted_ ? Verdict::BudgetExhausted : Verdict::InfeasibleUpToL;
        }
        return r;
    }

private:
    bool stop() const { return found_.has_value() || exhausted_; }

    bool count() {
        if (++examined_ > budget_.max_candidates) exhausted_ = true;
        return !exhausted_;
    }

    // Frontier-pruned search; a consecutive repeat never changes the frontier.
    void pruned(std::size_t last, std::uint64_t mask, const Frontier& f) {
        if (!count()) return;
        if (mask == full_ && frontier_finished(f)) {
            found_ = seq_;
            return;
        }
        const std::size_t left = budget_.max_vertices - seq_.size();
        if (left == 0) return;
        for (std::size_t v = 0; v < pts_.size() && !stop(); ++v) {
            if (v == last) continue;
            Frontier g = advance(target_, f, pts_[last], pts_[v], eps_);
            if (frontier_empty(g)) continue;
            const std::uint64_t m = mask | (1ULL << v);
            if (dominated(v, m, g, left - 1)) continue;
            seq_.push_back(v);
            pruned(v, m, g);
            seq_.pop_back();
        }
    }

    void plain(std::uint64_t mask) {
        if (!count()) return;
        if (mask == full_) {
            std::vector<Point> q;
            for (auto i : seq_) q.push_back(pts_[i]);
            if (is_feasible(PolyCurve(std::move(q)), target_, pts_, eps_)) {
                found_ = seq_;
                return;
            }
        }
        if (seq_.size() == budget_.max_vertices) return;
        for (std::size_t v = 0; v < pts_.size() && !stop(); ++v) {
            seq_.push_back(v);
            plain(mask | (1ULL << v));
            seq_.pop_back();
        }
    }

    // True when an earlier visit with the same last vertex and coverage had
    // a superset frontier and at least as many vertices left.
    bool dominated(std::size_t last, std::uint64_t mask, const Frontier& f, std::size_t left) {
        auto& seen = memo_[{mask, last}];
        for (const auto& [g, l] : seen)
            if (l >= left && frontier_within(f, g)) return true;
        seen.emplace_back(f, left);
        return false;
    }

    const PolyCurve& target_;
    std::span<const Point> pts_;
    double eps_;
    EnumerationBudget budget_;
    std::uint64_t full_;
    std::vector<std::size_t> seq_;
    std::optional<std::vector<std::size_t>> found_;
    std::uint64_t examined_ = 0;
    bool exhausted_ = false;
    std::map<std::pair<std::uint64_t, std::size_t>, std::vector<std::pair<Frontier, std::size_t>>> memo_;
};

}  // namespace

OracleResult enumerate_feasible(const PolyCurve& target, std::span<const Point> s, double eps,
                                const EnumerationBudget& budget) {
    if (!(eps >= 0.0)) throw std::invalid_argument("epsilon must be nonnegative");
    if (s.empty()) throw std::invalid_argument("oracle needs a nonempty point set");
    if (s.size() > 63) throw std::invalid_argument("oracle supports at most 63 points");
    if (budget.max_vertices < s.size()) throw std::invalid_argument("vertex cap must be at least |S|");
    if (budget.max_candidates == 0) throw std::invalid_argument("candidate cap must be positive");
    return Search(target, s, eps, budget).run();
}

std::string ExperimentReport::text() const {
    std::ostringstream out;
    out << "configurations: " << configurations << '\n'
        << "within 1 of A: " << near_a << '/' << configurations << '\n'
        << "within 1 of B: " << near_b << '/' << configurations << '\n'
        << "candidate paths: " << candidate_paths << ", within 1 of every subcurve:";
    for (const auto& p : surviving_paths) out << ' ' << p;
    if (surviving_paths.empty()) out << " none";
    out << '\n' << "forbidden segments matched: " << forbidden_matched << '/' << forbidden_segments << '\n';
    return out.str();
}

ExperimentReport replicate_gadget_experiment(std::size_t k) {
    if (k < 1 || k > 8) throw std::invalid_argument("experiment supports 1..8 clauses");
    CnfFormula phi{1, std::vector<std::vector<Literal>>(k, {Literal{1, true}})};
    GadgetInstance inst = reduce(phi);

    // Every membership pattern, one subcurve each.
    inst.ells.clear();
    std::size_t total = 1;
    for (std::size_t j = 0; j < k; ++j) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Membership> pattern(k);
        for (std::size_t j = 0, c = code; j < k; ++j, c /= 3)
            pattern[j] = c % 3 == 0 ? Membership::Positive : c % 3 == 1 ? Membership::Negative : Membership::Absent;
        inst.ells.push_back(make_ell(inst, pattern));
    }

    ExperimentReport r;
    r.configurations = inst.ells.size();
    const auto [a, b] = gadget_paths(inst);
    for (const auto& l : inst.ells) {
        r.near_a += decide_frechet(l, a, inst.eps);
        r.near_b += decide_frechet(l, b, inst.eps);
    }

    r.candidate_paths = total;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<Point> p{inst.u};
        std::string name = "u";
        for (std::size_t j = 1, c = code; j <= k; ++j, c /= 3) {
            const char* which = c % 3 == 0 ? "s" : c % 3 == 1 ? "g" : "c";
            p.push_back(c % 3 == 0 ? inst.s[j] : c % 3 == 1 ? inst.g[j] : inst.c[j]);
            name += std::string(",") + which + std::to_string(j);
        }
        p.push_back(inst.v);
        name += ",v";
        const PolyCurve path(std::move(p));
        if (std::all_of(inst.ells.begin(), inst.ells.end(),
                        [&](const PolyCurve& l) { return decide_frechet(l, path, inst.eps); }))
            r.surviving_paths.push_back("<" + name + ">");
    }

    const auto forbidden = forbidden_segments(inst);
    r.forbidden_segments = forbidden.size();
    for (const auto& f : forbidden) r.forbidden_matched += !f.matched_by.empty();
    return r;
}

}  // namespace fcover
