#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcover/geometry.hpp"

namespace fcover {

struct EnumerationBudget {
    std::size_t max_vertices = 0;                  // cap L on curve length
    std::uint64_t max_candidates = 200'000'000;    // safety cap on explored sequences
    bool prune = true;                             // frontier pruning and dominance memo
};

enum class Verdict { Feasible, InfeasibleUpToL, BudgetExhausted };
const char* to_string(Verdict v);

struct OracleResult {
    Verdict verdict = Verdict::InfeasibleUpToL;
    std::optional<PolyCurve> witness;
    std::uint64_t candidates_examined = 0;
    std::size_t max_vertices = 0;
};

/// Vertices of q all come from s, every point of s is a vertex of q, and q is
/// within eps of the target.
bool is_feasible(const PolyCurve& q, const PolyCurve& target, std::span<const Point> s, double eps);

/// Depth-first search over vertex sequences drawn from s in index order, up
/// to budget.max_vertices vertices.
OracleResult enumerate_feasible(const PolyCurve& target, std::span<const Point> s, double eps,
                                const EnumerationBudget& budget);

/// Default caps: 2|S|+2 for convex-polygon instances, 3k+9 for gadgets.
std::size_t default_convex_cap(std::size_t points);
std::size_t default_gadget_cap(std::size_t clauses);

struct ExperimentReport {
    std::size_t configurations = 0;
    std::size_t near_a = 0;  // subcurves within 1 of A
    std::size_t near_b = 0;  // subcurves within 1 of B
    std::size_t candidate_paths = 0;
    /// Candidate u..v paths within 1 of every subcurve, by name.
    std::vector<std::string> surviving_paths;
    std::size_t forbidden_segments = 0;
    std::size_t forbidden_matched = 0;  // forbidden segments some subcurve matches
    std::string text() const;
};

/// Desk-scale version of the gadget experiment: every membership pattern of
/// a k-clause gadget against A, B and all paths <u, p1..pk, v> with
/// p_j in {s_j, g_j, c_j}, plus the forbidden-segment certificates.
ExperimentReport replicate_gadget_experiment(std::size_t k);

}  // namespace fcover
