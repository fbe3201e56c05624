#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcover/geometry.hpp"

namespace fcover {

struct Literal {
    int var = 0;  // 1-based
    bool positive = true;
    friend bool operator==(Literal, Literal) = default;
};

struct CnfFormula {
    int variables = 0;
    std::vector<std::vector<Literal>> clauses;
};

class DimacsError : public std::runtime_error {
public:
    DimacsError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses DIMACS CNF. Rejects clauses with more than three literals and
/// clauses holding both x and not-x.
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& phi);

/// Truth value per variable; index 0 is x1.
using Assignment = std::vector<bool>;

bool satisfies(const CnfFormula& phi, const Assignment& a);
/// First satisfying assignment in binary counting order. Refuses more than 20 variables.
std::optional<Assignment> solve_by_truth_table(const CnfFormula& phi);

enum class Membership { Positive, Negative, Absent };
/// How variable `var` (1-based) occurs in clause `j` (1-based). Variables
/// beyond the formula's count are absent everywhere.
Membership membership(const CnfFormula& phi, int var, std::size_t j);

/// Output of the reduction, with every named coordinate kept for checks.
/// Per-clause vectors are 1-based: index 0 is unused.
struct GadgetInstance {
    CnfFormula formula;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<Point> s, g, c, o, w, z;  // s, g, c, o, w, z for j = 1..k; g also at k+1
    std::vector<Point> alpha, beta;       // j = 1..k-1
    Point eta, u, v, t;
    Point mu{-4.0, -1.0};
    std::vector<PolyCurve> ells;  // n + 2 subcurves, 0-based
    PolyCurve curve;
    std::vector<Point> points;
    std::vector<std::string> labels;  // parallel to points
    double eps = 1.0;

    /// Corners of the c-square around o_j.
    std::vector<Point> square(std::size_t j) const;
};

GadgetInstance reduce(const CnfFormula& phi);

/// The subcurve for a given membership pattern, one entry per clause.
PolyCurve make_ell(const GadgetInstance& inst, const std::vector<Membership>& pattern);

/// a_j: s_j for odd j, g_j for even j; b_j the other one.
Point path_a_vertex(const GadgetInstance& inst, std::size_t j);
Point path_b_vertex(const GadgetInstance& inst, std::size_t j);
std::pair<PolyCurve, PolyCurve> gadget_paths(const GadgetInstance& inst);

struct ForbiddenSegment {
    std::string name;
    PolyCurve segment;
    /// Indices (0-based) of the subcurves that have a matching piece; should be empty.
    std::vector<std::size_t> matched_by;
};

struct Separation {
    std::string name;
    double distance = 0.0;
};

struct LemmaReport {
    std::vector<bool> ell_near_a;
    std::vector<bool> ell_near_b;
    std::vector<ForbiddenSegment> forbidden;
    std::vector<Separation> separations;
    /// Detour separations dist(w_j, a_j c_j) and dist(w_j, b_j c_j) for clauses a variable misses.
    std::vector<Separation> detour_separations;
};

std::vector<ForbiddenSegment> forbidden_segments(const GadgetInstance& inst);
std::vector<Separation> cited_separations(const GadgetInstance& inst);
LemmaReport check_gadget_lemmas(const GadgetInstance& inst);

/// One row of a walk schedule: where the path walker and the subcurve walker
/// stand at the same moment.
struct ScheduleRow {
    std::string table;
    std::string block;  // membership case the row belongs to
    std::size_t j = 0;
    std::string path_at;
    std::string ell_at;
    std::optional<Point> path_point;  // nothing when the construction is undefined
    std::optional<Point> ell_point;
    double distance() const;
};

/// Every row of the four walk tables, instantiated on the gadget for each
/// admissible odd j. Rows naming coordinates the gadget lacks are left out.
std::vector<ScheduleRow> table_schedules(const GadgetInstance& inst);

PolyCurve build_witness(const GadgetInstance& inst, const Assignment& a);
bool verify_witness(const GadgetInstance& inst, const PolyCurve& q);

/// Every named coordinate of the gadget keyed by name ("s1", "w2", "alpha1", "eta", ...).
std::map<std::string, Point> named_coordinates(const GadgetInstance& inst);

}  // namespace fcover
