#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fcover/convex_decide.hpp"
#include "fcover/frechet.hpp"
#include "fcover/instance_io.hpp"
#include "fcover/oracle.hpp"
#include "fcover/reach.hpp"
#include "fcover/sat_reduce.hpp"
#include "fcover/svg.hpp"

using namespace fcover;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double epsilon_for(const Instance& inst, const std::optional<double>& flag) {
    if (flag) {
        if (!(*flag >= 0.0)) throw UsageError("--epsilon must be nonnegative");
        return *flag;
    }
    if (!inst.epsilon) throw UsageError("no epsilon in the file; pass --epsilon");
    return *inst.epsilon;
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        write_file(path, text);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int cmd_decide(const std::string& path, const std::optional<double>& eps_flag, const std::string& out) {
    const Instance inst = load_instance(path);
    const double eps = epsilon_for(inst, eps_flag);
    if (inst.kind == InstanceKind::ConvexPolygon) {
        const ConvexDecision d = decide_convex(inst.target_polygon(), inst.points, eps);
        std::cout << (d.feasible ? "YES" : "NO") << '\n';
        if (!d.feasible) {
            if (!d.reason.empty()) std::cerr << d.reason << '\n';
            return kNo;
        }
        if (out.empty()) std::cout << write_witness(*d.witness);
        else write_file(out, write_witness(*d.witness));
        return kYes;
    }
    const bool yes = decide_subset(inst.target_curve(), inst.points, eps);
    std::cout << (yes ? "YES" : "NO") << '\n';
    return yes ? kYes : kNo;
}

// Curve targets have no dedicated optimizer; bisect the decision instead.
double minimize_curve(const PolyCurve& target, std::span<const Point> s, double tol) {
    double hi = 0.0;
    for (auto p : s) {
        for (auto q : target.vertices()) hi = std::max(hi, dist(p, q));
        for (auto q : s) hi = std::max(hi, dist(p, q));
    }
    double lo = 0.0;
    if (decide_subset(target, s, 0.0)) return 0.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (decide_subset(target, s, mid) ? hi : lo) = mid;
    }
    return hi;
}

int cmd_minimize(const std::string& path, double tol) {
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    const Instance inst = load_instance(path);
    const double e = inst.kind == InstanceKind::ConvexPolygon ? minimize_convex(inst.target_polygon(), inst.points, tol)
                                                              : minimize_curve(inst.target_curve(), inst.points, tol);
    std::cout << fmt(e) << '\n';
    return kYes;
}

int cmd_reduce(const std::string& path, const std::string& out, const std::string& render) {
    const CnfFormula phi = parse_dimacs(read_file(path));
    const GadgetInstance g = reduce(phi);
    const Instance inst = gadget_to_instance(g);
    emit(out, write_instance(inst));
    if (!render.empty()) write_file(render, render_svg(inst));
    return kYes;
}

int cmd_witness(const std::string& path, const std::string& bits, const std::string& out) {
    const CnfFormula phi = parse_dimacs(read_file(path));
    if (bits.size() != static_cast<std::size_t>(phi.variables))
        throw UsageError("--assign needs " + std::to_string(phi.variables) + " bits, got " +
                         std::to_string(bits.size()));
    Assignment a;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw UsageError("--assign takes a string of 0 and 1");
        a.push_back(ch == '1');
    }
    const GadgetInstance g = reduce(phi);
    const PolyCurve q = build_witness(g, a);
    emit(out, write_witness(q));
    const bool ok = verify_witness(g, q);
    std::cerr << (ok ? "verified: feasible" : "verification failed") << '\n';
    if (!ok && !satisfies(phi, a)) std::cerr << "assignment falsifies the formula\n";
    return ok ? kYes : kNo;
}

int cmd_oracle(const std::string& path, const std::optional<double>& eps_flag, std::size_t max_vertices,
               std::uint64_t max_candidates, bool no_prune, const std::string& out) {
    const Instance inst = load_instance(path);
    const double eps = epsilon_for(inst, eps_flag);
    PolyCurve target;
    if (inst.kind == InstanceKind::ConvexPolygon) {
        const ConvexPolygon poly = inst.target_polygon();
        const auto anchor = anchor_start(poly, inst.points, eps);
        if (!anchor) {
            std::cout << "infeasible: the leftmost point is farther than epsilon from the boundary\n";
            return kNo;
        }
        target = boundary_curve(poly, anchor->x_prime);
    } else {
        target = inst.target_curve();
    }
    EnumerationBudget budget;
    budget.max_vertices = max_vertices;
    if (budget.max_vertices == 0)
        budget.max_vertices = inst.kind == InstanceKind::ConvexPolygon ? default_convex_cap(inst.points.size())
                              : inst.clauses ? default_gadget_cap(*inst.clauses)
                                             : default_convex_cap(inst.points.size());
    budget.max_candidates = max_candidates;
    budget.prune = !no_prune;
    const OracleResult r = enumerate_feasible(target, inst.points, eps, budget);
    std::cout << to_string(r.verdict) << " (L=" << r.max_vertices << ", candidates=" << r.candidates_examined << ")\n";
    if (r.witness) {
        if (out.empty()) std::cout << write_witness(*r.witness);
        else write_file(out, write_witness(*r.witness));
    }
    switch (r.verdict) {
        case Verdict::Feasible: return kYes;
        case Verdict::InfeasibleUpToL: return kNo;
        case Verdict::BudgetExhausted: return kError;
    }
    return kError;
}

int cmd_render(const std::string& path, const std::string& witness, const std::string& out) {
    const Instance inst = load_instance(path);
    std::optional<PolyCurve> w;
    if (!witness.empty()) w = parse_witness(read_file(witness));
    emit(out, render_svg(inst, w));
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Curves through every point of a set, within Frechet distance epsilon of a target"};
    app.require_subcommand(1);

    std::string path, out, render, bits, witness;
    std::optional<double> eps;
    double tol = 1e-6;
    std::size_t max_vertices = 0;
    std::uint64_t max_candidates = EnumerationBudget{}.max_candidates;
    bool no_prune = false;

    auto* decide = app.add_subcommand("decide", "Decide feasibility; prints YES or NO and a witness");
    decide->add_option("instance", path, "Instance JSON")->required();
    decide->add_option("--epsilon", eps, "Overrides the file's epsilon");
    decide->add_option("--out", out, "Write the witness here instead of stdout");

    auto* minimize = app.add_subcommand("minimize", "Smallest feasible epsilon");
    minimize->add_option("instance", path, "Instance JSON")->required();
    minimize->add_option("--tol", tol, "Bisection tolerance");

    auto* red = app.add_subcommand("reduce", "Build the gadget instance for a 3CNF formula");
    red->add_option("cnf", path, "DIMACS CNF file")->required();
    red->add_option("--out", out, "Instance JSON output (default stdout)");
    red->add_option("--render", render, "Also write an SVG here");

    auto* wit = app.add_subcommand("witness", "Build and verify the gadget curve for an assignment");
    wit->add_option("cnf", path, "DIMACS CNF file")->required();
    wit->add_option("--assign", bits, "One bit per variable, x1 first")->required();
    wit->add_option("--out", out, "Witness JSON output (default stdout)");

    auto* orc = app.add_subcommand("oracle", "Brute-force search up to a vertex cap");
    orc->add_option("instance", path, "Instance JSON")->required();
    orc->add_option("--epsilon", eps, "Overrides the file's epsilon");
    orc->add_option("--max-vertices", max_vertices, "Vertex cap L (default depends on the instance)");
    orc->add_option("--max-candidates", max_candidates, "Safety cap on explored sequences");
    orc->add_flag("--no-prune", no_prune, "Plain enumeration without frontier pruning");
    orc->add_option("--out", out, "Write the witness here instead of stdout");

    auto* ren = app.add_subcommand("render", "Render an instance (and a witness) as SVG");
    ren->add_option("instance", path, "Instance JSON")->required();
    ren->add_option("--witness", witness, "Witness JSON");
    ren->add_option("--out", out, "SVG output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }

    try {
        if (*decide) return cmd_decide(path, eps, out);
        if (*minimize) return cmd_minimize(path, tol);
        if (*red) return cmd_reduce(path, out, render);
        if (*wit) return cmd_witness(path, bits, out);
        if (*orc) return cmd_oracle(path, eps, max_vertices, max_candidates, no_prune, out);
        if (*ren) return cmd_render(path, witness, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
