#include "fcover/sat_reduce.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "fcover/frechet.hpp"

namespace fcover {

// ---------------------------------------------------------------- DIMACS

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula phi;
    bool header = false;
    std::size_t declared_clauses = 0;
    std::vector<Literal> current;
    std::size_t line_no = 0, clause_line = 0;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == 'c') continue;
        if (tok == "%") break;  // SATLIB trailer
        if (tok == "p") {
            if (header) throw DimacsError(line_no, "duplicate problem line");
            std::string fmt;
            long long nv = -1, nc = -1;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 1 || nc < 0)
                throw DimacsError(line_no, "malformed problem line, expected 'p cnf <vars> <clauses>'");
            phi.variables = static_cast<int>(nv);
            declared_clauses = static_cast<std::size_t>(nc);
            header = true;
            if (ls >> tok) throw DimacsError(line_no, "trailing tokens on problem line");
            continue;
        }
        if (!header) throw DimacsError(line_no, "clause before problem line");
        for (bool first = true;; first = false) {
            if (!first && !(ls >> tok)) break;
            long long lit = 0;
            std::size_t used = 0;
            try {
                lit = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw DimacsError(line_no, "bad literal '" + tok + "'");
            if (lit == 0) {
                if (current.empty()) throw DimacsError(line_no, "empty clause");
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (current.empty()) clause_line = line_no;
            const long long var = lit < 0 ? -lit : lit;
            if (var > phi.variables) throw DimacsError(line_no, "variable " + std::to_string(var) + " out of range");
            const Literal l{static_cast<int>(var), lit > 0};
            if (std::find(current.begin(), current.end(), l) != current.end()) continue;
            if (std::find(current.begin(), current.end(), Literal{l.var, !l.positive}) != current.end())
                throw DimacsError(line_no, "clause contains both x" + std::to_string(var) + " and its negation");
            current.push_back(l);
            if (current.size() > 3) throw DimacsError(line_no, "clause has more than three literals");
        }
    }
    if (!header) throw DimacsError(line_no, "missing problem line");
    if (!current.empty()) throw DimacsError(clause_line, "clause not terminated by 0");
    if (phi.clauses.size() != declared_clauses)
        throw DimacsError(line_no, "expected " + std::to_string(declared_clauses) + " clauses, found " +
                                       std::to_string(phi.clauses.size()));
    if (phi.clauses.empty()) throw DimacsError(line_no, "formula has no clauses");
    return phi;
}

std::string to_dimacs(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (const auto& l : c) out << (l.positive ? l.var : -l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

bool satisfies(const CnfFormula& phi, const Assignment& a) {
    if (a.size() != static_cast<std::size_t>(phi.variables)) throw std::invalid_argument("assignment size mismatch");
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& c) {
        return std::any_of(c.begin(), c.end(), [&](Literal l) { return a[l.var - 1] == l.positive; });
    });
}

std::optional<Assignment> solve_by_truth_table(const CnfFormula& phi) {
    if (phi.variables > 20) throw std::invalid_argument("truth-table search is limited to 20 variables");
    const auto n = static_cast<std::size_t>(phi.variables);
    Assignment a(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U;
        if (satisfies(phi, a)) return a;
    }
    return std::nullopt;
}

Membership membership(const CnfFormula& phi, int var, std::size_t j) {
    for (const auto& l : phi.clauses.at(j - 1))
        if (l.var == var) return l.positive ? Membership::Positive : Membership::Negative;
    return Membership::Absent;
}

// ---------------------------------------------------------------- reduction

std::vector<Point> GadgetInstance::square(std::size_t j) const {
    return {s[j], Point{s[j].x, g[j].y}, g[j], Point{g[j].x, s[j].y}};
}

namespace {

Point add(Point p, double dx, double dy) { return {p.x + dx, p.y + dy}; }

}  // namespace

PolyCurve make_ell(const GadgetInstance& inst, const std::vector<Membership>& pattern) {
    if (pattern.size() != inst.k) throw std::invalid_argument("membership pattern must cover every clause");
    std::vector<Point> l{inst.u, inst.mu};
    for (std::size_t j = 1; j <= inst.k; ++j) {
        const bool odd = j % 2 == 1;
        const Membership m = pattern[j - 1];
        if ((m == Membership::Positive && odd) || (m == Membership::Negative && !odd)) {
            l.insert(l.end(), {midpoint(inst.s[j], inst.c[j]), inst.c[j], inst.w[j]});
        } else if (m != Membership::Absent) {
            l.insert(l.end(), {inst.w[j], inst.c[j], midpoint(inst.g[j], inst.c[j])});
        } else {
            l.insert(l.end(), {inst.w[j], inst.c[j], inst.w[j]});
        }
        if (j != inst.k) l.insert(l.end(), {inst.alpha[j], inst.beta[j]});
    }
    l.insert(l.end(), {inst.eta, inst.v});
    return PolyCurve(std::move(l));
}

GadgetInstance reduce(const CnfFormula& phi) {
    if (phi.clauses.empty() || phi.variables < 1) throw std::invalid_argument("formula needs a variable and a clause");
    GadgetInstance in;
    in.formula = phi;
    in.k = phi.clauses.size();
    in.n = static_cast<std::size_t>(phi.variables);
    const std::size_t k = in.k;
    in.s.resize(k + 1);
    in.c.resize(k + 1);
    in.o.resize(k + 1);
    in.w.resize(k + 1);
    in.z.resize(k + 1);
    in.g.resize(k + 2);

    // Every offset is a multiple of 1/4, so all of this is exact in binary.
    in.g[1] = {1.0, 1.0};
    for (std::size_t j = 1; j <= k; ++j) {
        in.s[j] = add(in.g[j], -2.0, -2.0);
        in.o[j] = midpoint(in.s[j], in.g[j]);
        if (j % 2 == 1) {
            in.c[j] = {in.s[j].x, in.g[j].y};
            in.w[j] = add(in.o[j], 0.25, -0.25);
            in.g[j + 1] = add(in.s[j], 0.25 + 8.0, 1.75 + 15.0);
        } else {
            in.c[j] = {in.g[j].x, in.s[j].y};
            in.w[j] = add(in.o[j], -0.25, 0.25);
            in.g[j + 1] = add(in.s[j], 1.75 + 15.0, 0.25 + 8.0);
        }
        in.z[j] = midpoint(in.c[j], in.w[j]);
    }
    // Fifths are not dyadic; dividing an exact numerator once rounds correctly.
    in.alpha.resize(k);
    in.beta.resize(k);
    for (std::size_t j = 1; j < k; ++j) {
        in.alpha[j] = {(4.0 * in.g[j].x + in.g[j + 1].x) / 5.0, (4.0 * in.g[j].y + in.g[j + 1].y) / 5.0};
        in.beta[j] = {(in.s[j].x + 4.0 * in.s[j + 1].x) / 5.0, (in.s[j].y + 4.0 * in.s[j + 1].y) / 5.0};
    }
    if (k % 2 == 1) {
        in.eta = add(in.o[k], 1.0, 4.0);
        in.v = add(in.o[k], 1.0, 9.0);
    } else {
        in.eta = add(in.o[k], 4.0, 1.0);
        in.v = add(in.o[k], 9.0, 1.0);
    }
    in.u = {-9.0, -1.0};
    in.t = {in.v.x, in.u.y - 20.0};

    for (std::size_t j = 1; j <= k; ++j) {
        const std::string id = std::to_string(j);
        in.points.insert(in.points.end(), {in.s[j], in.g[j], in.c[j]});
        in.labels.insert(in.labels.end(), {"s" + id, "g" + id, "c" + id});
    }
    in.points.insert(in.points.end(), {in.u, in.v, in.t});
    in.labels.insert(in.labels.end(), {"u", "v", "t"});

    std::vector<Point> p{in.t};
    for (std::size_t i = 1; i <= in.n + 2; ++i) {
        std::vector<Membership> pattern(k);
        for (std::size_t j = 1; j <= k; ++j) pattern[j - 1] = membership(phi, static_cast<int>(i), j);
        in.ells.push_back(make_ell(in, pattern));
        const auto& l = in.ells.back().vertices();
        p.insert(p.end(), l.begin(), l.end());
        p.push_back(in.t);
    }
    in.curve = PolyCurve(std::move(p));
    return in;
}

Point path_a_vertex(const GadgetInstance& inst, std::size_t j) { return j % 2 == 1 ? inst.s[j] : inst.g[j]; }
Point path_b_vertex(const GadgetInstance& inst, std::size_t j) { return j % 2 == 1 ? inst.g[j] : inst.s[j]; }

std::pair<PolyCurve, PolyCurve> gadget_paths(const GadgetInstance& inst) {
    std::vector<Point> a{inst.u}, b{inst.u};
    for (std::size_t j = 1; j <= inst.k; ++j) {
        a.push_back(path_a_vertex(inst, j));
        b.push_back(path_b_vertex(inst, j));
    }
    a.push_back(inst.v);
    b.push_back(inst.v);
    return {PolyCurve(std::move(a)), PolyCurve(std::move(b))};
}

// ---------------------------------------------------------------- lemma checks

std::vector<ForbiddenSegment> forbidden_segments(const GadgetInstance& inst) {
    std::vector<ForbiddenSegment> out;
    auto add_seg = [&](std::string name, std::initializer_list<Point> pts) {
        ForbiddenSegment f{std::move(name), PolyCurve(pts), {}};
        for (std::size_t i = 0; i < inst.ells.size(); ++i)
            if (decide_subcurve_frechet(inst.ells[i], f.segment, inst.eps)) f.matched_by.push_back(i);
        out.push_back(std::move(f));
    };
    const auto& s = inst.s;
    const auto& g = inst.g;
    const auto& c = inst.c;
    for (std::size_t j = 1; j <= inst.k; ++j) {
        const std::string id = std::to_string(j);
        add_seg("s" + id + "g" + id, {s[j], g[j]});
        add_seg("s" + id + "c" + id + "g" + id, {s[j], c[j], g[j]});
        add_seg("g" + id + "c" + id + "s" + id, {g[j], c[j], s[j]});
        if (j == inst.k) continue;
        const std::string nx = std::to_string(j + 1);
        add_seg("s" + id + "s" + nx, {s[j], s[j + 1]});
        add_seg("g" + id + "g" + nx, {g[j], g[j + 1]});
        add_seg("c" + id + "c" + nx, {c[j], c[j + 1]});
        add_seg("c" + id + "g" + nx, {c[j], g[j + 1]});
        add_seg("c" + id + "s" + nx, {c[j], s[j + 1]});
    }
    add_seg("uc1", {inst.u, c[1]});
    add_seg("c" + std::to_string(inst.k) + "v", {c[inst.k], inst.v});
    return out;
}

std::vector<Separation> cited_separations(const GadgetInstance& inst) {
    std::vector<Separation> out;
    auto sep = [&](std::string name, Point p, Point a, Point b) {
        out.push_back({std::move(name), point_segment_distance(p, Segment{a, b})});
    };
    for (std::size_t j = 1; j <= inst.k; ++j) {
        const std::string id = std::to_string(j);
        sep("c" + id + "-s" + id + "g" + id, inst.c[j], inst.s[j], inst.g[j]);
        sep("w" + id + "-s" + id + "c" + id, inst.w[j], inst.s[j], inst.c[j]);
        sep("w" + id + "-g" + id + "c" + id, inst.w[j], inst.g[j], inst.c[j]);
    }
    for (std::size_t j = 1; j < inst.k; ++j) {
        const std::string id = std::to_string(j);
        const std::string nx = std::to_string(j + 1);
        sep("alpha" + id + "-s" + id + "s" + nx, inst.alpha[j], inst.s[j], inst.s[j + 1]);
        sep("beta" + id + "-g" + id + "g" + nx, inst.beta[j], inst.g[j], inst.g[j + 1]);
        sep("alpha" + id + "-c" + id + "c" + nx, inst.alpha[j], inst.c[j], inst.c[j + 1]);
        sep("alpha" + id + "-c" + id + "g" + nx, inst.alpha[j], inst.c[j], inst.g[j + 1]);
        sep("alpha" + id + "-c" + id + "s" + nx, inst.alpha[j], inst.c[j], inst.s[j + 1]);
    }
    sep("(-4,-1)-uc1", inst.mu, inst.u, inst.c[1]);
    sep("eta-c" + std::to_string(inst.k) + "v", inst.eta, inst.c[inst.k], inst.v);
    return out;
}

LemmaReport check_gadget_lemmas(const GadgetInstance& inst) {
    LemmaReport r;
    const auto [a, b] = gadget_paths(inst);
    for (const auto& l : inst.ells) {
        r.ell_near_a.push_back(decide_frechet(l, a, inst.eps));
        r.ell_near_b.push_back(decide_frechet(l, b, inst.eps));
    }
    r.forbidden = forbidden_segments(inst);
    r.separations = cited_separations(inst);
    for (std::size_t j = 1; j <= inst.k; ++j) {
        const std::string id = std::to_string(j);
        r.detour_separations.push_back(
            {"w" + id + "-a" + id + "c" + id, point_segment_distance(inst.w[j], {path_a_vertex(inst, j), inst.c[j]})});
        r.detour_separations.push_back(
            {"w" + id + "-b" + id + "c" + id, point_segment_distance(inst.w[j], {path_b_vertex(inst, j), inst.c[j]})});
    }
    return r;
}

// ---------------------------------------------------------------- walk tables

double ScheduleRow::distance() const {
    if (!path_point || !ell_point) return std::numeric_limits<double>::infinity();
    return dist(*path_point, *ell_point);
}

namespace {

// A named location that may be undefined: an intersection that does not
// exist, or a foot that falls off its segment.
struct Loc {
    std::string text;
    std::optional<Point> at;
    bool missing = false;  // names a coordinate the gadget does not have
};

struct Sym {
    const GadgetInstance& in;

    Loc pick(const char* name, const std::vector<Point>& v, std::size_t j, std::size_t lo, std::size_t hi) const {
        const std::string text = std::string(name) + std::to_string(j);
        if (j < lo || j > hi) return {text, std::nullopt, true};
        return {text, v[j], false};
    }
    Loc s(std::size_t j) const { return pick("s", in.s, j, 1, in.k); }
    Loc g(std::size_t j) const { return pick("g", in.g, j, 1, in.k); }
    Loc c(std::size_t j) const { return pick("c", in.c, j, 1, in.k); }
    Loc w(std::size_t j) const { return pick("w", in.w, j, 1, in.k); }
    Loc z(std::size_t j) const { return pick("z", in.z, j, 1, in.k); }
    Loc al(std::size_t j) const { return pick("alpha", in.alpha, j, 1, in.k - 1); }
    Loc be(std::size_t j) const { return pick("beta", in.beta, j, 1, in.k - 1); }
    Loc u() const { return {"u", in.u, false}; }
    Loc mu() const { return {"(-4,-1)", in.mu, false}; }

    static bool ok(const Loc& a) { return !a.missing && a.at.has_value(); }

    static Loc mid(const Loc& a, const Loc& b) {
        Loc r{"M(" + a.text + b.text + ")", std::nullopt, a.missing || b.missing};
        if (ok(a) && ok(b)) r.at = midpoint(*a.at, *b.at);
        return r;
    }
    // Intersection of segments ab and cd.
    static Loc meet(const Loc& a, const Loc& b, const Loc& c, const Loc& d) {
        Loc r{a.text + b.text + " x " + c.text + d.text, std::nullopt,
              a.missing || b.missing || c.missing || d.missing};
        if (ok(a) && ok(b) && ok(c) && ok(d)) {
            try {
                r.at = segment_intersection({*a.at, *b.at}, {*c.at, *d.at});
            } catch (const GeometryError&) {
                r.at.reset();  // overlapping segments give no single location
            }
        }
        return r;
    }
    static Loc foot(const Loc& p, const Loc& a, const Loc& b) {
        Loc r{p.text + " foot on " + a.text + b.text, std::nullopt, p.missing || a.missing || b.missing};
        if (ok(p) && ok(a) && ok(b) && !almost_equal(*a.at, *b.at)) r.at = perpendicular_foot(*p.at, {*a.at, *b.at});
        return r;
    }
    // A free location on segment ab chosen next to p: the closest point.
    static Loc near(const Loc& p, const Loc& a, const Loc& b) {
        Loc r{"h near " + p.text + " on " + a.text + b.text, std::nullopt, p.missing || a.missing || b.missing};
        if (ok(p) && ok(a) && ok(b)) r.at = closest_point(*p.at, {*a.at, *b.at});
        return r;
    }
};

struct TableBuilder {
    std::vector<ScheduleRow>& out;
    std::string table;
    std::size_t j;

    void row(const std::string& block, const Loc& path, const Loc& ell) {
        if (path.missing || ell.missing) return;
        out.push_back({table, block, j, path.text, ell.text, path.at, ell.at});
    }
};

const char* kPos = "x in C";
const char* kNeg = "not-x in C";
const char* kAbs = "x absent from C";

std::string block(const char* what, std::size_t clause) { return std::string(what) + std::to_string(clause); }

// Path A walking u -> s1 while the subcurve enters the first square.
void path_a_base(const Sym& y, std::vector<ScheduleRow>& out) {
    TableBuilder t{out, "path A, first segment", 1};
    const Loc h = Sym::near(y.mu(), y.u(), y.s(1));
    for (const char* b : {kPos, kNeg, kAbs}) {
        t.row(block(b, 1), y.u(), y.u());
        t.row(block(b, 1), h, y.mu());
    }
    t.row(block(kPos, 1), y.s(1), Sym::mid(y.s(1), y.c(1)));
    t.row(block(kNeg, 1), y.s(1), Sym::meet(y.mu(), y.w(1), y.s(1), y.c(1)));
    t.row(block(kAbs, 1), y.s(1), Sym::meet(y.mu(), y.w(1), y.s(1), y.c(1)));
}

// Path A from s_j through g_{j+1} to s_{j+2}, j odd.
void path_a_step(const Sym& y, std::size_t j, std::vector<ScheduleRow>& out) {
    TableBuilder t{out, "path A, induction step", j};
    const std::size_t j1 = j + 1, j2 = j + 2;
    const Loc exit_a = Sym::meet(y.c(j), y.g(j), y.s(j), y.g(j1));

    t.row(block(kPos, j), y.s(j), Sym::mid(y.c(j), y.s(j)));
    t.row(block(kPos, j), y.z(j), y.c(j));
    t.row(block(kPos, j), y.z(j), y.w(j));
    t.row(block(kPos, j), exit_a, Sym::meet(y.w(j), y.al(j), y.c(j), y.g(j)));

    for (const char* b : {kNeg, kAbs}) {
        t.row(block(b, j), y.s(j), Sym::meet(y.be(j - 1), y.w(j), y.c(j), y.s(j)));
        t.row(block(b, j), Sym::foot(y.w(j), y.s(j), y.g(j1)), y.w(j));
        t.row(block(b, j), y.z(j), y.z(j));
        t.row(block(b, j), y.z(j), y.c(j));
    }
    t.row(block(kNeg, j), exit_a, Sym::mid(y.c(j), y.g(j)));
    t.row(block(kAbs, j), y.z(j), y.w(j));
    t.row(block(kAbs, j), exit_a, Sym::meet(y.w(j), y.al(j), y.c(j), y.g(j)));

    t.row("between squares", Sym::near(y.al(j), y.s(j), y.g(j1)), y.al(j));
    t.row("between squares", Sym::near(y.be(j), y.s(j), y.g(j1)), y.be(j));

    const Loc enter = Sym::meet(y.s(j1), y.c(j1), y.s(j), y.g(j1));
    const Loc cross_in = Sym::meet(y.be(j), y.w(j1), y.c(j1), y.s(j1));
    const Loc cross_out = Sym::meet(y.g(j1), y.c(j1), y.w(j1), y.al(j1));
    t.row(block(kPos, j1), enter, cross_in);
    t.row(block(kPos, j1), y.z(j1), y.w(j1));
    t.row(block(kPos, j1), y.z(j1), y.z(j1));
    t.row(block(kPos, j1), y.z(j1), y.c(j1));
    t.row(block(kPos, j1), y.g(j1), Sym::mid(y.c(j1), y.g(j1)));

    t.row(block(kNeg, j1), enter, Sym::mid(y.s(j1), y.c(j1)));
    t.row(block(kNeg, j1), y.z(j1), y.c(j1));
    t.row(block(kNeg, j1), y.z(j1), y.w(j1));
    t.row(block(kNeg, j1), y.g(j1), cross_out);

    t.row(block(kAbs, j1), enter, cross_in);
    t.row(block(kAbs, j1), y.z(j1), y.w(j1));
    t.row(block(kAbs, j1), y.z(j1), y.c(j1));
    t.row(block(kAbs, j1), y.z(j1), y.w(j1));
    t.row(block(kAbs, j1), y.g(j1), cross_out);

    t.row("between squares", Sym::near(y.al(j1), y.g(j1), y.s(j2)), y.al(j1));
    t.row("between squares", Sym::near(y.be(j1), y.g(j1), y.s(j2)), y.be(j1));

    // The subcurve enters square j+2 along beta_{j+1} w_{j+2}.
    t.row(block(kNeg, j2), y.s(j2), Sym::meet(y.be(j1), y.w(j2), y.c(j2), y.s(j2)));
    t.row(block(kPos, j2), y.s(j2), Sym::mid(y.c(j2), y.s(j2)));
    t.row(block(kAbs, j2), y.s(j2), Sym::meet(y.be(j1), y.w(j2), y.c(j2), y.s(j2)));
}

// Path B walking u -> g1 while the subcurve crosses the first square.
void path_b_base(const Sym& y, std::vector<ScheduleRow>& out) {
    TableBuilder t{out, "path B, first segment", 1};
    const Loc h1 = Sym::near(y.mu(), y.u(), y.g(1));
    const Loc h2 = Sym::meet(y.u(), y.g(1), y.s(1), y.c(1));
    const Loc mid_cross = Sym::meet(y.u(), y.g(1), y.c(1), y.w(1));
    for (const char* b : {kPos, kNeg, kAbs}) {
        t.row(block(b, 1), y.u(), y.u());
        t.row(block(b, 1), h1, y.mu());
    }
    t.row(block(kPos, 1), h2, Sym::mid(y.s(1), y.c(1)));
    t.row(block(kPos, 1), h2, y.c(1));
    t.row(block(kPos, 1), mid_cross, mid_cross);
    t.row(block(kPos, 1), Sym::foot(y.w(1), y.u(), y.g(1)), y.w(1));
    t.row(block(kPos, 1), y.g(1), Sym::meet(y.w(1), y.al(1), y.c(1), y.g(1)));

    for (const char* b : {kNeg, kAbs}) {
        t.row(block(b, 1), h2, Sym::meet(y.mu(), y.w(1), y.s(1), y.c(1)));
        t.row(block(b, 1), mid_cross, y.w(1));
        t.row(block(b, 1), mid_cross, y.c(1));
    }
    t.row(block(kNeg, 1), y.g(1), Sym::mid(y.c(1), y.g(1)));
    t.row(block(kAbs, 1), mid_cross, y.w(1));
    t.row(block(kAbs, 1), y.g(1), Sym::meet(y.w(1), y.al(1), y.c(1), y.g(1)));
}

// Path B from g_j through s_{j+1} to g_{j+2}, j odd.
void path_b_step(const Sym& y, std::size_t j, std::vector<ScheduleRow>& out) {
    TableBuilder t{out, "path B, induction step", j};
    const std::size_t j1 = j + 1, j2 = j + 2;
    // The subcurve leaves square j along w_j alpha_j.
    const Loc leave = Sym::meet(y.w(j), y.al(j), y.c(j), y.g(j));
    t.row(block(kPos, j), y.g(j), leave);
    t.row(block(kNeg, j), y.g(j), Sym::mid(y.c(j), y.g(j)));
    t.row(block(kAbs, j), y.g(j), leave);

    t.row("between squares", Sym::near(y.al(j), y.g(j), y.s(j1)), y.al(j));
    t.row("between squares", Sym::near(y.be(j), y.g(j), y.s(j1)), y.be(j));

    const Loc cross_in = Sym::meet(y.be(j), y.w(j1), y.c(j1), y.s(j1));
    const Loc exit_b = Sym::meet(y.g(j1), y.c(j1), y.s(j1), y.g(j2));
    const Loc cross_out = Sym::meet(y.g(j1), y.c(j1), y.w(j1), y.al(j1));
    t.row(block(kPos, j1), y.s(j1), cross_in);
    t.row(block(kPos, j1), Sym::foot(y.w(j1), y.s(j1), y.g(j2)), y.w(j1));
    t.row(block(kPos, j1), y.z(j1), y.z(j1));
    t.row(block(kPos, j1), exit_b, y.c(j1));
    t.row(block(kPos, j1), exit_b, Sym::mid(y.c(j1), y.g(j1)));

    t.row(block(kNeg, j1), y.s(j1), Sym::mid(y.s(j1), y.c(j1)));
    t.row(block(kNeg, j1), y.z(j1), y.c(j1));
    t.row(block(kNeg, j1), y.z(j1), y.w(j1));
    t.row(block(kNeg, j1), exit_b, cross_out);

    t.row(block(kAbs, j1), y.s(j1), cross_in);
    t.row(block(kAbs, j1), y.z(j1), y.w(j1));
    t.row(block(kAbs, j1), y.z(j1), y.c(j1));
    t.row(block(kAbs, j1), y.z(j1), y.w(j1));
    t.row(block(kAbs, j1), exit_b, cross_out);

    t.row("between squares", Sym::near(y.al(j1), y.s(j1), y.g(j2)), y.al(j1));
    t.row("between squares", Sym::near(y.be(j1), y.s(j1), y.g(j2)), y.be(j1));

    const Loc enter = Sym::meet(y.s(j2), y.c(j2), y.s(j1), y.g(j2));
    const Loc cross_in2 = Sym::meet(y.s(j2), y.c(j2), y.be(j1), y.w(j2));
    const Loc cross_out2 = Sym::meet(y.g(j2), y.c(j2), y.w(j2), y.al(j2));
    t.row(block(kPos, j2), enter, Sym::mid(y.s(j2), y.c(j2)));
    t.row(block(kPos, j2), y.z(j2), y.c(j2));
    t.row(block(kPos, j2), y.z(j2), y.w(j2));
    t.row(block(kPos, j2), y.g(j2), cross_out2);

    t.row(block(kNeg, j2), enter, cross_in2);
    t.row(block(kNeg, j2), y.z(j2), y.w(j2));
    t.row(block(kNeg, j2), y.z(j2), y.c(j2));
    t.row(block(kNeg, j2), y.g(j2), Sym::mid(y.c(j2), y.g(j2)));

    t.row(block(kAbs, j2), enter, cross_in2);
    t.row(block(kAbs, j2), y.z(j2), y.w(j2));
    t.row(block(kAbs, j2), y.z(j2), y.c(j2));
    t.row(block(kAbs, j2), y.z(j2), y.w(j2));
    t.row(block(kAbs, j2), y.g(j2), cross_out2);
}

}  // namespace

std::vector<ScheduleRow> table_schedules(const GadgetInstance& inst) {
    std::vector<ScheduleRow> out;
    const Sym y{inst};
    path_a_base(y, out);
    path_b_base(y, out);
    for (std::size_t j = 1; j + 2 <= inst.k; j += 2) {
        path_a_step(y, j, out);
        path_b_step(y, j, out);
    }
    return out;
}

// ---------------------------------------------------------------- witness

PolyCurve build_witness(const GadgetInstance& inst, const Assignment& a) {
    if (a.size() != inst.n) throw std::invalid_argument("assignment must give a value to every variable");
    auto pass = [&](bool positive_path, std::optional<int> var) {
        std::vector<Point> pi{inst.u};
        for (std::size_t j = 1; j <= inst.k; ++j) {
            const Point at = positive_path ? path_a_vertex(inst, j) : path_b_vertex(inst, j);
            pi.push_back(at);
            if (var) {
                const Membership m = membership(inst.formula, *var, j);
                if ((positive_path && m == Membership::Positive) || (!positive_path && m == Membership::Negative)) {
                    pi.push_back(inst.c[j]);
                    pi.push_back(at);
                }
            }
        }
        pi.push_back(inst.v);
        return PolyCurve(std::move(pi));
    };
    PolyCurve q{inst.t};
    for (std::size_t i = 1; i <= inst.n; ++i) {
        q = concat(q, pass(a[i - 1], static_cast<int>(i)));
        q.push_back(inst.t);
    }
    q = concat(q, pass(true, std::nullopt));
    q.push_back(inst.t);
    q = concat(q, pass(false, std::nullopt));
    q.push_back(inst.t);
    return q;
}

bool verify_witness(const GadgetInstance& inst, const PolyCurve& q) {
    const auto& s = inst.points;
    for (const auto& p : q.vertices())
        if (std::find(s.begin(), s.end(), p) == s.end()) return false;
    for (const auto& p : s)
        if (std::find(q.vertices().begin(), q.vertices().end(), p) == q.vertices().end()) return false;
    return decide_frechet(inst.curve, q, inst.eps);
}

std::map<std::string, Point> named_coordinates(const GadgetInstance& inst) {
    std::map<std::string, Point> m;
    for (std::size_t j = 1; j <= inst.k; ++j) {
        const std::string id = std::to_string(j);
        m["s" + id] = inst.s[j];
        m["g" + id] = inst.g[j];
        m["c" + id] = inst.c[j];
        m["o" + id] = inst.o[j];
        m["w" + id] = inst.w[j];
        m["z" + id] = inst.z[j];
        if (j < inst.k) {
            m["alpha" + id] = inst.alpha[j];
            m["beta" + id] = inst.beta[j];
        }
    }
    m["g" + std::to_string(inst.k + 1)] = inst.g[inst.k + 1];
    m["eta"] = inst.eta;
    m["u"] = inst.u;
    m["v"] = inst.v;
    m["t"] = inst.t;
    return m;
}

}  // namespace fcover
