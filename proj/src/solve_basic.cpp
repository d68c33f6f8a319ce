#include <algorithm>

#include "relmod/dnf.hpp"
#include "solver_internal.hpp"

namespace relmod {

namespace {

using namespace detail;

// Literal shapes left over a basic graph once reflexive atoms are folded
// (x~x is false, x=x is true) and arguments are put into (first, second)
// order, which symmetry permits.
enum class Lit { edge_pos, edge_neg, eq_pos, eq_neg };

// Clause shapes surviving the simplification:
//   eq_pos & edge_pos          -> unsatisfiable
//   eq_pos & edge_neg          -> eq_pos
//   eq_neg & edge_pos          -> edge_pos
// leaving units plus the one genuine pair eq_neg & edge_neg.
enum class ClauseShape { tautology, edge_pos, edge_neg, eq_pos, eq_neg, neq_and_nonedge };

struct BasicMatrix {
    bool unsat = false;  // no satisfiable clause at all
    bool has[6] = {};

    bool shape(ClauseShape s) const { return has[static_cast<int>(s)]; }
};

// Returns nullopt when the clause is unsatisfiable on basic graphs. Both E
// and = are symmetric there, so the two argument orders collapse.
std::optional<ClauseShape> simplify_clause(const Clause& clause) {
    bool lit_present[4] = {false, false, false, false};
    auto set = [&](Lit l) { lit_present[static_cast<int>(l)] = true; };
    auto present = [&](Lit l) { return lit_present[static_cast<int>(l)]; };

    for (const Literal& l : clause) {
        const bool reflexive = l.args[0] == l.args[1];
        if (l.is_eq) {
            if (reflexive) {
                if (l.negated) return std::nullopt;  // x != x
                continue;                            // x = x
            }
            set(l.negated ? Lit::eq_neg : Lit::eq_pos);
        } else {
            if (reflexive) {
                if (!l.negated) return std::nullopt;  // x ~ x on a basic graph
                continue;                             // ~(x ~ x) holds
            }
            set(l.negated ? Lit::edge_neg : Lit::edge_pos);
        }
    }
    if ((present(Lit::edge_pos) && present(Lit::edge_neg)) ||
        (present(Lit::eq_pos) && present(Lit::eq_neg)))
        return std::nullopt;  // complementary after symmetry normalization
    if (present(Lit::eq_pos) && present(Lit::edge_pos)) return std::nullopt;
    if (present(Lit::eq_pos)) return ClauseShape::eq_pos;  // absorbs edge_neg
    if (present(Lit::eq_neg) && present(Lit::edge_neg)) return ClauseShape::neq_and_nonedge;
    if (present(Lit::edge_pos)) return ClauseShape::edge_pos;  // absorbs eq_neg
    if (present(Lit::edge_neg)) return ClauseShape::edge_neg;
    if (present(Lit::eq_neg)) return ClauseShape::eq_neg;
    return ClauseShape::tautology;
}

BasicMatrix analyze(const Formula& f) {
    BasicMatrix out;
    bool any = false;
    for (const Clause& c : to_dnf(f.matrix)) {
        auto shape = simplify_clause(c);
        if (!shape) continue;
        any = true;
        out.has[static_cast<int>(*shape)] = true;
    }
    out.unsat = !any;
    return out;
}

std::vector<int> isolated_vertices(const Structure& s) {
    std::vector<int> out;
    for (int v = 0; v < s.universe_size(); ++v) {
        bool iso = true;
        for (int u = 0; u < s.universe_size() && iso; ++u)
            if (u != v && s.adjacent(v, u)) iso = false;
        if (iso) out.push_back(v);
    }
    return out;
}

std::vector<int> universal_vertices(const Structure& s) {
    std::vector<int> out;
    for (int v = 0; v < s.universe_size(); ++v) {
        bool uni = true;
        for (int u = 0; u < s.universe_size() && uni; ++u)
            if (u != v && !s.adjacent(v, u)) uni = false;
        if (uni) out.push_back(v);
    }
    return out;
}

SolveResult yes(const char* solver, Modulator witness, std::uint64_t nodes = 1) {
    SolveResult r;
    r.decision = true;
    r.witness = std::move(witness);
    r.solver_used = solver;
    r.nodes_explored = nodes;
    return r;
}

SolveResult no(const char* solver, std::uint64_t nodes = 1) {
    SolveResult r;
    r.solver_used = solver;
    r.nodes_explored = nodes;
    return r;
}

void add_pair(Modulator& m, int u, int v) {
    m.sets[0].insert({u, v});
    m.sets[0].insert({v, u});
}

// pairs up the given vertices; an odd leftover is matched to the smallest
// other vertex
Modulator pair_up(const Structure& s, const std::vector<int>& vertices) {
    Modulator m = Modulator::empty_for(s.vocabulary());
    for (std::size_t i = 0; i + 1 < vertices.size(); i += 2)
        add_pair(m, vertices[i], vertices[i + 1]);
    if (vertices.size() % 2 == 1) {
        const int lone = vertices.back();
        for (int u = 0; u < s.universe_size(); ++u)
            if (u != lone) {
                add_pair(m, lone, u);
                break;
            }
    }
    return m;
}

SolveResult brute_fallback(const SolveRequest& req, const char* solver) {
    SolveResult r = solve_brute_force(req);
    r.solver_used = std::string(solver) + "(small-graph brute fallback)";
    return r;
}

}  // namespace

SolveResult solve_basic_ae(const SolveRequest& req) {
    validate_request(req);
    if (req.structure_type != StructureType::basic)
        throw SolverMismatchError("basic_ae: structure type must be basic");
    const Pattern p = pattern_of(req.formula);
    const bool degenerate = p.word == "a" || p.word == "e" || p.word.empty();
    if (p.word != "ae" && !degenerate)
        throw SolverMismatchError("basic_ae: pattern " + p.word + " is not ae");

    const Structure& s = req.structure;
    const char* name = "basic_ae";
    if (s.universe_size() < 2) return brute_fallback(req, name);

    const BasicMatrix m = analyze(req.formula);
    const Modulator none = Modulator::empty_for(s.vocabulary());

    // one-variable matrices fold entirely: x~x is false and x=x is true, so
    // every surviving clause is a tautology
    if (degenerate) return m.unsat ? no(name) : yes(name, none);

    if (m.unsat) return no(name);
    if (m.shape(ClauseShape::tautology)) return yes(name, none);

    // y can copy x: x=y or ~(x~y) as a disjunct is immediately true
    if (m.shape(ClauseShape::eq_pos) || m.shape(ClauseShape::edge_neg))
        return yes(name, none);
    // y can differ from x (two vertices exist)
    if (m.shape(ClauseShape::eq_neg)) return yes(name, none);

    const bool wants_neighbor = m.shape(ClauseShape::edge_pos);
    const bool wants_nonneighbor = m.shape(ClauseShape::neq_and_nonedge);
    if (wants_neighbor && wants_nonneighbor) return yes(name, none);

    if (wants_neighbor) {
        // no isolated vertex
        const std::vector<int> iso = isolated_vertices(s);
        if (req.kind == OperationKind::del)
            return iso.empty() ? yes(name, none) : no(name);
        if (iso.size() <= 2 * req.budget) return yes(name, pair_up(s, iso));
        return no(name);
    }
    if (wants_nonneighbor) {
        // no universal vertex
        const std::vector<int> uni = universal_vertices(s);
        if (req.kind == OperationKind::add)
            return uni.empty() ? yes(name, none) : no(name);
        if (uni.size() <= 2 * req.budget) {
            Modulator w = Modulator::empty_for(s.vocabulary());
            for (std::size_t i = 0; i + 1 < uni.size(); i += 2) add_pair(w, uni[i], uni[i + 1]);
            if (uni.size() % 2 == 1) {
                const int lone = uni.back();
                for (int u = 0; u < s.universe_size(); ++u)
                    if (u != lone && s.adjacent(lone, u)) {
                        add_pair(w, lone, u);
                        break;
                    }
            }
            return yes(name, w);
        }
        return no(name);
    }
    return no(name);
}

SolveResult solve_basic_aa(const SolveRequest& req) {
    validate_request(req);
    if (req.structure_type != StructureType::basic)
        throw SolverMismatchError("basic_aa: structure type must be basic");
    const Pattern p = pattern_of(req.formula);
    if (p.word != "aa") throw SolverMismatchError("basic_aa: pattern " + p.word + " is not aa");

    const Structure& s = req.structure;
    const char* name = "basic_aa";
    if (s.universe_size() < 2) return brute_fallback(req, name);

    const BasicMatrix m = analyze(req.formula);
    const Modulator none = Modulator::empty_for(s.vocabulary());

    if (m.unsat) return no(name);
    if (m.shape(ClauseShape::tautology)) return yes(name, none);

    // the diagonal x = y is quantified over too; only ~(x~y) and x=y hold there
    const bool diagonal_ok = m.shape(ClauseShape::edge_neg) || m.shape(ClauseShape::eq_pos);
    if (!diagonal_ok) return no(name);

    if (m.shape(ClauseShape::eq_neg)) return yes(name, none);  // distinct pairs free
    const bool accepts_edges = m.shape(ClauseShape::edge_pos);
    const bool accepts_nonedges =
        m.shape(ClauseShape::edge_neg) || m.shape(ClauseShape::neq_and_nonedge);
    if (accepts_edges && accepts_nonedges) return yes(name, none);

    const int n = s.universe_size();
    if (accepts_edges) {
        // target: clique
        Modulator w = Modulator::empty_for(s.vocabulary());
        std::size_t missing = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!s.adjacent(u, v)) {
                    ++missing;
                    add_pair(w, u, v);
                }
        if (req.kind == OperationKind::del)
            return missing == 0 ? yes(name, none) : no(name);
        return missing <= req.budget ? yes(name, w) : no(name);
    }
    if (accepts_nonedges) {
        // target: edgeless
        Modulator w = Modulator::empty_for(s.vocabulary());
        std::size_t edges = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (s.adjacent(u, v)) {
                    ++edges;
                    add_pair(w, u, v);
                }
        if (req.kind == OperationKind::add)
            return edges == 0 ? yes(name, none) : no(name);
        return edges <= req.budget ? yes(name, w) : no(name);
    }
    // only x = y is available off the diagonal: false on two distinct vertices
    return no(name);
}

}  // namespace relmod
