#include "relmod/catalog.hpp"
#include "solver_internal.hpp"

namespace relmod {

SolveResult solve_radius(const Structure& s, int r, std::size_t k, OperationKind kind,
                         SolveLimits limits) {
    if (r < 1) throw std::invalid_argument("solve_radius: r must be >= 1");
    if (!check_structure_type(s, StructureType::basic))
        throw SolverMismatchError("solve_radius: the graph must be basic");

    if (r >= 2) {
        // not a tractable fragment; fall back to the oracle on the radius formula
        SolveRequest req{s, StructureType::basic, radius_formula(r), k, kind, limits};
        SolveResult result = solve_brute_force(req);
        result.solver_used = "brute_force(radius fallback)";
        return result;
    }

    SolveResult result;
    result.solver_used = "radius1";
    const int n = s.universe_size();

    if (kind == OperationKind::del) {
        // deletions never shrink the radius; decide the graph as it stands
        for (int c = 0; c < n; ++c) {
            bool center = true;
            for (int x = 0; x < n && center; ++x)
                if (x != c && !s.adjacent(c, x)) center = false;
            ++result.nodes_explored;
            if (center) {
                result.decision = true;
                result.witness = Modulator::empty_for(s.vocabulary());
                return result;
            }
        }
        return result;
    }

    // add/edit: the cheapest center is the one missing the fewest neighbors
    std::size_t best = std::size_t(-1);
    int best_center = -1;
    for (int c = 0; c < n; ++c) {
        std::size_t missing = 0;
        for (int x = 0; x < n; ++x)
            if (x != c && !s.adjacent(c, x)) ++missing;
        ++result.nodes_explored;
        if (missing < best) {
            best = missing;
            best_center = c;
        }
    }
    if (best <= k) {
        Modulator w = Modulator::empty_for(s.vocabulary());
        for (int x = 0; x < n; ++x)
            if (x != best_center && !s.adjacent(best_center, x)) {
                w.sets[0].insert({best_center, x});
                w.sets[0].insert({x, best_center});
            }
        result.decision = true;
        result.witness = std::move(w);
    }
    return result;
}

}  // namespace relmod
