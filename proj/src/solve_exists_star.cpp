#include "solver_internal.hpp"

namespace relmod {

namespace {
using namespace detail;
}

// For every assignment to the existential variables, only the atom
// instantiations over the assigned elements can influence the matrix, so
// the configuration search runs over exactly those slots; untouched tuples
// stay as in the input at distance zero.
SolveResult solve_exists_star(const SolveRequest& req) {
    validate_request(req);
    const Pattern p = pattern_of(req.formula);
    if (!pattern_in_e_star(p))
        throw SolverMismatchError("exists_star: pattern " + p.word + " is not in e*");

    PackedRels work(req.structure);
    CompiledFormula cf = compile_formula(req.formula, req.structure.vocabulary());
    if (cf.slot_vars.size() != cf.prefix_size())
        throw std::invalid_argument("solve: the formula must be a sentence");
    const int n = req.structure.universe_size();
    Budget budget(req.limits);
    std::vector<int> env(cf.prefix_size(), 0);

    SolveResult result;
    result.solver_used = "exists_star";

    const bool found = for_each_assignment(n, cf.prefix_size(), env, [&] {
        std::vector<WorkSlot> slots =
            relevant_slots_over(work, req.structure_type, cf, unique_sorted(env));
        if (slots.size() > kMaxConfigSlots)
            throw ResourceLimitError("exists_star: configuration space too large");
        std::uint64_t legal = 0;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (toggle_legal(slots[i].present, req.kind)) legal |= 1ULL << i;

        std::uint64_t applied = 0;
        auto switch_to = [&](std::uint64_t mask) {
            for (std::uint64_t diff = applied ^ mask; diff; diff &= diff - 1)
                toggle_slot(work, slots[__builtin_ctzll(diff)]);
            applied = mask;
        };
        bool ok = false;
        const std::uint64_t end = 1ULL << slots.size();
        for (std::uint64_t mask = 0; mask < end; ++mask) {
            if (mask & ~legal) continue;
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) > req.budget) continue;
            budget.tick("exists_star");
            switch_to(mask);
            if (cf.matrix.eval(work, env)) {
                std::vector<WorkSlot> toggled;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (mask & (1ULL << i)) toggled.push_back(slots[i]);
                result.witness = witness_from_slots(req.structure.vocabulary(),
                                                    req.structure_type, toggled);
                ok = true;
                break;
            }
        }
        switch_to(0);
        return ok;
    });

    result.decision = found;
    result.nodes_explored = budget.nodes;
    return result;
}

}  // namespace relmod
