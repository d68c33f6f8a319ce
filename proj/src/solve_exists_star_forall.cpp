#include "solver_internal.hpp"

namespace relmod {

namespace {
using namespace detail;
}

// Certificate search per the single-universal fragment: fix the existential
// elements and a configuration over them, then repair each remaining
// element independently with a minimal local modulator; the local repairs
// touch disjoint tuples, so their costs add up.
SolveResult solve_exists_star_forall(const SolveRequest& req) {
    validate_request(req);
    const Pattern p = pattern_of(req.formula);
    if (!pattern_in_e_star_a(p))
        throw SolverMismatchError("exists_star_forall: pattern " + p.word + " is not in e*a");
    const bool has_universal = count_universals(p) == 1;

    PackedRels work(req.structure);
    CompiledFormula cf = compile_formula(req.formula, req.structure.vocabulary());
    if (cf.slot_vars.size() != cf.prefix_size())
        throw std::invalid_argument("solve: the formula must be a sentence");
    const int n = req.structure.universe_size();
    const std::size_t c = cf.prefix_size() - (has_universal ? 1 : 0);
    const std::size_t y_slot = c;  // the universal variable, when present
    Budget budget(req.limits);

    SolveResult result;
    result.solver_used = "exists_star_forall";

    std::vector<int> env(cf.prefix_size(), 0);
    std::vector<int> cert(c, 0);

    const bool found = for_each_assignment(n, c, cert, [&] {
        for (std::size_t i = 0; i < c; ++i) env[i] = cert[i];
        const std::vector<int> elems = unique_sorted(cert);
        std::vector<WorkSlot> cert_slots =
            relevant_slots_over(work, req.structure_type, cf, elems);
        if (cert_slots.size() > kMaxConfigSlots)
            throw ResourceLimitError("exists_star_forall: configuration space too large");
        std::uint64_t legal = 0;
        for (std::size_t i = 0; i < cert_slots.size(); ++i)
            if (toggle_legal(cert_slots[i].present, req.kind)) legal |= 1ULL << i;

        std::uint64_t applied = 0;
        auto switch_to = [&](std::uint64_t mask) {
            for (std::uint64_t diff = applied ^ mask; diff; diff &= diff - 1)
                toggle_slot(work, cert_slots[__builtin_ctzll(diff)]);
            applied = mask;
        };

        bool ok = false;
        const std::uint64_t end = 1ULL << cert_slots.size();
        for (std::uint64_t mask = 0; mask < end && !ok; ++mask) {
            if (mask & ~legal) continue;
            const std::size_t base_cost =
                static_cast<std::size_t>(__builtin_popcountll(mask));
            if (base_cost > req.budget) continue;
            budget.tick("exists_star_forall");
            switch_to(mask);

            // the certificate elements themselves must already satisfy the
            // matrix; local repairs cannot reach tuples inside the certificate
            bool config_ok = true;
            if (has_universal) {
                for (int u : elems) {
                    env[y_slot] = u;
                    if (!cf.matrix.eval(work, env)) {
                        config_ok = false;
                        break;
                    }
                }
            } else {
                config_ok = cf.matrix.eval(work, env);
            }
            if (!config_ok) continue;

            std::size_t total = base_cost;
            std::vector<WorkSlot> witness_slots;
            for (std::size_t i = 0; i < cert_slots.size(); ++i)
                if (mask & (1ULL << i)) witness_slots.push_back(cert_slots[i]);

            bool feasible = true;
            if (has_universal) {
                for (int v = 0; v < n && feasible; ++v) {
                    if (std::binary_search(elems.begin(), elems.end(), v)) continue;
                    env[y_slot] = v;
                    std::vector<WorkSlot> local =
                        instantiated_slots(work, req.structure_type, cf, env);
                    // only tuples touching v are local; the rest is certificate
                    std::erase_if(local, [&](const WorkSlot& s) {
                        return std::find(s.canonical.begin(), s.canonical.end(), v) ==
                               s.canonical.end();
                    });
                    std::uint64_t llegal = 0;
                    for (std::size_t i = 0; i < local.size(); ++i)
                        if (toggle_legal(local[i].present, req.kind)) llegal |= 1ULL << i;

                    std::size_t best = std::size_t(-1);
                    std::uint64_t best_mask = 0;
                    const std::uint64_t lend = 1ULL << local.size();
                    for (std::uint64_t lmask = 0; lmask < lend; ++lmask) {
                        if (lmask & ~llegal) continue;
                        const auto cost =
                            static_cast<std::size_t>(__builtin_popcountll(lmask));
                        if (cost >= best || total + cost > req.budget) continue;
                        for (std::uint64_t d = lmask; d; d &= d - 1)
                            toggle_slot(work, local[__builtin_ctzll(d)]);
                        const bool sat = cf.matrix.eval(work, env);
                        for (std::uint64_t d = lmask; d; d &= d - 1)
                            toggle_slot(work, local[__builtin_ctzll(d)]);
                        if (sat) {
                            best = cost;
                            best_mask = lmask;
                            if (best == 0) break;
                        }
                    }
                    if (best == std::size_t(-1)) {
                        feasible = false;
                        break;
                    }
                    total += best;
                    for (std::size_t i = 0; i < local.size(); ++i)
                        if (best_mask & (1ULL << i)) witness_slots.push_back(local[i]);
                }
            }
            if (feasible && total <= req.budget) {
                result.witness = witness_from_slots(req.structure.vocabulary(),
                                                    req.structure_type, witness_slots);
                ok = true;
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
