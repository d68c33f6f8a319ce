#include "solver_internal.hpp"

namespace relmod {

namespace {

using namespace detail;

struct TreeState {
    const SolveRequest& req;
    PackedRels work;
    CompiledFormula cf;
    std::size_t c = 0;  // existential block size
    std::size_t d = 0;  // universal block size
    int n;
    Budget budget;
    std::vector<int> env;
    std::vector<WorkSlot> chosen;

    explicit TreeState(const SolveRequest& r)
        : req(r),
          work(r.structure),
          cf(compile_formula(r.formula, r.structure.vocabulary())),
          n(r.structure.universe_size()),
          budget(r.limits) {
        if (cf.slot_vars.size() != cf.prefix_size())
            throw std::invalid_argument("solve: the formula must be a sentence");
        for (bool uni : cf.universal) (uni ? d : c)++;
        env.assign(cf.prefix_size(), 0);
    }

    bool already_chosen(const WorkSlot& s) const {
        for (const WorkSlot& c : chosen)
            if (c == s) return true;
        return false;
    }

    // lexicographically first assignment of the universal block violating
    // the matrix; false when none exists
    bool find_violation(std::size_t depth) {
        if (depth == cf.prefix_size()) return !cf.matrix.eval(work, env);
        for (int v = 0; v < n; ++v) {
            env[depth] = v;
            if (find_violation(depth + 1)) return true;
        }
        return false;
    }

    bool grow(std::size_t cost) {
        budget.tick("search tree");
        if (!find_violation(c)) return true;  // env now holds the violation
        if (cost == req.budget) return false;
        // one edit must fall on a tuple the matrix can see at this violation
        // env holds the violation; the branch set is fixed before recursion
        std::vector<WorkSlot> branch = instantiated_slots(work, req.structure_type, cf, env);
        for (const WorkSlot& s : branch) {
            if (already_chosen(s)) continue;  // never revert an earlier edit
            if (!toggle_legal(work.has(s.sym, s.keys[0]), req.kind)) continue;
            toggle_slot(work, s);
            chosen.push_back(s);
            if (grow(cost + 1)) return true;
            chosen.pop_back();
            toggle_slot(work, s);
        }
        return false;
    }
};

}  // namespace

// Bounded search tree for the fragment with all existentials in front of
// all universals: enumerate certificates, then configurations on the
// certificate, then repair violated universal assignments one edit at a
// time, branching over the atoms of the matrix.
SolveResult solve_fpt_search_tree(const SolveRequest& req) {
    validate_request(req);
    const Pattern p = pattern_of(req.formula);
    if (!pattern_in_e_star_a_star(p))
        throw SolverMismatchError("fpt_search_tree: pattern " + p.word + " is not in e*a*");

    TreeState st(req);
    SolveResult result;
    result.solver_used = "fpt_search_tree";

    std::vector<int> cert(st.c, 0);
    const bool found = for_each_assignment(st.n, st.c, cert, [&] {
        for (std::size_t i = 0; i < st.c; ++i) st.env[i] = cert[i];
        std::vector<WorkSlot> cert_slots =
            relevant_slots_over(st.work, req.structure_type, st.cf, unique_sorted(cert));
        if (cert_slots.size() > kMaxConfigSlots)
            throw ResourceLimitError("fpt_search_tree: configuration space too large");
        std::uint64_t legal = 0;
        for (std::size_t i = 0; i < cert_slots.size(); ++i)
            if (toggle_legal(cert_slots[i].present, req.kind)) legal |= 1ULL << i;

        std::uint64_t applied = 0;
        auto switch_to = [&](std::uint64_t mask) {
            for (std::uint64_t diff = applied ^ mask; diff; diff &= diff - 1)
                toggle_slot(st.work, cert_slots[__builtin_ctzll(diff)]);
            applied = mask;
        };

        bool ok = false;
        const std::uint64_t end = 1ULL << cert_slots.size();
        for (std::uint64_t mask = 0; mask < end && !ok; ++mask) {
            if (mask & ~legal) continue;
            const auto cost = static_cast<std::size_t>(__builtin_popcountll(mask));
            if (cost > req.budget) continue;
            switch_to(mask);
            st.chosen.clear();
            for (std::size_t i = 0; i < cert_slots.size(); ++i)
                if (mask & (1ULL << i)) st.chosen.push_back(cert_slots[i]);
            if (st.grow(cost)) {
                result.witness = witness_from_slots(req.structure.vocabulary(),
                                                    req.structure_type, st.chosen);
                ok = true;
            }
        }
        switch_to(0);
        return ok;
    });

    result.decision = found;
    result.nodes_explored = st.budget.nodes;
    return result;
}

}  // namespace relmod
