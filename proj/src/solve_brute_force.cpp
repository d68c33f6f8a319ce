#include "solver_internal.hpp"

namespace relmod {

namespace {

using namespace detail;

struct BruteState {
    const SolveRequest& req;
    PackedRels work;
    CompiledFormula cf;
    std::vector<int> env;
    std::vector<Slot> slots;
    std::vector<const Slot*> chosen;
    Budget budget;

    explicit BruteState(const SolveRequest& r)
        : req(r),
          work(r.structure),
          cf(compile_formula(r.formula, r.structure.vocabulary())),
          env(cf.slot_vars.size(), -1),
          slots(kind_slots(r.structure, r.kind, r.structure_type)),
          budget(r.limits) {
        if (cf.slot_vars.size() != cf.prefix_size())
            throw std::invalid_argument("solve: the formula must be a sentence");
    }

    bool test() {
        budget.tick("brute force");
        return eval_compiled(cf, work, req.structure.universe_size(), env);
    }

    void toggle(const Slot& s) {
        for (const Tuple& t : s.tuples) work.toggle(s.sym, pack_tuple(t));
    }

    // all size-`remaining` extensions with slot indices >= from, lexicographic
    bool search(std::size_t from, std::size_t remaining) {
        if (remaining == 0) return test();
        for (std::size_t i = from; i + remaining <= slots.size(); ++i) {
            toggle(slots[i]);
            chosen.push_back(&slots[i]);
            if (search(i + 1, remaining - 1)) return true;
            chosen.pop_back();
            toggle(slots[i]);
        }
        return false;
    }
};

}  // namespace

SolveResult solve_brute_force(const SolveRequest& req) {
    validate_request(req);
    BruteState st(req);
    SolveResult result;
    result.solver_used = "brute_force";
    for (std::size_t size = 0; size <= req.budget; ++size) {
        if (st.search(0, size)) {
            result.decision = true;
            result.witness = modulator_from_slots(req.structure, st.chosen);
            result.nodes_explored = st.budget.nodes;
            return result;
        }
        if (size >= st.slots.size()) break;
    }
    result.nodes_explored = st.budget.nodes;
    return result;
}

}  // namespace relmod
