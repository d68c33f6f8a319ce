#include <map>

#include "solver_internal.hpp"

namespace relmod {

namespace {

using namespace detail;

using TypeMask = unsigned;  // bit i set <=> element in relation i

struct Retype {
    TypeMask from, to;
    std::size_t cost;  // |from xor to|
};

struct MonadicState {
    const SolveRequest& req;
    PackedRels work;
    CompiledFormula cf;
    Budget budget;
    std::vector<TypeMask> type_of;                  // per element
    std::map<TypeMask, std::vector<int>> hist;      // type -> elements, ascending
    std::vector<Retype> moves;                      // kind-legal, (from, to) ascending
    std::vector<std::size_t> counts;                // chosen multiplicity per move

    explicit MonadicState(const SolveRequest& r)
        : req(r),
          work(r.structure),
          cf(compile_formula(r.formula, r.structure.vocabulary())),
          budget(r.limits) {
        if (cf.slot_vars.size() != cf.prefix_size())
            throw std::invalid_argument("solve: the formula must be a sentence");
        const Structure& s = r.structure;
        const std::size_t nsym = s.vocabulary().size();
        type_of.assign(s.universe_size(), 0);
        for (std::size_t i = 0; i < nsym; ++i)
            for (const Tuple& t : s.relation(i)) type_of[t[0]] |= 1u << i;
        for (int v = 0; v < s.universe_size(); ++v) hist[type_of[v]].push_back(v);

        const TypeMask top = static_cast<TypeMask>(1u << nsym);
        for (TypeMask from = 0; from < top; ++from) {
            if (!hist.count(from)) continue;  // no element can supply this type
            for (TypeMask to = 0; to < top; ++to) {
                if (from == to) continue;
                if (req.kind == OperationKind::del && (to & ~from)) continue;
                if (req.kind == OperationKind::add && (from & ~to)) continue;
                moves.push_back({from, to,
                                 static_cast<std::size_t>(__builtin_popcount(from ^ to))});
            }
        }
        counts.assign(moves.size(), 0);
    }

    // applies the lexicographically minimal representative of the chosen
    // retype multiset: per source type, ascending targets take the smallest
    // still-unused elements
    bool try_candidate(Modulator& witness_out) {
        budget.tick("monadic");
        std::map<TypeMask, std::size_t> used;  // per source type
        Modulator m = Modulator::empty_for(req.structure.vocabulary());
        for (std::size_t i = 0; i < moves.size(); ++i) {
            const auto& mv = moves[i];
            for (std::size_t c = 0; c < counts[i]; ++c) {
                const auto& pool = hist.at(mv.from);
                const int elem = pool[used[mv.from]++];
                for (std::size_t bit = 0; bit < req.structure.vocabulary().size(); ++bit)
                    if ((mv.from ^ mv.to) & (1u << bit)) m.sets[bit].insert({elem});
            }
        }
        Structure modified = apply(req.structure, m);
        PackedRels rels(modified);
        std::vector<int> env(cf.prefix_size(), 0);
        if (eval_compiled(cf, rels, modified.universe_size(), env)) {
            witness_out = std::move(m);
            return true;
        }
        return false;
    }

    // multiplicities per retype move, bounded by the budget and by the
    // histogram of the source type
    bool enumerate(std::size_t move_idx, std::size_t budget_left,
                   std::map<TypeMask, std::size_t>& demand, Modulator& witness_out) {
        if (move_idx == moves.size()) return try_candidate(witness_out);
        const auto& mv = moves[move_idx];
        const std::size_t supply = hist.at(mv.from).size();
        const std::size_t max_count =
            std::min(budget_left / mv.cost, supply - demand[mv.from]);
        for (std::size_t c = 0; c <= max_count; ++c) {
            counts[move_idx] = c;
            demand[mv.from] += c;
            if (enumerate(move_idx + 1, budget_left - c * mv.cost, demand, witness_out))
                return true;
            demand[mv.from] -= c;
        }
        counts[move_idx] = 0;
        return false;
    }
};

}  // namespace

SolveResult solve_monadic(const SolveRequest& req) {
    validate_request(req);
    if (req.structure_type != StructureType::mon)
        throw SolverMismatchError("monadic: structure type must be mon");

    MonadicState st(req);
    SolveResult result;
    result.solver_used = "monadic";
    Modulator witness = Modulator::empty_for(req.structure.vocabulary());
    std::map<TypeMask, std::size_t> demand;
    if (st.enumerate(0, req.budget, demand, witness)) {
        result.decision = true;
        result.witness = std::move(witness);
    }
    result.nodes_explored = st.budget.nodes;
    return result;
}

}  // namespace relmod
