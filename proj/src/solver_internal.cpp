#include "solver_internal.hpp"

#include <cstdlib>
#include <set>

namespace relmod {

std::uint64_t SolveLimits::effective_node_budget() const {
    if (node_budget) return node_budget;
    if (const char* env = std::getenv("RELMOD_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 50'000'000ULL;
}

void validate_request(const SolveRequest& req) {
    if (!check_structure_type(req.structure, req.structure_type))
        throw std::invalid_argument(std::string("structure does not have type ") +
                                    structure_type_name(req.structure_type));
    detail::compile_formula(req.formula, req.structure.vocabulary());
}

namespace detail {

bool make_work_slot(const PackedRels& rels, StructureType t, std::size_t sym, const Tuple& tup,
                    WorkSlot& out) {
    out.sym = sym;
    if (pair_semantics(t) && tup.size() == 2) {
        if (tup[0] == tup[1]) {
            if (t == StructureType::basic) return false;  // loops cannot exist
            out.canonical = tup;
            out.keys = {pack_tuple(tup)};
        } else {
            const Tuple a = {std::min(tup[0], tup[1]), std::max(tup[0], tup[1])};
            const Tuple b = {a[1], a[0]};
            out.canonical = a;
            out.keys = {pack_tuple(a), pack_tuple(b)};
        }
    } else {
        out.canonical = tup;
        out.keys = {pack_tuple(tup)};
    }
    out.present = rels.has(sym, out.keys[0]);
    return true;
}

namespace {

void add_slot(std::vector<WorkSlot>& slots, WorkSlot&& s) {
    for (const WorkSlot& existing : slots)
        if (existing == s) return;
    slots.push_back(std::move(s));
}

}  // namespace

std::vector<WorkSlot> relevant_slots_over(const PackedRels& rels, StructureType t,
                                          const CompiledFormula& cf,
                                          const std::vector<int>& elems) {
    std::vector<WorkSlot> slots;
    if (elems.empty()) return slots;
    const auto& atoms = cf.matrix.atom_slots;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        const std::size_t arity = atoms[a].size();
        // enumerate the atom's argument values over elems
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
            Tuple tup(arity);
            bool consistent = true;
            // equal variable slots must take equal values
            for (std::size_t i = 0; i < arity && consistent; ++i) {
                for (std::size_t j = 0; j < i; ++j)
                    if (atoms[a][i] == atoms[a][j] && idx[i] != idx[j]) {
                        consistent = false;
                        break;
                    }
                tup[i] = elems[idx[i]];
            }
            if (consistent) {
                WorkSlot s;
                if (make_work_slot(rels, t, static_cast<std::size_t>(cf.matrix.atom_sym[a]),
                                   tup, s))
                    add_slot(slots, std::move(s));
            }
            std::size_t pos = arity;
            while (pos > 0 && idx[pos - 1] + 1 == elems.size()) idx[--pos] = 0;
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

std::vector<WorkSlot> instantiated_slots(const PackedRels& rels, StructureType t,
                                         const CompiledFormula& cf,
                                         const std::vector<int>& env) {
    std::vector<WorkSlot> slots;
    const auto& atoms = cf.matrix.atom_slots;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
        Tuple tup(atoms[a].size());
        for (std::size_t i = 0; i < atoms[a].size(); ++i) tup[i] = env[atoms[a][i]];
        WorkSlot s;
        if (make_work_slot(rels, t, static_cast<std::size_t>(cf.matrix.atom_sym[a]), tup, s))
            add_slot(slots, std::move(s));
    }
    std::sort(slots.begin(), slots.end());
    return slots;
}

Modulator witness_from_slots(const Vocabulary& voc, StructureType t,
                             const std::vector<WorkSlot>& slots) {
    Modulator m = Modulator::empty_for(voc);
    for (const WorkSlot& s : slots) {
        m.sets[s.sym].insert(s.canonical);
        if (pair_semantics(t) && s.canonical.size() == 2 && s.canonical[0] != s.canonical[1])
            m.sets[s.sym].insert({s.canonical[1], s.canonical[0]});
    }
    return m;
}

std::vector<int> unique_sorted(const std::vector<int>& v) {
    std::set<int> s(v.begin(), v.end());
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace detail
}  // namespace relmod
