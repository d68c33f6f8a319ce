#pragma once

// Internal evaluation engine: relations packed into 64-bit keys and a
// matrix compiled to an index arena, so solvers can toggle tuples and
// re-evaluate without rebuilding anything.

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "relmod/formula.hpp"
#include "relmod/structure.hpp"

namespace relmod::detail {

inline constexpr int kKeyBits = 10;  // supports universes up to 1024

inline std::uint64_t pack_tuple(const Tuple& t) {
    std::uint64_t k = 1;  // leading 1 keeps different arities distinct
    for (int c : t) k = (k << kKeyBits) | static_cast<std::uint64_t>(c);
    return k;
}

struct PackedRels {
    std::vector<std::unordered_set<std::uint64_t>> sets;

    explicit PackedRels(const Structure& s) {
        if (s.universe_size() >= (1 << kKeyBits))
            throw std::invalid_argument("universe too large for the evaluator");
        sets.resize(s.vocabulary().size());
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (const Tuple& t : s.relation(i)) sets[i].insert(pack_tuple(t));
    }

    bool has(std::size_t sym, std::uint64_t key) const { return sets[sym].count(key) > 0; }

    void toggle(std::size_t sym, std::uint64_t key) {
        auto [it, inserted] = sets[sym].insert(key);
        if (!inserted) sets[sym].erase(it);
    }
};

// Matrix with variable names resolved to environment slots and symbols to
// vocabulary indices.
struct CompiledMatrix {
    enum class Op : std::uint8_t { rel, eq, neg, conj, disj };

    struct Node {
        Op op;
        int a = -1;  // child / atom index / eq slot
        int b = -1;  // child / eq slot
    };

    std::vector<Node> nodes;
    std::vector<std::vector<int>> atom_slots;  // per rel atom: env slots
    std::vector<int> atom_sym;                 // per rel atom: symbol index
    int root = -1;

    bool eval(const PackedRels& rels, const std::vector<int>& env) const {
        return eval_node(root, rels, env);
    }

private:
    bool eval_node(int idx, const PackedRels& rels, const std::vector<int>& env) const {
        const Node& n = nodes[idx];
        switch (n.op) {
            case Op::rel: {
                std::uint64_t key = 1;
                for (int slot : atom_slots[n.a])
                    key = (key << kKeyBits) | static_cast<std::uint64_t>(env[slot]);
                return rels.has(static_cast<std::size_t>(atom_sym[n.a]), key);
            }
            case Op::eq:
                return env[n.a] == env[n.b];
            case Op::neg:
                return !eval_node(n.a, rels, env);
            case Op::conj:
                return eval_node(n.a, rels, env) && eval_node(n.b, rels, env);
            case Op::disj:
                return eval_node(n.a, rels, env) || eval_node(n.b, rels, env);
        }
        return false;
    }
};

struct CompiledFormula {
    std::vector<bool> universal;         // prefix, slot i binds prefix var i
    std::vector<std::string> slot_vars;  // prefix vars then free vars
    CompiledMatrix matrix;

    std::size_t prefix_size() const { return universal.size(); }
};

// Compiles against a concrete vocabulary; free variables (present in the
// matrix but not the prefix) get trailing slots. Throws on unknown symbols
// or arity mismatches.
CompiledFormula compile_formula(const Formula& f, const Vocabulary& voc);

// All-quantifier evaluation of a compiled formula; env must have one slot
// per prefix variable plus bound values for the free slots.
bool eval_compiled(const CompiledFormula& cf, const PackedRels& rels, int n,
                   std::vector<int>& env, std::size_t depth = 0);

}  // namespace relmod::detail
