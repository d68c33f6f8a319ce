#pragma once

// Shared internals of the solvers: relevant-slot computation, budget
// bookkeeping, and witness assembly.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "eval.hpp"
#include "relmod/classifier.hpp"
#include "relmod/solvers.hpp"
#include "slots.hpp"

namespace relmod::detail {

struct Budget {
    std::uint64_t nodes = 0;
    std::uint64_t node_budget;
    std::uint64_t time_budget_ms;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Budget(const SolveLimits& limits)
        : node_budget(limits.effective_node_budget()), time_budget_ms(limits.time_budget_ms) {}

    void tick(const char* what) {
        if (++nodes > node_budget)
            throw ResourceLimitError(std::string("node budget exceeded in ") + what);
        if (time_budget_ms && (nodes & 0x1fff) == 0) {
            auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
            if (static_cast<std::uint64_t>(elapsed) > time_budget_ms)
                throw ResourceLimitError(std::string("time budget exceeded in ") + what);
        }
    }
};

// A toggleable unit used by the fragment solvers: one tuple, or the two
// orientations of an unordered pair. Cost is always 1.
struct WorkSlot {
    std::size_t sym = 0;
    std::vector<std::uint64_t> keys;  // packed tuples to toggle together
    Tuple canonical;                  // representative tuple (pair: min order)
    bool present = false;

    bool operator<(const WorkSlot& o) const {
        if (sym != o.sym) return sym < o.sym;
        return canonical < o.canonical;
    }
    bool operator==(const WorkSlot& o) const {
        return sym == o.sym && canonical == o.canonical;
    }
};

inline void toggle_slot(PackedRels& rels, const WorkSlot& s) {
    for (std::uint64_t k : s.keys) rels.toggle(s.sym, k);
}

// Builds the slot for a concrete tuple; returns false for tuples that can
// never be toggled (loops on basic graphs).
bool make_work_slot(const PackedRels& rels, StructureType t, std::size_t sym, const Tuple& tup,
                    WorkSlot& out);

// The tuples that can influence the matrix when every variable ranges over
// `elems`: all instantiations of the matrix atoms, deduplicated, in
// canonical order. Every other tuple over `elems` is invisible to the
// formula and never worth toggling.
std::vector<WorkSlot> relevant_slots_over(const PackedRels& rels, StructureType t,
                                          const CompiledFormula& cf,
                                          const std::vector<int>& elems);

// Slots of the atom instantiations under a fixed full environment.
std::vector<WorkSlot> instantiated_slots(const PackedRels& rels, StructureType t,
                                         const CompiledFormula& cf,
                                         const std::vector<int>& env);

Modulator witness_from_slots(const Vocabulary& voc, StructureType t,
                             const std::vector<WorkSlot>& slots);

// Lexicographic enumeration of assignments in A^width through a callback;
// stops early when the callback returns true.
template <typename F>
bool for_each_assignment(int n, std::size_t width, std::vector<int>& out, const F& f,
                         std::size_t depth = 0) {
    if (depth == width) return f();
    for (int v = 0; v < n; ++v) {
        out[depth] = v;
        if (for_each_assignment(n, width, out, f, depth + 1)) return true;
    }
    return false;
}

std::vector<int> unique_sorted(const std::vector<int>& v);

inline std::size_t count_universals(const Pattern& p) {
    return static_cast<std::size_t>(std::count(p.word.begin(), p.word.end(), 'a'));
}

constexpr std::size_t kMaxConfigSlots = 24;

}  // namespace relmod::detail
