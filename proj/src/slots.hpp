#pragma once

// Internal slot machinery shared by the modulator enumerator and the
// solvers. A slot is one unit of modification cost: a single tuple for
// arbitrary/directed/monadic structures, an unordered pair (expanded to
// both orientations) for undirected and basic graphs.

#include <cstdint>
#include <vector>

#include "relmod/modulator.hpp"
#include "relmod/structure.hpp"

namespace relmod::detail {

struct Slot {
    std::size_t sym = 0;
    std::vector<Tuple> tuples;  // 1 tuple, or the 2 orientations of a pair
    bool present = false;       // in the structure the slots were built from
};

inline bool pair_semantics(StructureType t) {
    return t == StructureType::undir || t == StructureType::basic;
}

// All slots of the structure in canonical order (symbol, then tuple/pair
// lexicographic), regardless of operation kind.
std::vector<Slot> all_slots(const Structure& s, StructureType t);

// Slots toggleable under the given kind: present ones for del, absent ones
// for add, all for edit.
std::vector<Slot> kind_slots(const Structure& s, OperationKind kind, StructureType t);

inline bool toggle_legal(bool present, OperationKind kind) {
    switch (kind) {
        case OperationKind::del: return present;
        case OperationKind::add: return !present;
        case OperationKind::edit: return true;
    }
    return false;
}

Modulator modulator_from_slots(const Structure& s, const std::vector<const Slot*>& chosen);

}  // namespace relmod::detail
