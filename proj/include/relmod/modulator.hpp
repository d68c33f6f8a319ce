#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "relmod/formula.hpp"
#include "relmod/structure.hpp"

namespace relmod {

enum class OperationKind { del, add, edit };

const char* operation_kind_name(OperationKind k);
OperationKind operation_kind_from_name(const std::string& name);

// Per-symbol tuple sets, applied to a structure by symmetric difference.
struct Modulator {
    std::vector<std::set<Tuple>> sets;  // indexed like the vocabulary

    static Modulator empty_for(const Vocabulary& voc);

    bool is_empty() const;
    std::size_t total_tuples() const;
    bool operator==(const Modulator& o) const { return sets == o.sets; }
};

// Each relation becomes R_i symmetric-difference S_i; the universe is
// unchanged. Throws on arity or range violations.
Structure apply(const Structure& s, const Modulator& m);

// Modification cost: distinct unordered pairs for undirected and basic
// graphs (a self-loop (v,v) is the pair {v}, counted once), total tuple
// count otherwise.
std::size_t norm(const Modulator& m, StructureType t);

// del may only remove present tuples, add may only introduce absent ones,
// edit is unrestricted; in every case the result must still have type t.
// For undirected/basic graphs the modulator itself must be a symmetric set.
bool validate(const Structure& s, const Modulator& m, OperationKind kind, StructureType t);

// R_i -> A^{a_i} \ R_i; for basic graphs the diagonal is excluded so the
// complement is again a basic graph.
Structure complement_structure(const Structure& s, StructureType t = StructureType::arb);

// Negates every relational atom; on basic graphs E(x,y) becomes
// ~(x = y) & ~E(x,y). Equalities are untouched.
Formula complement_formula(const Formula& f, StructureType t);

// Streams exactly the validate-passing modulators of norm <= k, each once,
// in canonical order: by norm, then lexicographically over the sorted slot
// list. For undirected/basic graphs slots are unordered pairs expanded to
// symmetric tuple pairs. Requires check_structure_type(s, t).
class ModulatorStream {
public:
    ModulatorStream(const Structure& s, std::size_t k, OperationKind kind, StructureType t);
    std::optional<Modulator> next();

private:
    const Structure* s_;
    std::size_t k_;
    std::size_t size_ = 0;
    bool done_ = false;
    bool fresh_ = true;
    std::vector<std::size_t> combo_;
    struct SlotData {
        std::size_t sym;
        std::vector<Tuple> tuples;
    };
    std::vector<SlotData> slots_;

    bool advance();
    Modulator current() const;
};

std::vector<Modulator> enumerate_modulators(const Structure& s, std::size_t k,
                                            OperationKind kind, StructureType t);

}  // namespace relmod
