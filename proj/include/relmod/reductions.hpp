#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relmod/solvers.hpp"

namespace relmod {

// Set cover in incidence form: shores S and U, edges S x U, budget k.
struct SetCoverInstance {
    std::vector<std::string> sets;
    std::vector<std::string> universe;
    std::vector<std::pair<std::string, std::string>> edges;  // (set, element)
    std::size_t k = 0;

    void check() const;  // ids in edges must be declared
    bool incident(std::size_t set_idx, std::size_t elem_idx) const;
};

struct VertexCoverInstance {
    Structure graph;  // basic
    std::size_t k = 0;

    void check() const;
};

struct MajorityInstance {
    std::string bits;

    void check() const;  // nonempty, even length, characters 0/1
    std::size_t zeros() const;
    std::size_t k() const { return bits.size() / 2; }
};

using SourceInstance = std::variant<SetCoverInstance, VertexCoverInstance, MajorityInstance>;

enum class MajorityVariant { undir_a_del, basic_ae_add, basic_ea_add, basic_aa, monadic_del };

struct ReductionOutput {
    std::string reduction;     // canonical reduction name
    Structure structure;
    StructureType structure_type = StructureType::basic;
    Formula formula;
    std::size_t budget = 0;
    std::vector<OperationKind> kinds;  // operations the construction is built for
    bool directed = false;
    bool flagged = false;      // report-only: equivalence is documented, not asserted
    std::string source_digest;
    std::string anchor;        // which gadget family produced this
    std::vector<std::string> labels;  // vertex names, aligned with element ids

    SolveRequest request(OperationKind kind) const;
};

// Every vertex without a self-loop needs a neighbor without one; sets carry
// self-loops, universe elements become 2k+1 copies attached to their sets.
ReductionOutput reduce_setcover_ae_undir(const SetCoverInstance& i, bool directed = false);

// Every vertex needs a neighbor with whom it shares no triangle; sets sit on
// 4-cycles, copies form triangles with s and s'.
ReductionOutput reduce_setcover_aea_basic(const SetCoverInstance& i, bool directed = false);

// Every vertex must lie in a triangle; two triangles per set, copies attach
// to both triangle tips.
ReductionOutput reduce_setcover_aee_basic(const SetCoverInstance& i, bool directed = false);

// Every edge must lie in a triangle; a hub adjacent to all copies, an s-s'
// edge per set.
ReductionOutput reduce_setcover_aae_basic(const SetCoverInstance& i, bool directed = false);

// Radius at most r around a forced center; pendant chains pin the center,
// copies sit at distance r once the covering set edge is added.
ReductionOutput reduce_setcover_eae_basic(const SetCoverInstance& i, bool directed = false,
                                          int r = 2);

// The input graph itself: every edge must gain a looped endpoint.
ReductionOutput reduce_vertexcover_aa_undir(const VertexCoverInstance& i);

// Input graph plus an attached center and a large clique; the center must
// lose an edge into every input edge.
ReductionOutput reduce_vertexcover_eaa_basic(const VertexCoverInstance& i);

ReductionOutput reduce_majority(const MajorityInstance& i, MajorityVariant variant,
                                OperationKind aa_kind = OperationKind::del);

const char* majority_variant_name(MajorityVariant v);

// Exact decision of the source problem by direct enumeration.
bool solve_source(const SourceInstance& inst);

// Registry used by the CLI: canonical names plus aliases.
struct ReductionSpec {
    std::string name;
    enum class SourceKind { setcover, vertexcover, majority } source;
    std::vector<std::string> aliases;
};
const std::vector<ReductionSpec>& reduction_registry();
std::optional<std::string> canonical_reduction_name(const std::string& name_or_alias);

ReductionOutput build_reduction(const std::string& name, const SourceInstance& inst,
                                bool directed = false, int radius = 2);

}  // namespace relmod
