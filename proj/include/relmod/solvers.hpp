#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "relmod/formula.hpp"
#include "relmod/model_check.hpp"
#include "relmod/modulator.hpp"
#include "relmod/structure.hpp"

namespace relmod {

struct SolveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a solver exceeds its node or time budget.
struct ResourceLimitError : SolveError {
    using SolveError::SolveError;
};

// Thrown when an instance is handed to a solver outside its fragment.
struct SolverMismatchError : SolveError {
    using SolveError::SolveError;
};

struct SolveLimits {
    std::uint64_t node_budget = 0;  // 0 = default (env RELMOD_NODE_BUDGET or 50M)
    std::uint64_t time_budget_ms = 0;  // 0 = unlimited

    std::uint64_t effective_node_budget() const;
};

struct SolveRequest {
    Structure structure;
    StructureType structure_type = StructureType::arb;
    Formula formula;
    std::size_t budget = 0;
    OperationKind kind = OperationKind::edit;
    SolveLimits limits;
};

// Throws unless the structure has the declared type and the formula's
// vocabulary is part of the structure's.
void validate_request(const SolveRequest& req);

struct SolveResult {
    bool decision = false;
    std::optional<Modulator> witness;  // present, legal, and modeling iff decision
    std::string solver_used;
    std::uint64_t nodes_explored = 0;
};

// The oracle: tries every legal modulator of norm <= k in canonical
// enumeration order and reports the first that yields a model.
SolveResult solve_brute_force(const SolveRequest& req);

// Pattern e*: for every assignment to the existential block, every legal
// relation configuration on its elements that satisfies the matrix is
// scored by its distance from the input.
SolveResult solve_exists_star(const SolveRequest& req);

// Pattern e*a: certificate configurations plus independently minimized
// local repairs for each element outside the certificate.
SolveResult solve_exists_star_forall(const SolveRequest& req);

// Pattern e*a*: bounded search tree; each level repairs the
// lexicographically first violated universal assignment by branching over
// single edits of matrix-atom tuples.
SolveResult solve_fpt_search_tree(const SolveRequest& req);

// Basic graphs, pattern ae (a and e degenerate via constant folding):
// full case analysis over the simplified DNF, counting isolated or
// universal vertices where needed.
SolveResult solve_basic_ae(const SolveRequest& req);

// Basic graphs, pattern aa: after simplification the only budget-dependent
// targets are "clique" and "edgeless".
SolveResult solve_basic_aa(const SolveRequest& req);

// Monadic structures: enumerates lexicographically minimal type modulators
// derived from the type histogram.
SolveResult solve_monadic(const SolveRequest& req);

// Radius-r modification on basic graphs. r = 1 counts non-neighbors per
// center; r >= 2 falls back to brute force over the radius formula.
SolveResult solve_radius(const Structure& s, int r, std::size_t k, OperationKind kind,
                         SolveLimits limits = {});

// Routes to the best applicable specialized solver, else brute force.
SolveResult dispatch_solve(const SolveRequest& req);

// Name of the solver dispatch_solve would pick.
std::string dispatch_solver_name(const SolveRequest& req);

// "auto", "brute", or a solver name; used by the CLI override flag.
SolveResult solve_with(const std::string& solver, const SolveRequest& req);

}  // namespace relmod
