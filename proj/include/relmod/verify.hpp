#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relmod/reductions.hpp"

namespace relmod {

struct KindReport {
    OperationKind kind = OperationKind::edit;
    bool source_yes = false;
    bool target_yes = false;
    bool equivalent = false;
    bool inconclusive = false;  // oracle hit a resource limit
    std::optional<Modulator> witness;
    std::string note;
};

struct VerifyReport {
    std::string reduction;
    std::string source_desc;
    bool flagged = false;
    std::vector<KindReport> kinds;

    // Flagged reductions only fail on inconclusive entries; everything else
    // must be equivalent.
    bool ok() const;
};

// Decides source and target independently by brute force and compares.
VerifyReport verify_reduction(const std::string& name, const SourceInstance& inst,
                              const std::vector<OperationKind>& kinds,
                              bool directed = false, int radius = 2,
                              SolveLimits limits = {});

// Same, but with the reduction already built.
VerifyReport verify_reduction_output(const ReductionOutput& out, const SourceInstance& inst,
                                     const std::vector<OperationKind>& kinds,
                                     SolveLimits limits = {});

struct HarnessLimits {
    std::size_t max_sets = 3;
    std::size_t max_universe = 2;
    std::size_t max_k = 1;
    std::size_t max_vertices = 4;
    std::size_t max_bits = 6;
};

struct HarnessResult {
    std::string reduction;
    std::size_t instances = 0;
    std::size_t equivalent = 0;
    std::size_t inequivalent = 0;
    std::size_t inconclusive = 0;
    bool flagged = false;
    std::vector<VerifyReport> failures;  // inequivalent or inconclusive reports

    bool ok() const { return flagged ? inconclusive == 0 : (inequivalent == 0 && inconclusive == 0); }
};

// Exhaustively enumerates all source instances within the limits and
// verifies each one; deterministic instance order.
HarnessResult run_verify_harness(const std::string& name, const HarnessLimits& limits,
                                 bool directed = false, int radius = 2,
                                 SolveLimits solve_limits = {},
                                 const std::function<void(const VerifyReport&)>& on_report = {});

}  // namespace relmod
