#pragma once

#include <string>
#include <vector>

#include "relmod/formula.hpp"
#include "relmod/modulator.hpp"
#include "relmod/structure.hpp"

namespace relmod {

enum class Setting { classical, parameterized };

enum class Bucket {
    // classical
    AC0,
    TC0_not_AC0,
    NPhard_containing,
    // parameterized
    ParaAC0,
    ParaAC0up,
    W2hard_containing,
};

const char* setting_name(Setting s);
const char* bucket_name(Bucket b);

struct VerdictRule {
    std::string pattern;  // the pattern condition that fired, e.g. "ae <= p"
    std::string ref;      // the argument behind it, named by what it does
};

struct ComplexityVerdict {
    Setting setting;
    Bucket bucket;
    std::vector<VerdictRule> rules;
};

// Closed forms for the pattern families, cross-checked against
// is_subsequence by enumeration in the tests.
bool pattern_in_e_star(const Pattern& p);         // p <= e*
bool pattern_in_e_star_a(const Pattern& p);       // p <= e*a
bool pattern_in_e_star_a_star(const Pattern& p);  // p <= e*a*
bool pattern_in_a_star(const Pattern& p);         // p <= a*

// The complexity landscape of (structure type, operation, pattern) triples.
// Verdicts describe the problem class of the whole fragment and are
// independent of the operation.
ComplexityVerdict classify_classical(StructureType t, OperationKind op, const Pattern& p);
ComplexityVerdict classify_parameterized(StructureType t, OperationKind op, const Pattern& p);

}  // namespace relmod
