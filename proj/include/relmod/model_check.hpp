#pragma once

#include <map>
#include <string>

#include "relmod/formula.hpp"
#include "relmod/structure.hpp"

namespace relmod {

using Assignment = std::map<std::string, int>;

// Tarskian evaluation: recurses over the prefix, quantifying each variable
// over 0..n-1; `partial` supplies values for free variables. Throws on a
// variable that is neither quantified nor assigned, and on vocabulary
// mismatches. Naive O(n^q) enumeration.
bool model_check(const Structure& s, const Formula& f, const Assignment& partial = {});

// Base case used as an oracle: a matrix with no quantifiers evaluated
// directly under a full assignment.
bool eval_matrix(const Structure& s, const MatrixPtr& m, const Assignment& assignment);

}  // namespace relmod
