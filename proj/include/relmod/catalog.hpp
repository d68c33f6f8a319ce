#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relmod/formula.hpp"

namespace relmod {

struct CatalogEntry {
    std::string name;
    Formula formula;
    std::string pattern;   // quantifier prefix pattern, verbatim
    std::string text;      // concrete syntax, parseable
    std::string note;      // what the formula expresses
};

// Named formulas used across the solvers, reductions, and tests.
const std::vector<CatalogEntry>& formula_catalog();

std::optional<CatalogEntry> catalog_lookup(const std::string& name);
Formula catalog_formula(const std::string& name);  // throws on unknown name

// "radius <= r" as a prenex sentence with pattern e a e^{r-1}: some center
// reaches every vertex by a walk of length <= r. r = 2 coincides with the
// catalog entry "radius-2".
Formula radius_formula(int r);

}  // namespace relmod
