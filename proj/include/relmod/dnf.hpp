#pragma once

#include <string>
#include <vector>

#include "relmod/formula.hpp"

namespace relmod {

struct Literal {
    bool negated = false;
    bool is_eq = false;
    std::string rel;                // empty for equalities
    std::vector<std::string> args;

    std::string key() const;
    bool operator==(const Literal& o) const {
        return negated == o.negated && is_eq == o.is_eq && rel == o.rel && args == o.args;
    }
};

using Clause = std::vector<Literal>;

// Disjunctive normal form of a quantifier-free matrix. Clauses containing a
// literal and its negation are dropped, duplicate literals are removed.
// Worst case exponential; in-scope matrices have at most three variables.
std::vector<Clause> to_dnf(const MatrixPtr& m);

}  // namespace relmod
