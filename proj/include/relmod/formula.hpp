#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relmod/vocabulary.hpp"

namespace relmod {

// Quantifier prefix pattern: a word over {a, e}.
struct Pattern {
    std::string word;

    Pattern() = default;
    explicit Pattern(std::string w);

    static bool valid(const std::string& w);

    std::size_t size() const { return word.size(); }
    bool empty() const { return word.empty(); }
    bool operator==(const Pattern& o) const { return word == o.word; }
    bool operator!=(const Pattern& o) const { return word != o.word; }
};

struct MatrixNode;
using MatrixPtr = std::shared_ptr<const MatrixNode>;

// Quantifier-free matrix: relational atoms, equalities, and ~/&/| over them.
// Implication and biconditional are parser sugar and never appear here.
struct MatrixNode {
    enum class Kind { rel_atom, eq_atom, neg, conj, disj };

    Kind kind;
    std::string rel;                 // rel_atom
    std::vector<std::string> args;   // rel_atom arguments; eq_atom has two
    MatrixPtr lhs, rhs;              // neg uses lhs only

    static MatrixPtr atom(std::string rel, std::vector<std::string> args);
    static MatrixPtr eq(std::string a, std::string b);
    static MatrixPtr neg(MatrixPtr m);
    static MatrixPtr conj(MatrixPtr a, MatrixPtr b);
    static MatrixPtr disj(MatrixPtr a, MatrixPtr b);
};

struct Quantifier {
    bool universal = false;
    std::string var;
};

// A prenex sentence: quantifier prefix plus a quantifier-free matrix whose
// variables are all bound by the prefix.
struct Formula {
    std::vector<Quantifier> prefix;
    MatrixPtr matrix;
};

bool matrix_equal(const MatrixPtr& a, const MatrixPtr& b);
bool operator==(const Formula& a, const Formula& b);

Pattern pattern_of(const Formula& f);

// True iff p can be obtained from q by deleting characters.
bool is_subsequence(const Pattern& p, const Pattern& q);

// Variables of the matrix in first-occurrence order.
std::vector<std::string> matrix_variables(const MatrixPtr& m);

// Symbols used by the formula, in first-occurrence order.
Vocabulary vocabulary_of(const Formula& f);

// Concrete syntax; parse(print(f)) reproduces f exactly.
std::string print_matrix(const MatrixPtr& m);
std::string print_formula(const Formula& f);

}  // namespace relmod
