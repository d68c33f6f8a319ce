#include "relmod/formula.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace relmod {

Pattern::Pattern(std::string w) : word(std::move(w)) {
    if (!valid(word)) throw std::invalid_argument("pattern: alphabet is {a, e}: " + word);
}

bool Pattern::valid(const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'a' || c == 'e'; });
}

MatrixPtr MatrixNode::atom(std::string rel, std::vector<std::string> args) {
    auto n = std::make_shared<MatrixNode>();
    n->kind = Kind::rel_atom;
    n->rel = std::move(rel);
    n->args = std::move(args);
    return n;
}

MatrixPtr MatrixNode::eq(std::string a, std::string b) {
    auto n = std::make_shared<MatrixNode>();
    n->kind = Kind::eq_atom;
    n->args = {std::move(a), std::move(b)};
    return n;
}

MatrixPtr MatrixNode::neg(MatrixPtr m) {
    auto n = std::make_shared<MatrixNode>();
    n->kind = Kind::neg;
    n->lhs = std::move(m);
    return n;
}

MatrixPtr MatrixNode::conj(MatrixPtr a, MatrixPtr b) {
    auto n = std::make_shared<MatrixNode>();
    n->kind = Kind::conj;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

MatrixPtr MatrixNode::disj(MatrixPtr a, MatrixPtr b) {
    auto n = std::make_shared<MatrixNode>();
    n->kind = Kind::disj;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

bool matrix_equal(const MatrixPtr& a, const MatrixPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case MatrixNode::Kind::rel_atom:
            return a->rel == b->rel && a->args == b->args;
        case MatrixNode::Kind::eq_atom:
            return a->args == b->args;
        case MatrixNode::Kind::neg:
            return matrix_equal(a->lhs, b->lhs);
        case MatrixNode::Kind::conj:
        case MatrixNode::Kind::disj:
            return matrix_equal(a->lhs, b->lhs) && matrix_equal(a->rhs, b->rhs);
    }
    return false;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.prefix.size() != b.prefix.size()) return false;
    for (std::size_t i = 0; i < a.prefix.size(); ++i)
        if (a.prefix[i].universal != b.prefix[i].universal || a.prefix[i].var != b.prefix[i].var)
            return false;
    return matrix_equal(a.matrix, b.matrix);
}

Pattern pattern_of(const Formula& f) {
    std::string w;
    w.reserve(f.prefix.size());
    for (const Quantifier& q : f.prefix) w.push_back(q.universal ? 'a' : 'e');
    return Pattern(std::move(w));
}

bool is_subsequence(const Pattern& p, const Pattern& q) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < p.word.size() && j < q.word.size(); ++j)
        if (p.word[i] == q.word[j]) ++i;
    return i == p.word.size();
}

namespace {

void collect_vars(const MatrixPtr& m, std::vector<std::string>& out) {
    if (!m) return;
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom:
        case MatrixNode::Kind::eq_atom:
            for (const std::string& v : m->args)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            return;
        case MatrixNode::Kind::neg:
            collect_vars(m->lhs, out);
            return;
        case MatrixNode::Kind::conj:
        case MatrixNode::Kind::disj:
            collect_vars(m->lhs, out);
            collect_vars(m->rhs, out);
            return;
    }
}

void collect_symbols(const MatrixPtr& m, std::vector<Symbol>& out) {
    if (!m) return;
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom: {
            for (const Symbol& s : out)
                if (s.name == m->rel) {
                    if (s.arity != static_cast<int>(m->args.size()))
                        throw std::invalid_argument("formula: symbol " + m->rel +
                                                    " used with two arities");
                    return;
                }
            out.push_back({m->rel, static_cast<int>(m->args.size())});
            return;
        }
        case MatrixNode::Kind::eq_atom:
            return;
        case MatrixNode::Kind::neg:
            collect_symbols(m->lhs, out);
            return;
        case MatrixNode::Kind::conj:
        case MatrixNode::Kind::disj:
            collect_symbols(m->lhs, out);
            collect_symbols(m->rhs, out);
            return;
    }
}

}  // namespace

std::vector<std::string> matrix_variables(const MatrixPtr& m) {
    std::vector<std::string> out;
    collect_vars(m, out);
    return out;
}

Vocabulary vocabulary_of(const Formula& f) {
    std::vector<Symbol> syms;
    collect_symbols(f.matrix, syms);
    return Vocabulary(std::move(syms));
}

std::string print_matrix(const MatrixPtr& m) {
    if (!m) throw std::invalid_argument("print: null matrix");
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom: {
            if (m->rel == "E" && m->args.size() == 2) return m->args[0] + " ~ " + m->args[1];
            std::string s = m->rel + "(";
            for (std::size_t i = 0; i < m->args.size(); ++i) {
                if (i) s += ", ";
                s += m->args[i];
            }
            return s + ")";
        }
        case MatrixNode::Kind::eq_atom:
            return m->args[0] + " = " + m->args[1];
        case MatrixNode::Kind::neg:
            return "~(" + print_matrix(m->lhs) + ")";
        case MatrixNode::Kind::conj:
            return "(" + print_matrix(m->lhs) + " & " + print_matrix(m->rhs) + ")";
        case MatrixNode::Kind::disj:
            return "(" + print_matrix(m->lhs) + " | " + print_matrix(m->rhs) + ")";
    }
    return "";
}

std::string print_formula(const Formula& f) {
    std::string s;
    for (const Quantifier& q : f.prefix) {
        s += q.universal ? "forall " : "exists ";
        s += q.var;
        s += " ";
    }
    s += print_matrix(f.matrix);
    return s;
}

}  // namespace relmod
