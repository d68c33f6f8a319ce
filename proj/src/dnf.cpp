#include "relmod/dnf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace relmod {

std::string Literal::key() const {
    std::string k = negated ? "~" : "+";
    k += is_eq ? "=" : rel;
    for (const std::string& a : args) {
        k += "|";
        k += a;
    }
    return k;
}

namespace {

Literal literal_of(const MatrixPtr& m, bool negated) {
    Literal l;
    l.negated = negated;
    if (m->kind == MatrixNode::Kind::eq_atom) {
        l.is_eq = true;
    } else {
        l.rel = m->rel;
    }
    l.args = m->args;
    return l;
}

// DNF of m (or of ~m when negated), distributing on the way up.
std::vector<Clause> dnf_rec(const MatrixPtr& m, bool negated) {
    if (!m) throw std::invalid_argument("to_dnf: null matrix");
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom:
        case MatrixNode::Kind::eq_atom:
            return {{literal_of(m, negated)}};
        case MatrixNode::Kind::neg:
            return dnf_rec(m->lhs, !negated);
        case MatrixNode::Kind::conj:
        case MatrixNode::Kind::disj: {
            const bool is_disj = (m->kind == MatrixNode::Kind::disj) != negated;
            std::vector<Clause> a = dnf_rec(m->lhs, negated);
            std::vector<Clause> b = dnf_rec(m->rhs, negated);
            if (is_disj) {
                a.insert(a.end(), b.begin(), b.end());
                return a;
            }
            std::vector<Clause> out;
            out.reserve(a.size() * b.size());
            for (const Clause& ca : a)
                for (const Clause& cb : b) {
                    Clause c = ca;
                    c.insert(c.end(), cb.begin(), cb.end());
                    out.push_back(std::move(c));
                }
            return out;
        }
    }
    throw std::logic_error("to_dnf: unknown node kind");
}

}  // namespace

std::vector<Clause> to_dnf(const MatrixPtr& m) {
    std::vector<Clause> raw = dnf_rec(m, false);
    std::vector<Clause> out;
    for (const Clause& c : raw) {
        std::set<std::string> seen;
        Clause cleaned;
        bool contradictory = false;
        for (const Literal& l : c) {
            Literal opposite = l;
            opposite.negated = !l.negated;
            if (seen.count(opposite.key())) {
                contradictory = true;  // cannot be satisfied
                break;
            }
            if (seen.insert(l.key()).second) cleaned.push_back(l);
        }
        if (!contradictory) out.push_back(std::move(cleaned));
    }
    return out;
}

}  // namespace relmod
