#include "eval.hpp"

#include <algorithm>

namespace relmod::detail {

namespace {

int slot_of(std::vector<std::string>& slot_vars, const std::string& var, bool may_add) {
    for (std::size_t i = 0; i < slot_vars.size(); ++i)
        if (slot_vars[i] == var) return static_cast<int>(i);
    if (!may_add) throw std::invalid_argument("unbound variable " + var);
    slot_vars.push_back(var);
    return static_cast<int>(slot_vars.size() - 1);
}

int compile_node(const MatrixPtr& m, const Vocabulary& voc, CompiledFormula& cf) {
    using Op = CompiledMatrix::Op;
    CompiledMatrix& cm = cf.matrix;
    if (!m) throw std::invalid_argument("compile: null matrix");
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom: {
            auto sym = voc.index_of(m->rel);
            if (!sym)
                throw std::invalid_argument("formula symbol " + m->rel +
                                            " is not in the structure's vocabulary");
            if (voc.symbol(*sym).arity != static_cast<int>(m->args.size()))
                throw std::invalid_argument("arity mismatch for symbol " + m->rel);
            std::vector<int> slots;
            slots.reserve(m->args.size());
            for (const std::string& v : m->args) slots.push_back(slot_of(cf.slot_vars, v, true));
            cm.atom_slots.push_back(std::move(slots));
            cm.atom_sym.push_back(static_cast<int>(*sym));
            cm.nodes.push_back({Op::rel, static_cast<int>(cm.atom_slots.size() - 1), -1});
            return static_cast<int>(cm.nodes.size() - 1);
        }
        case MatrixNode::Kind::eq_atom: {
            int a = slot_of(cf.slot_vars, m->args[0], true);
            int b = slot_of(cf.slot_vars, m->args[1], true);
            cm.nodes.push_back({Op::eq, a, b});
            return static_cast<int>(cm.nodes.size() - 1);
        }
        case MatrixNode::Kind::neg: {
            int child = compile_node(m->lhs, voc, cf);
            cm.nodes.push_back({Op::neg, child, -1});
            return static_cast<int>(cm.nodes.size() - 1);
        }
        case MatrixNode::Kind::conj:
        case MatrixNode::Kind::disj: {
            int a = compile_node(m->lhs, voc, cf);
            int b = compile_node(m->rhs, voc, cf);
            cm.nodes.push_back(
                {m->kind == MatrixNode::Kind::conj ? Op::conj : Op::disj, a, b});
            return static_cast<int>(cm.nodes.size() - 1);
        }
    }
    throw std::logic_error("compile: unknown node kind");
}

}  // namespace

CompiledFormula compile_formula(const Formula& f, const Vocabulary& voc) {
    CompiledFormula cf;
    for (const Quantifier& q : f.prefix) {
        cf.universal.push_back(q.universal);
        slot_of(cf.slot_vars, q.var, true);
    }
    cf.matrix.root = compile_node(f.matrix, voc, cf);
    return cf;
}

bool eval_compiled(const CompiledFormula& cf, const PackedRels& rels, int n,
                   std::vector<int>& env, std::size_t depth) {
    if (depth == cf.prefix_size()) return cf.matrix.eval(rels, env);
    if (cf.universal[depth]) {
        for (int v = 0; v < n; ++v) {
            env[depth] = v;
            if (!eval_compiled(cf, rels, n, env, depth + 1)) return false;
        }
        return true;
    }
    for (int v = 0; v < n; ++v) {
        env[depth] = v;
        if (eval_compiled(cf, rels, n, env, depth + 1)) return true;
    }
    return false;
}

}  // namespace relmod::detail
