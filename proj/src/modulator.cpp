#include "relmod/modulator.hpp"

#include <algorithm>
#include <stdexcept>

#include "slots.hpp"

namespace relmod {

const char* operation_kind_name(OperationKind k) {
    switch (k) {
        case OperationKind::del: return "del";
        case OperationKind::add: return "add";
        case OperationKind::edit: return "edit";
    }
    return "?";
}

OperationKind operation_kind_from_name(const std::string& name) {
    if (name == "del" || name == "delete" || name == "deletion") return OperationKind::del;
    if (name == "add" || name == "addition") return OperationKind::add;
    if (name == "edit" || name == "editing") return OperationKind::edit;
    throw std::invalid_argument("unknown operation kind: " + name);
}

Modulator Modulator::empty_for(const Vocabulary& voc) {
    Modulator m;
    m.sets.resize(voc.size());
    return m;
}

bool Modulator::is_empty() const {
    for (const auto& s : sets)
        if (!s.empty()) return false;
    return true;
}

std::size_t Modulator::total_tuples() const {
    std::size_t total = 0;
    for (const auto& s : sets) total += s.size();
    return total;
}

namespace {

void check_shape(const Structure& s, const Modulator& m) {
    if (m.sets.size() != s.vocabulary().size())
        throw std::invalid_argument("modulator: one tuple set per symbol required");
    for (std::size_t i = 0; i < m.sets.size(); ++i) {
        const int arity = s.vocabulary().symbol(i).arity;
        for (const Tuple& t : m.sets[i]) {
            if (static_cast<int>(t.size()) != arity)
                throw std::invalid_argument("modulator: tuple arity mismatch for " +
                                            s.vocabulary().symbol(i).name);
            for (int c : t)
                if (c < 0 || c >= s.universe_size())
                    throw std::invalid_argument("modulator: tuple component out of range");
        }
    }
}

bool shape_ok(const Structure& s, const Modulator& m) {
    try {
        check_shape(s, m);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

Structure apply(const Structure& s, const Modulator& m) {
    check_shape(s, m);
    std::vector<std::set<Tuple>> rels = s.relations();
    for (std::size_t i = 0; i < m.sets.size(); ++i) {
        for (const Tuple& t : m.sets[i]) {
            auto [it, inserted] = rels[i].insert(t);
            if (!inserted) rels[i].erase(it);
        }
    }
    return Structure(s.vocabulary(), s.universe_size(), std::move(rels));
}

std::size_t norm(const Modulator& m, StructureType t) {
    if (t == StructureType::undir || t == StructureType::basic) {
        std::size_t pairs = 0;
        for (const auto& edge_set : m.sets) {
            std::set<std::pair<int, int>> seen;
            for (const Tuple& e : edge_set) {
                if (e.size() == 2)
                    seen.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
            }
            pairs += seen.size();
        }
        return pairs;
    }
    return m.total_tuples();
}

bool validate(const Structure& s, const Modulator& m, OperationKind kind, StructureType t) {
    if (!shape_ok(s, m)) return false;
    for (std::size_t i = 0; i < m.sets.size(); ++i) {
        for (const Tuple& tup : m.sets[i]) {
            const bool present = s.has(i, tup);
            if (kind == OperationKind::del && !present) return false;
            if (kind == OperationKind::add && present) return false;
        }
    }
    if (detail::pair_semantics(t)) {
        // symmetric sets only: both orientations present or neither
        for (const auto& edge_set : m.sets)
            for (const Tuple& e : edge_set)
                if (e.size() == 2 && !edge_set.count({e[1], e[0]})) return false;
    }
    return check_structure_type(apply(s, m), t);
}

Structure complement_structure(const Structure& s, StructureType t) {
    std::vector<std::set<Tuple>> rels(s.vocabulary().size());
    const int n = s.universe_size();
    for (std::size_t i = 0; i < s.vocabulary().size(); ++i) {
        const int arity = s.vocabulary().symbol(i).arity;
        Tuple t_cur(arity, 0);
        while (true) {
            const bool diagonal_pair = t == StructureType::basic && arity == 2 &&
                                       t_cur[0] == t_cur[1];
            if (!diagonal_pair && !s.has(i, t_cur)) rels[i].insert(t_cur);
            int pos = arity - 1;
            while (pos >= 0 && t_cur[pos] == n - 1) t_cur[pos--] = 0;
            if (pos < 0) break;
            ++t_cur[pos];
        }
    }
    return Structure(s.vocabulary(), n, std::move(rels));
}

namespace {

MatrixPtr complement_matrix(const MatrixPtr& m, StructureType t) {
    switch (m->kind) {
        case MatrixNode::Kind::rel_atom: {
            MatrixPtr atom = MatrixNode::atom(m->rel, m->args);
            if (t == StructureType::basic && m->args.size() == 2)
                return MatrixNode::conj(MatrixNode::neg(MatrixNode::eq(m->args[0], m->args[1])),
                                        MatrixNode::neg(atom));
            return MatrixNode::neg(atom);
        }
        case MatrixNode::Kind::eq_atom:
            return m;
        case MatrixNode::Kind::neg:
            return MatrixNode::neg(complement_matrix(m->lhs, t));
        case MatrixNode::Kind::conj:
            return MatrixNode::conj(complement_matrix(m->lhs, t), complement_matrix(m->rhs, t));
        case MatrixNode::Kind::disj:
            return MatrixNode::disj(complement_matrix(m->lhs, t), complement_matrix(m->rhs, t));
    }
    throw std::logic_error("complement_formula: unknown node kind");
}

}  // namespace

Formula complement_formula(const Formula& f, StructureType t) {
    Formula out;
    out.prefix = f.prefix;
    out.matrix = complement_matrix(f.matrix, t);
    return out;
}

namespace detail {

std::vector<Slot> all_slots(const Structure& s, StructureType t) {
    std::vector<Slot> slots;
    const int n = s.universe_size();
    if (pair_semantics(t)) {
        const bool loops_allowed = t == StructureType::undir;
        for (int u = 0; u < n; ++u) {
            if (loops_allowed) {
                Slot slot;
                slot.sym = 0;
                slot.tuples = {{u, u}};
                slot.present = s.has(0, {u, u});
                slots.push_back(std::move(slot));
            }
            for (int v = u + 1; v < n; ++v) {
                Slot slot;
                slot.sym = 0;
                slot.tuples = {{u, v}, {v, u}};
                slot.present = s.has(0, {u, v});
                slots.push_back(std::move(slot));
            }
        }
        return slots;
    }
    for (std::size_t i = 0; i < s.vocabulary().size(); ++i) {
        const int arity = s.vocabulary().symbol(i).arity;
        Tuple t_cur(arity, 0);
        while (true) {
            Slot slot;
            slot.sym = i;
            slot.tuples = {t_cur};
            slot.present = s.has(i, t_cur);
            slots.push_back(std::move(slot));
            int pos = arity - 1;
            while (pos >= 0 && t_cur[pos] == n - 1) t_cur[pos--] = 0;
            if (pos < 0) break;
            ++t_cur[pos];
        }
    }
    return slots;
}

std::vector<Slot> kind_slots(const Structure& s, OperationKind kind, StructureType t) {
    std::vector<Slot> slots = all_slots(s, t);
    if (kind == OperationKind::edit) return slots;
    std::vector<Slot> filtered;
    for (Slot& slot : slots)
        if (toggle_legal(slot.present, kind)) filtered.push_back(std::move(slot));
    return filtered;
}

Modulator modulator_from_slots(const Structure& s, const std::vector<const Slot*>& chosen) {
    Modulator m = Modulator::empty_for(s.vocabulary());
    for (const Slot* slot : chosen)
        for (const Tuple& t : slot->tuples) m.sets[slot->sym].insert(t);
    return m;
}

}  // namespace detail

ModulatorStream::ModulatorStream(const Structure& s, std::size_t k, OperationKind kind,
                                 StructureType t)
    : s_(&s), k_(k) {
    if (!check_structure_type(s, t))
        throw std::invalid_argument("enumerate_modulators: structure does not have the type");
    for (detail::Slot& slot : detail::kind_slots(s, kind, t))
        slots_.push_back({slot.sym, std::move(slot.tuples)});
}

bool ModulatorStream::advance() {
    // next combination of `size_` slot indices in lexicographic order,
    // bumping the size when the current one is exhausted
    if (fresh_) {
        fresh_ = false;
        size_ = 0;
        combo_.clear();
        return true;  // the empty modulator
    }
    while (true) {
        int pos = static_cast<int>(combo_.size()) - 1;
        while (pos >= 0) {
            const std::size_t limit = slots_.size() - (combo_.size() - 1 - pos);
            if (combo_[pos] + 1 < limit) break;
            --pos;
        }
        if (pos >= 0) {
            ++combo_[pos];
            for (std::size_t i = pos + 1; i < combo_.size(); ++i)
                combo_[i] = combo_[i - 1] + 1;
            return true;
        }
        ++size_;
        if (size_ > k_ || size_ > slots_.size()) return false;
        combo_.resize(size_);
        for (std::size_t i = 0; i < size_; ++i) combo_[i] = i;
        return true;
    }
}

Modulator ModulatorStream::current() const {
    Modulator m = Modulator::empty_for(s_->vocabulary());
    for (std::size_t idx : combo_)
        for (const Tuple& t : slots_[idx].tuples) m.sets[slots_[idx].sym].insert(t);
    return m;
}

std::optional<Modulator> ModulatorStream::next() {
    if (done_) return std::nullopt;
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return current();
}

std::vector<Modulator> enumerate_modulators(const Structure& s, std::size_t k,
                                            OperationKind kind, StructureType t) {
    ModulatorStream stream(s, k, kind, t);
    std::vector<Modulator> out;
    while (auto m = stream.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace relmod
