#include "relmod/structure.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace relmod {

const char* structure_type_name(StructureType t) {
    switch (t) {
        case StructureType::arb: return "arb";
        case StructureType::dir: return "dir";
        case StructureType::undir: return "undir";
        case StructureType::basic: return "basic";
        case StructureType::mon: return "mon";
    }
    return "?";
}

StructureType structure_type_from_name(const std::string& name) {
    if (name == "arb") return StructureType::arb;
    if (name == "dir") return StructureType::dir;
    if (name == "undir") return StructureType::undir;
    if (name == "basic") return StructureType::basic;
    if (name == "mon" || name == "monadic") return StructureType::mon;
    throw std::invalid_argument("unknown structure type: " + name);
}

Structure::Structure(Vocabulary voc, int universe_size, std::vector<std::set<Tuple>> relations)
    : voc_(std::move(voc)), n_(universe_size), rels_(std::move(relations)) {
    if (n_ < 1) throw std::invalid_argument("structure: universe must be nonempty");
    if (rels_.size() != voc_.size())
        throw std::invalid_argument("structure: one tuple set per symbol required");
    for (std::size_t i = 0; i < rels_.size(); ++i) {
        const int arity = voc_.symbol(i).arity;
        for (const Tuple& t : rels_[i]) {
            if (static_cast<int>(t.size()) != arity)
                throw std::invalid_argument("structure: tuple arity mismatch for " +
                                            voc_.symbol(i).name);
            for (int c : t)
                if (c < 0 || c >= n_)
                    throw std::invalid_argument("structure: tuple component out of range");
        }
    }
}

bool Structure::adjacent(int u, int v) const {
    static thread_local Tuple t(2);
    t[0] = u;
    t[1] = v;
    return rels_.at(0).count(t) > 0;
}

std::size_t Structure::total_tuples() const {
    std::size_t total = 0;
    for (const auto& r : rels_) total += r.size();
    return total;
}

bool check_structure_type(const Structure& s, StructureType t) {
    switch (t) {
        case StructureType::arb:
            return true;
        case StructureType::mon:
            return s.vocabulary().all_unary();
        case StructureType::dir:
            return s.vocabulary().single_binary();
        case StructureType::undir: {
            if (!s.vocabulary().single_binary()) return false;
            for (const Tuple& e : s.relation(0))
                if (!s.has(0, {e[1], e[0]})) return false;
            return true;
        }
        case StructureType::basic: {
            if (!check_structure_type(s, StructureType::undir)) return false;
            for (const Tuple& e : s.relation(0))
                if (e[0] == e[1]) return false;
            return true;
        }
    }
    return false;
}

namespace {

void fnv(std::uint64_t& h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
}

void fnv_int(std::uint64_t& h, std::int64_t v) { fnv(h, &v, sizeof(v)); }

}  // namespace

std::uint64_t structure_hash(const Structure& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    fnv_int(h, s.universe_size());
    for (std::size_t i = 0; i < s.vocabulary().size(); ++i) {
        const Symbol& sym = s.vocabulary().symbol(i);
        fnv(h, sym.name.data(), sym.name.size());
        fnv_int(h, sym.arity);
        for (const Tuple& t : s.relation(i)) {
            for (int c : t) fnv_int(h, c);
            fnv_int(h, -1);
        }
    }
    return h;
}

std::string structure_hash_hex(const Structure& s) {
    std::ostringstream os;
    os << std::hex << structure_hash(s);
    return os.str();
}

Structure make_graph(int n, const std::vector<std::pair<int, int>>& undirected_edges,
                     const std::vector<int>& loops) {
    std::set<Tuple> rel;
    for (auto [u, v] : undirected_edges) {
        rel.insert({u, v});
        rel.insert({v, u});
    }
    for (int v : loops) rel.insert({v, v});
    return Structure(Vocabulary::graph(), n, {std::move(rel)});
}

Structure make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::set<Tuple> rel;
    for (auto [u, v] : arcs) rel.insert({u, v});
    return Structure(Vocabulary::graph(), n, {std::move(rel)});
}

Structure permute_structure(const Structure& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.universe_size())
        throw std::invalid_argument("permute: wrong permutation size");
    std::vector<std::set<Tuple>> rels(s.vocabulary().size());
    for (std::size_t i = 0; i < s.vocabulary().size(); ++i) {
        for (const Tuple& t : s.relation(i)) {
            Tuple q(t.size());
            for (std::size_t j = 0; j < t.size(); ++j) q[j] = perm.at(t[j]);
            rels[i].insert(std::move(q));
        }
    }
    return Structure(s.vocabulary(), s.universe_size(), std::move(rels));
}

}  // namespace relmod
