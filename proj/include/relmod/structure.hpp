#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "relmod/vocabulary.hpp"

namespace relmod {

using Tuple = std::vector<int>;

enum class StructureType { arb, dir, undir, basic, mon };

const char* structure_type_name(StructureType t);
StructureType structure_type_from_name(const std::string& name);

// A finite relational structure over the universe {0, ..., n-1}.
// Immutable after construction; every mutation goes through apply().
class Structure {
public:
    Structure() = default;
    Structure(Vocabulary voc, int universe_size,
              std::vector<std::set<Tuple>> relations);

    const Vocabulary& vocabulary() const { return voc_; }
    int universe_size() const { return n_; }
    const std::set<Tuple>& relation(std::size_t sym) const { return rels_.at(sym); }
    const std::vector<std::set<Tuple>>& relations() const { return rels_; }

    bool has(std::size_t sym, const Tuple& t) const { return rels_.at(sym).count(t) > 0; }

    // Graph accessors, valid when the vocabulary is a single binary symbol.
    bool adjacent(int u, int v) const;
    std::size_t edge_count() const { return rels_.at(0).size(); }

    std::size_t total_tuples() const;

    bool operator==(const Structure& o) const {
        return n_ == o.n_ && voc_ == o.voc_ && rels_ == o.rels_;
    }
    bool operator!=(const Structure& o) const { return !(*this == o); }

private:
    Vocabulary voc_;
    int n_ = 1;
    std::vector<std::set<Tuple>> rels_;
};

bool check_structure_type(const Structure& s, StructureType t);

// FNV-1a over a canonical serialization; stable across runs.
std::uint64_t structure_hash(const Structure& s);
std::string structure_hash_hex(const Structure& s);

// Convenience constructors for graphs over the vocabulary {E^2}.
Structure make_graph(int n, const std::vector<std::pair<int, int>>& undirected_edges,
                     const std::vector<int>& loops = {});
Structure make_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

// Relabels the universe: element i becomes perm[i].
Structure permute_structure(const Structure& s, const std::vector<int>& perm);

}  // namespace relmod
