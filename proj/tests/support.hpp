#pragma once

// Deterministic random generators and independent oracles for the tests.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "relmod/catalog.hpp"
#include "relmod/formula.hpp"
#include "relmod/model_check.hpp"
#include "relmod/modulator.hpp"
#include "relmod/parser.hpp"
#include "relmod/structure.hpp"

namespace relmod::test {

struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    bool coin(double p = 0.5) { return std::uniform_real_distribution<>(0, 1)(gen) < p; }
};

inline Structure random_structure(Rng& rng, const Vocabulary& voc, int n, double density) {
    std::vector<std::set<Tuple>> rels(voc.size());
    for (std::size_t i = 0; i < voc.size(); ++i) {
        const int arity = voc.symbol(i).arity;
        Tuple t(arity, 0);
        while (true) {
            if (rng.coin(density)) rels[i].insert(t);
            int pos = arity - 1;
            while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
    }
    return Structure(voc, n, std::move(rels));
}

inline Structure random_graph(Rng& rng, StructureType t, int n, double density) {
    if (t == StructureType::dir) {
        std::set<Tuple> rel;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (rng.coin(density)) rel.insert({u, v});
        return Structure(Vocabulary::graph(), n, {std::move(rel)});
    }
    std::set<Tuple> rel;
    for (int u = 0; u < n; ++u) {
        if (t == StructureType::undir && rng.coin(density)) rel.insert({u, u});
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(density)) {
                rel.insert({u, v});
                rel.insert({v, u});
            }
    }
    return Structure(Vocabulary::graph(), n, {std::move(rel)});
}

// Random quantifier-free matrix over the given variables and vocabulary.
inline MatrixPtr random_matrix(Rng& rng, const Vocabulary& voc,
                               const std::vector<std::string>& vars, int depth) {
    if (depth == 0 || rng.coin(0.4)) {
        if (rng.coin(0.25) && vars.size() >= 1) {
            const auto& a = vars[rng.uniform(0, static_cast<int>(vars.size()) - 1)];
            const auto& b = vars[rng.uniform(0, static_cast<int>(vars.size()) - 1)];
            return MatrixNode::eq(a, b);
        }
        const std::size_t sym = rng.uniform(0, static_cast<int>(voc.size()) - 1);
        std::vector<std::string> args;
        for (int i = 0; i < voc.symbol(sym).arity; ++i)
            args.push_back(vars[rng.uniform(0, static_cast<int>(vars.size()) - 1)]);
        return MatrixNode::atom(voc.symbol(sym).name, std::move(args));
    }
    switch (rng.uniform(0, 2)) {
        case 0: return MatrixNode::neg(random_matrix(rng, voc, vars, depth - 1));
        case 1:
            return MatrixNode::conj(random_matrix(rng, voc, vars, depth - 1),
                                    random_matrix(rng, voc, vars, depth - 1));
        default:
            return MatrixNode::disj(random_matrix(rng, voc, vars, depth - 1),
                                    random_matrix(rng, voc, vars, depth - 1));
    }
}

inline Formula random_formula(Rng& rng, const Vocabulary& voc, const std::string& pattern,
                              int depth = 3) {
    Formula f;
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        vars.push_back("v" + std::to_string(i));
        f.prefix.push_back({pattern[i] == 'a', vars.back()});
    }
    f.matrix = random_matrix(rng, voc, vars, depth);
    return f;
}

inline std::vector<int> random_permutation(Rng& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng.gen);
    return perm;
}

// Breadth-first eccentricity oracle, independent of the formula machinery.
inline int bfs_radius(const Structure& g) {
    const int n = g.universe_size();
    const int inf = 1 << 20;
    int radius = inf;
    for (int c = 0; c < n; ++c) {
        std::vector<int> dist(n, inf);
        std::vector<int> queue = {c};
        dist[c] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v = 0; v < n; ++v)
                if (v != u && g.adjacent(u, v) && dist[v] == inf) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        int ecc = 0;
        for (int v = 0; v < n; ++v) ecc = std::max(ecc, dist[v]);
        radius = std::min(radius, ecc);
    }
    return radius;  // inf when disconnected
}

}  // namespace relmod::test
