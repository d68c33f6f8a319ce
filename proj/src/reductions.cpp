#include "relmod/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "relmod/catalog.hpp"
#include "relmod/json_io.hpp"

namespace relmod {

void SetCoverInstance::check() const {
    std::set<std::string> s(sets.begin(), sets.end()), u(universe.begin(), universe.end());
    if (s.size() != sets.size() || u.size() != universe.size())
        throw std::invalid_argument("set cover: duplicate ids");
    for (const auto& [a, b] : edges)
        if (!s.count(a) || !u.count(b))
            throw std::invalid_argument("set cover: edge references undeclared id");
}

bool SetCoverInstance::incident(std::size_t set_idx, std::size_t elem_idx) const {
    for (const auto& [a, b] : edges)
        if (a == sets.at(set_idx) && b == universe.at(elem_idx)) return true;
    return false;
}

void VertexCoverInstance::check() const {
    if (!check_structure_type(graph, StructureType::basic))
        throw std::invalid_argument("vertex cover: the graph must be basic");
}

void MajorityInstance::check() const {
    if (bits.empty()) throw std::invalid_argument("majority: empty bitstring");
    if (bits.size() % 2 != 0)
        throw std::invalid_argument("majority: the bitstring length must be even");
    for (char c : bits)
        if (c != '0' && c != '1') throw std::invalid_argument("majority: bits are 0/1");
}

std::size_t MajorityInstance::zeros() const {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), '0'));
}

SolveRequest ReductionOutput::request(OperationKind kind) const {
    SolveRequest req;
    req.structure = structure;
    req.structure_type = structure_type;
    req.formula = formula;
    req.budget = budget;
    req.kind = kind;
    return req;
}

const char* majority_variant_name(MajorityVariant v) {
    switch (v) {
        case MajorityVariant::undir_a_del: return "undir_a_del";
        case MajorityVariant::basic_ae_add: return "basic_ae_add";
        case MajorityVariant::basic_ea_add: return "basic_ea_add";
        case MajorityVariant::basic_aa: return "basic_aa";
        case MajorityVariant::monadic_del: return "monadic_del";
    }
    return "?";
}

namespace {

// Incremental graph construction with named vertices.
struct GraphBuilder {
    std::vector<std::string> labels;
    std::set<Tuple> rel;

    int vertex(const std::string& label) {
        labels.push_back(label);
        return static_cast<int>(labels.size()) - 1;
    }

    void edge(int u, int v) {
        rel.insert({u, v});
        rel.insert({v, u});
    }

    void arc(int u, int v) { rel.insert({u, v}); }
    void loop(int v) { rel.insert({v, v}); }

    Structure build() const {
        return Structure(Vocabulary::graph(), static_cast<int>(labels.size()), {rel});
    }
};

ReductionOutput finish(const std::string& name, GraphBuilder& g, StructureType t,
                       const Formula& f, std::size_t budget,
                       std::vector<OperationKind> kinds, bool directed,
                       const SourceInstance& src, const std::string& anchor) {
    ReductionOutput out;
    out.reduction = name;
    out.structure = g.build();
    out.structure_type = t;
    out.formula = f;
    out.budget = budget;
    out.kinds = std::move(kinds);
    out.directed = directed;
    out.source_digest = source_digest(src);
    out.anchor = anchor;
    out.labels = g.labels;
    if (!check_structure_type(out.structure, out.structure_type))
        throw std::logic_error("reduction " + name + " built a structure of the wrong type");
    return out;
}

std::string idx_label(const std::string& base, std::size_t i) {
    return base + std::to_string(i + 1);
}

}  // namespace

ReductionOutput reduce_setcover_ae_undir(const SetCoverInstance& inst, bool directed) {
    inst.check();
    GraphBuilder g;
    const std::size_t copies = 2 * inst.k + 1;
    std::vector<int> set_v;
    for (const auto& s : inst.sets) set_v.push_back(g.vertex(s));
    std::vector<std::vector<int>> elem_v(inst.universe.size());
    for (std::size_t u = 0; u < inst.universe.size(); ++u)
        for (std::size_t c = 0; c < copies; ++c)
            elem_v[u].push_back(g.vertex(idx_label(inst.universe[u] + "_", c)));
    for (std::size_t s = 0; s < inst.sets.size(); ++s)
        for (std::size_t u = 0; u < inst.universe.size(); ++u)
            if (inst.incident(s, u))
                for (int cv : elem_v[u])
                    directed ? g.arc(cv, set_v[s]) : g.edge(cv, set_v[s]);
    for (int sv : set_v) g.loop(sv);
    if (g.labels.empty()) g.loop(g.vertex("pad"));  // looped, hence content

    ReductionOutput out =
        finish("setcover_ae_undir", g, directed ? StructureType::dir : StructureType::undir,
               catalog_formula("loopfree-neighbor"), inst.k,
               {OperationKind::del, OperationKind::edit}, directed, inst,
               "set-cover gadget: loop deletions act as set choices");
    // covered sets lose their loop but have no outgoing arcs in the directed
    // orientation, so equivalence is only reported there, not asserted
    out.flagged = directed;
    return out;
}

ReductionOutput reduce_setcover_aea_basic(const SetCoverInstance& inst, bool directed) {
    inst.check();
    GraphBuilder g;
    const std::size_t copies = 2 * inst.k + 1;
    std::vector<int> s0, s1;
    for (const auto& s : inst.sets) {
        const int a = g.vertex(s);
        const int b = g.vertex(s + "'");
        const int c = g.vertex(s + "''");
        const int d = g.vertex(s + "'''");
        g.edge(a, b);
        g.edge(b, c);
        g.edge(c, d);
        g.edge(d, a);
        s0.push_back(a);
        s1.push_back(b);
    }
    std::vector<std::vector<int>> elem_v(inst.universe.size());
    for (std::size_t u = 0; u < inst.universe.size(); ++u)
        for (std::size_t c = 0; c < copies; ++c)
            elem_v[u].push_back(g.vertex(idx_label(inst.universe[u] + "_", c)));
    for (std::size_t s = 0; s < inst.sets.size(); ++s)
        for (std::size_t u = 0; u < inst.universe.size(); ++u)
            if (inst.incident(s, u))
                for (int cv : elem_v[u]) {
                    g.edge(cv, s0[s]);
                    g.edge(cv, s1[s]);
                }
    if (g.labels.empty()) {
        // a triangle-free cycle where everyone has a witness
        const int a = g.vertex("pad"), b = g.vertex("pad'");
        const int c = g.vertex("pad''"), d = g.vertex("pad'''");
        g.edge(a, b);
        g.edge(b, c);
        g.edge(c, d);
        g.edge(d, a);
    }

    return finish("setcover_aea_basic", g,
                  directed ? StructureType::dir : StructureType::basic,
                  catalog_formula(directed ? "untriangled-witness-dir" : "untriangled-witness"),
                  directed ? 2 * inst.k : inst.k, {OperationKind::del, OperationKind::edit},
                  directed, inst,
                  "set-cover gadget: breaking a 4-cycle edge frees a witness");
}

ReductionOutput reduce_setcover_aee_basic(const SetCoverInstance& inst, bool directed) {
    inst.check();
    GraphBuilder g;
    const std::size_t copies = 2 * inst.k + 1;
    std::vector<int> tip, tip2;
    for (const auto& s : inst.sets) {
        int t1[3], t2[3];
        for (int j = 0; j < 3; ++j) t1[j] = g.vertex(s + "_" + std::to_string(j + 1));
        for (int j = 0; j < 3; ++j) t2[j] = g.vertex(s + "'_" + std::to_string(j + 1));
        g.edge(t1[0], t1[1]);
        g.edge(t1[1], t1[2]);
        g.edge(t1[2], t1[0]);
        g.edge(t2[0], t2[1]);
        g.edge(t2[1], t2[2]);
        g.edge(t2[2], t2[0]);
        tip.push_back(t1[0]);
        tip2.push_back(t2[0]);
    }
    std::vector<std::vector<int>> elem_v(inst.universe.size());
    for (std::size_t u = 0; u < inst.universe.size(); ++u)
        for (std::size_t c = 0; c < copies; ++c)
            elem_v[u].push_back(g.vertex(idx_label(inst.universe[u] + "_", c)));
    for (std::size_t s = 0; s < inst.sets.size(); ++s)
        for (std::size_t u = 0; u < inst.universe.size(); ++u)
            if (inst.incident(s, u))
                for (int cv : elem_v[u]) {
                    g.edge(cv, tip[s]);
                    g.edge(cv, tip2[s]);
                }
    if (g.labels.empty()) {
        const int a = g.vertex("pad"), b = g.vertex("pad'"), c = g.vertex("pad''");
        g.edge(a, b);
        g.edge(b, c);
        g.edge(c, a);
    }

    return finish(
        "setcover_aee_basic", g, directed ? StructureType::dir : StructureType::basic,
        catalog_formula(directed ? "vertex-triangle-cover-dir" : "vertex-triangle-cover"),
        inst.k, {OperationKind::add, OperationKind::edit}, directed, inst,
        "set-cover gadget: one added tip edge closes the copies' triangles");
}

ReductionOutput reduce_setcover_aae_basic(const SetCoverInstance& inst, bool directed) {
    inst.check();
    // a set without elements would leave its s-s' edge in no triangle and
    // never helps a cover, so it is dropped up front
    SetCoverInstance pruned = inst;
    std::erase_if(pruned.sets, [&](const std::string& s) {
        for (const auto& [a, b] : inst.edges)
            if (a == s) return false;
        return true;
    });

    GraphBuilder g;
    const std::size_t copies = 2 * pruned.k + 1;
    std::vector<int> s0, s1;
    for (const auto& s : pruned.sets) {
        const int a = g.vertex(s);
        const int b = g.vertex(s + "'");
        g.edge(a, b);
        s0.push_back(a);
        s1.push_back(b);
    }
    const int hub = g.vertex("c");
    std::vector<std::vector<int>> elem_v(pruned.universe.size());
    for (std::size_t u = 0; u < pruned.universe.size(); ++u)
        for (std::size_t c = 0; c < copies; ++c) {
            const int cv = g.vertex(idx_label(pruned.universe[u] + "_", c));
            g.edge(cv, hub);
            elem_v[u].push_back(cv);
        }
    for (std::size_t s = 0; s < pruned.sets.size(); ++s)
        for (std::size_t u = 0; u < pruned.universe.size(); ++u)
            if (pruned.incident(s, u))
                for (int cv : elem_v[u]) {
                    g.edge(cv, s0[s]);
                    g.edge(cv, s1[s]);
                }

    return finish(
        "setcover_aae_basic", g, directed ? StructureType::dir : StructureType::basic,
        catalog_formula(directed ? "triangle-edge-cover-dir" : "triangle-edge-cover"),
        directed ? 2 * inst.k : inst.k, {OperationKind::add, OperationKind::edit}, directed,
        inst, "set-cover gadget: hub-to-set edges cover the copy-hub edges");
}

ReductionOutput reduce_setcover_eae_basic(const SetCoverInstance& inst, bool directed, int r) {
    inst.check();
    if (r < 2) throw std::invalid_argument("setcover_eae: r must be >= 2");
    GraphBuilder g;
    const std::size_t chains = 2 * inst.k + 1;
    const std::size_t copies = inst.k + 1;

    const int hub = g.vertex("c");
    std::vector<int> s0, s1;
    for (const auto& s : inst.sets) {
        const int a = g.vertex(s);
        const int b = g.vertex(s + "'");
        g.edge(a, b);
        g.edge(b, hub);
        s0.push_back(a);
        s1.push_back(b);
    }
    // pendant chains of r vertices keep every alternative center at
    // distance > r from some chain end
    for (std::size_t j = 0; j < chains; ++j) {
        int prev = hub;
        for (int step = 1; step <= r; ++step) {
            const int v = g.vertex("c" + std::to_string(j + 1) + "^" + std::to_string(step));
            g.edge(prev, v);
            prev = v;
        }
    }
    for (std::size_t u = 0; u < inst.universe.size(); ++u)
        for (std::size_t c = 0; c < copies; ++c) {
            const int cv = g.vertex(idx_label(inst.universe[u] + "_", c));
            for (std::size_t s = 0; s < inst.sets.size(); ++s)
                if (inst.incident(s, u)) {
                    // path of r-2 intermediate vertices toward the set vertex
                    int prev = cv;
                    for (int step = 1; step <= r - 2; ++step) {
                        const int mid = g.vertex(idx_label(inst.universe[u] + "_", c) + "^" +
                                                 std::to_string(step) + "->" + inst.sets[s]);
                        g.edge(prev, mid);
                        prev = mid;
                    }
                    g.edge(prev, s0[s]);
                }
        }

    return finish("setcover_eae_basic", g,
                  directed ? StructureType::dir : StructureType::basic, radius_formula(r),
                  inst.k, {OperationKind::add, OperationKind::edit}, directed, inst,
                  "set-cover gadget: adding set-to-center edges caps the radius");
}

ReductionOutput reduce_vertexcover_aa_undir(const VertexCoverInstance& inst) {
    inst.check();
    GraphBuilder g;
    for (int v = 0; v < inst.graph.universe_size(); ++v) g.vertex(idx_label("v", v));
    g.rel = inst.graph.relation(0);

    SourceInstance src = inst;
    return finish("vertexcover_aa_undir", g, StructureType::undir,
                  catalog_formula("loop-edge-cover"), inst.k,
                  {OperationKind::add, OperationKind::edit}, false, src,
                  "vertex-cover gadget: loops mark the chosen cover vertices");
}

ReductionOutput reduce_vertexcover_eaa_basic(const VertexCoverInstance& inst) {
    inst.check();
    GraphBuilder g;
    const int n = inst.graph.universe_size();
    for (int v = 0; v < n; ++v) g.vertex(idx_label("v", v));
    g.rel = inst.graph.relation(0);
    const int center = g.vertex("c");
    for (int v = 0; v < n; ++v) g.edge(center, v);
    // a clique of k+2 vertices, fully joined to the input but not to the
    // center, pins the center choice
    std::vector<int> clique;
    for (std::size_t j = 0; j < inst.k + 2; ++j) clique.push_back(g.vertex(idx_label("K", j)));
    for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b) g.edge(clique[a], clique[b]);
    for (int kv : clique)
        for (int v = 0; v < n; ++v) g.edge(kv, v);

    SourceInstance src = inst;
    return finish("vertexcover_eaa_basic", g, StructureType::basic,
                  catalog_formula("edge-avoiding-center"), inst.k,
                  {OperationKind::del, OperationKind::edit}, false, src,
                  "vertex-cover gadget: center detaches from the cover");
}

ReductionOutput reduce_majority(const MajorityInstance& inst, MajorityVariant variant,
                                OperationKind aa_kind) {
    inst.check();
    const std::size_t z = inst.zeros();
    const std::size_t k = inst.k();
    SourceInstance src = inst;
    GraphBuilder g;

    switch (variant) {
        case MajorityVariant::undir_a_del: {
            for (std::size_t i = 0; i < z; ++i) g.loop(g.vertex(idx_label("z", i)));
            if (z == 0) g.vertex("pad");  // universes are nonempty
            return finish("majority_undir_a_del", g, StructureType::undir,
                          catalog_formula("no-loops"), k,
                          {OperationKind::del, OperationKind::edit}, false, src,
                          "majority gadget: one loop per zero bit");
        }
        case MajorityVariant::basic_ae_add: {
            for (std::size_t i = 0; i < z; ++i) {
                g.vertex(idx_label("z", i) + "a");
                g.vertex(idx_label("z", i) + "b");
            }
            if (z == 0) g.edge(g.vertex("pad1"), g.vertex("pad2"));
            return finish("majority_basic_ae_add", g, StructureType::basic,
                          catalog_formula("no-isolated"), k,
                          {OperationKind::add, OperationKind::edit}, false, src,
                          "majority gadget: two isolated vertices per zero bit");
        }
        case MajorityVariant::basic_ea_add: {
            // built on undirected semantics; the target formula needs a
            // looped center there, which the construction never budgets for
            std::vector<int> bit_v;
            for (std::size_t i = 0; i < inst.bits.size(); ++i)
                bit_v.push_back(g.vertex(idx_label("b", i)));
            const int hub = g.vertex("c");
            for (std::size_t i = 0; i < inst.bits.size(); ++i)
                if (inst.bits[i] == '1') g.edge(hub, bit_v[i]);
            ReductionOutput out = finish("majority_basic_ea_add", g, StructureType::undir,
                                         catalog_formula("dominating-vertex"), k,
                                         {OperationKind::add}, false, src,
                                         "majority gadget: hub adjacent to the one bits");
            out.flagged = true;
            return out;
        }
        case MajorityVariant::basic_aa: {
            for (std::size_t i = 0; i < z; ++i)
                g.edge(g.vertex(idx_label("z", i) + "a"), g.vertex(idx_label("z", i) + "b"));
            if (z == 0) g.vertex("pad");
            ReductionOutput out = finish("majority_basic_aa", g, StructureType::basic,
                                         catalog_formula("edgeless"), k, {aa_kind}, false, src,
                                         "majority gadget: one edge per zero bit");
            out.flagged = true;
            return out;
        }
        case MajorityVariant::monadic_del: {
            std::set<Tuple> rel;
            for (std::size_t i = 0; i < z; ++i) rel.insert({static_cast<int>(i)});
            const int n = static_cast<int>(std::max<std::size_t>(z, 1));
            ReductionOutput out;
            out.reduction = "majority_monadic_del";
            out.structure = Structure(Vocabulary({{"R", 1}}), n, {rel});
            out.structure_type = StructureType::mon;
            out.formula = catalog_formula("r-empty");
            out.budget = k;
            out.kinds = {OperationKind::del, OperationKind::edit};
            out.source_digest = source_digest(src);
            out.anchor = "majority gadget: one marked element per zero bit";
            for (std::size_t i = 0; i < z; ++i) out.labels.push_back(idx_label("z", i));
            if (z == 0) out.labels.push_back("pad");
            return out;
        }
    }
    throw std::invalid_argument("unknown majority variant");
}

bool solve_source(const SourceInstance& inst) {
    if (const auto* sc = std::get_if<SetCoverInstance>(&inst)) {
        sc->check();
        const std::size_t ns = sc->sets.size();
        const std::size_t limit = std::size_t(1) << ns;
        for (std::size_t mask = 0; mask < limit; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) > sc->k) continue;
            bool covered = true;
            for (std::size_t u = 0; u < sc->universe.size() && covered; ++u) {
                bool hit = false;
                for (std::size_t s = 0; s < ns && !hit; ++s)
                    if ((mask >> s) & 1) hit = sc->incident(s, u);
                covered = hit;
            }
            if (covered) return true;
        }
        return false;
    }
    if (const auto* vc = std::get_if<VertexCoverInstance>(&inst)) {
        vc->check();
        const int n = vc->graph.universe_size();
        const std::size_t limit = std::size_t(1) << n;
        for (std::size_t mask = 0; mask < limit; ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) > vc->k) continue;
            bool covers = true;
            for (const Tuple& e : vc->graph.relation(0)) {
                if (e[0] > e[1]) continue;
                if (!((mask >> e[0]) & 1) && !((mask >> e[1]) & 1)) {
                    covers = false;
                    break;
                }
            }
            if (covers) return true;
        }
        return false;
    }
    const auto& m = std::get<MajorityInstance>(inst);
    m.check();
    const std::size_t ones = m.bits.size() - m.zeros();
    return 2 * ones >= m.bits.size();
}

const std::vector<ReductionSpec>& reduction_registry() {
    static const std::vector<ReductionSpec> registry = {
        {"setcover_ae_undir", ReductionSpec::SourceKind::setcover, {"ae_undir"}},
        {"setcover_aea_basic", ReductionSpec::SourceKind::setcover, {"aea_basic"}},
        {"setcover_aee_basic", ReductionSpec::SourceKind::setcover, {"aee_basic"}},
        {"setcover_aae_basic", ReductionSpec::SourceKind::setcover, {"aae_basic"}},
        {"setcover_eae_basic", ReductionSpec::SourceKind::setcover, {"eae_basic"}},
        {"vertexcover_aa_undir", ReductionSpec::SourceKind::vertexcover,
         {"vertexcover_aa", "aa_undir"}},
        {"vertexcover_eaa_basic", ReductionSpec::SourceKind::vertexcover,
         {"vertexcover_eaa", "eaa_basic"}},
        {"majority_undir_a_del", ReductionSpec::SourceKind::majority, {"undir_a_del"}},
        {"majority_basic_ae_add", ReductionSpec::SourceKind::majority, {"basic_ae_add"}},
        {"majority_basic_ea_add", ReductionSpec::SourceKind::majority, {"basic_ea_add"}},
        {"majority_basic_aa", ReductionSpec::SourceKind::majority, {"basic_aa_majority"}},
        {"majority_monadic_del", ReductionSpec::SourceKind::majority, {"monadic_del"}},
    };
    return registry;
}

std::optional<std::string> canonical_reduction_name(const std::string& name_or_alias) {
    for (const ReductionSpec& spec : reduction_registry()) {
        if (spec.name == name_or_alias) return spec.name;
        for (const std::string& alias : spec.aliases)
            if (alias == name_or_alias) return spec.name;
    }
    return std::nullopt;
}

ReductionOutput build_reduction(const std::string& name, const SourceInstance& inst,
                                bool directed, int radius) {
    const auto canonical = canonical_reduction_name(name);
    if (!canonical) throw std::invalid_argument("unknown reduction: " + name);
    const std::string& n = *canonical;
    if (n == "setcover_ae_undir")
        return reduce_setcover_ae_undir(std::get<SetCoverInstance>(inst), directed);
    if (n == "setcover_aea_basic")
        return reduce_setcover_aea_basic(std::get<SetCoverInstance>(inst), directed);
    if (n == "setcover_aee_basic")
        return reduce_setcover_aee_basic(std::get<SetCoverInstance>(inst), directed);
    if (n == "setcover_aae_basic")
        return reduce_setcover_aae_basic(std::get<SetCoverInstance>(inst), directed);
    if (n == "setcover_eae_basic")
        return reduce_setcover_eae_basic(std::get<SetCoverInstance>(inst), directed, radius);
    if (n == "vertexcover_aa_undir")
        return reduce_vertexcover_aa_undir(std::get<VertexCoverInstance>(inst));
    if (n == "vertexcover_eaa_basic")
        return reduce_vertexcover_eaa_basic(std::get<VertexCoverInstance>(inst));
    const auto& m = std::get<MajorityInstance>(inst);
    if (n == "majority_undir_a_del") return reduce_majority(m, MajorityVariant::undir_a_del);
    if (n == "majority_basic_ae_add") return reduce_majority(m, MajorityVariant::basic_ae_add);
    if (n == "majority_basic_ea_add") return reduce_majority(m, MajorityVariant::basic_ea_add);
    if (n == "majority_basic_aa") return reduce_majority(m, MajorityVariant::basic_aa);
    return reduce_majority(m, MajorityVariant::monadic_del);
}

}  // namespace relmod
