#include "relmod/catalog.hpp"

#include <stdexcept>

#include "relmod/parser.hpp"

namespace relmod {

namespace {

CatalogEntry make(const std::string& name, const std::string& text, const std::string& note) {
    CatalogEntry e;
    e.name = name;
    e.text = text;
    e.formula = parse_formula(text);
    e.pattern = pattern_of(e.formula).word;
    e.note = note;
    return e;
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make("basic", "forall x forall y (x ~ y -> (y ~ x & ~(x = y)))",
                           "edge relation is symmetric and loop-free"));
    entries.push_back(make("undirected", "forall x forall y (x ~ y -> y ~ x)",
                           "edge relation is symmetric"));
    entries.push_back(make(
        "degree-2", "forall x exists y1 exists y2 ((x ~ y1) & (x ~ y2) & ~(y1 = y2))",
        "every vertex has at least two neighbors"));
    entries.push_back(make("radius-1", "exists c forall x (x = c | x ~ c)",
                           "some vertex is adjacent to all others"));
    entries.push_back(make("radius-2",
                           "exists c forall x exists y1 (x = c | x ~ c | (x ~ y1 & y1 ~ c))",
                           "some vertex reaches all others in at most two steps"));
    // the x != z guard keeps the x = z instances vacuous; without it no
    // loop-free graph with an edge could be a model
    entries.push_back(make(
        "clusters", "forall x forall y forall z ((x ~ y & y ~ z & ~(x = z)) -> x ~ z)",
        "disjoint union of cliques"));
    entries.push_back(make("triangle-edge-cover",
                           "forall x forall x2 exists y (x ~ x2 -> (x ~ y & x2 ~ y))",
                           "every edge lies in a triangle"));
    entries.push_back(make("diam-2",
                           "forall x forall x2 exists y (~(x ~ x2) -> (x ~ y & x2 ~ y))",
                           "every non-adjacent pair has a common neighbor"));
    // targets of the set-cover gadgets
    entries.push_back(make("loopfree-neighbor",
                           "forall x exists y (~(x ~ x) -> (x ~ y & ~(y ~ y)))",
                           "every loop-free vertex has a loop-free neighbor"));
    entries.push_back(make("untriangled-witness",
                           "forall x exists y forall z (x ~ y & ~(x ~ z & y ~ z))",
                           "every vertex has a neighbor with whom it shares no triangle"));
    entries.push_back(make(
        "untriangled-witness-dir",
        "forall x exists y forall z ((x ~ y & ~(x ~ z & y ~ z)) & (x ~ z -> z ~ x))",
        "directed form; edits must stay symmetric"));
    entries.push_back(make("vertex-triangle-cover",
                           "forall x exists y exists y2 (x ~ y & x ~ y2 & y ~ y2)",
                           "every vertex lies in a triangle"));
    entries.push_back(make("vertex-triangle-cover-dir",
                           "forall x exists y exists y2 (x ~ y & x ~ y2 & (y ~ y2 | y2 ~ y))",
                           "directed form; triangle closures may take either orientation"));
    // the guard must range over the two universal variables and also forbid
    // loops: bound to the existential witness, single arcs pass at half
    // cost, and without the loop ban one hub loop covers every hub edge
    entries.push_back(make(
        "triangle-edge-cover-dir",
        "forall x forall x2 exists y "
        "((x ~ x2 -> (x ~ y & x2 ~ y)) & (x ~ x2 -> (x2 ~ x & ~(x = x2))))",
        "directed form; edits must stay symmetric and loop-free"));
    // targets of the vertex-cover gadgets
    entries.push_back(make("loop-edge-cover",
                           "forall x1 forall x2 (x1 ~ x2 -> (x1 ~ x1 | x2 ~ x2))",
                           "every edge has a looped endpoint"));
    entries.push_back(make(
        "edge-avoiding-center",
        "exists c forall x forall y ((x ~ y & ~(x = c) & ~(y = c)) -> (~(x ~ c) | ~(y ~ c)))",
        "some vertex avoids at least one endpoint of every edge"));
    // targets of the majority gadgets
    entries.push_back(make("no-loops", "forall x ~(x ~ x)", "the graph is loop-free"));
    entries.push_back(make("no-isolated", "forall x exists y (x ~ y)",
                           "every vertex has a neighbor"));
    entries.push_back(make("dominating-vertex", "exists x forall y (x ~ y)",
                           "some vertex is adjacent to everything, itself included"));
    entries.push_back(make("edgeless", "forall x forall y ~(x ~ y)", "no edges at all"));
    entries.push_back(make("r-empty", "forall x ~R(x)", "the unary relation R is empty"));
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& formula_catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

std::optional<CatalogEntry> catalog_lookup(const std::string& name) {
    for (const CatalogEntry& e : formula_catalog())
        if (e.name == name) return e;
    return std::nullopt;
}

Formula catalog_formula(const std::string& name) {
    auto e = catalog_lookup(name);
    if (!e) throw std::invalid_argument("unknown catalog formula: " + name);
    return e->formula;
}

Formula radius_formula(int r) {
    if (r < 1) throw std::invalid_argument("radius_formula: r must be >= 1");
    std::string text = "exists c forall x ";
    for (int i = 1; i < r; ++i) text += "exists y" + std::to_string(i) + " ";
    std::string body = "x = c | x ~ c";
    std::string chain;
    for (int len = 2; len <= r; ++len) {
        // walk x ~ y1 ~ ... ~ y_{len-1} ~ c
        chain = "x ~ y1";
        for (int i = 2; i < len; ++i)
            chain += " & y" + std::to_string(i - 1) + " ~ y" + std::to_string(i);
        chain += " & y" + std::to_string(len - 1) + " ~ c";
        body += " | (" + chain + ")";
    }
    return parse_formula(text + "(" + body + ")");
}

}  // namespace relmod
