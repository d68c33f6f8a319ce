#include <doctest.h>

#include <functional>

#include "relmod/catalog.hpp"
#include "relmod/dnf.hpp"
#include "relmod/model_check.hpp"
#include "relmod/parser.hpp"
#include "support.hpp"

using namespace relmod;

TEST_CASE("parser accepts the basic shapes") {
    Formula f = parse_formula("forall x ~E(x,x)");
    REQUIRE(f.prefix.size() == 1);
    CHECK(f.prefix[0].universal);
    CHECK(f.prefix[0].var == "x");
    CHECK(f.matrix->kind == MatrixNode::Kind::neg);
    CHECK(f.matrix->lhs->kind == MatrixNode::Kind::rel_atom);
    CHECK(f.matrix->lhs->rel == "E");

    Formula g = parse_formula("exists x E(x,x)");
    CHECK_FALSE(g.prefix[0].universal);
    CHECK(g.matrix->kind == MatrixNode::Kind::rel_atom);

    // graph sugar and '~' negation disambiguate by position
    Formula h = parse_formula("forall x forall y (x ~ y -> ~(y ~ x))");
    CHECK(pattern_of(h).word == "aa");
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(parse_formula("forall x (E(x,y))"), ParseError);  // unbound y
    CHECK_THROWS_AS(parse_formula("forall x forall x E(x,x)"), ParseError);  // shadowing
    CHECK_THROWS_AS(parse_formula("forall x (exists y E(x,y))"), ParseError);  // not prenex
    CHECK_THROWS_AS(parse_formula("forall x E(x,"), ParseError);
    CHECK_THROWS_AS(parse_formula("E(x is broken"), ParseError);
    try {
        parse_formula("forall x (E(x,y))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("y") != std::string::npos);
    }
}

TEST_CASE("print and parse round-trip") {
    const char* inputs[] = {
        "forall x ~E(x,x)",
        "exists x E(x,x)",
        "forall x exists y (~(x ~ x) -> (x ~ y & ~(y ~ y)))",
        "forall x forall y (x ~ y <-> y ~ x)",
        "exists c forall x exists y1 (x = c | x ~ c | (x ~ y1 & y1 ~ c))",
        "forall x (P(x) -> Q(x))",
    };
    for (const char* text : inputs) {
        Formula f = parse_formula(text);
        Formula g = parse_formula(print_formula(f));
        CHECK(f == g);
    }
    for (const CatalogEntry& e : formula_catalog()) {
        Formula g = parse_formula(print_formula(e.formula));
        CHECK(e.formula == g);
    }
}

TEST_CASE("pattern extraction") {
    CHECK(pattern_of(catalog_formula("basic")).word == "aa");
    CHECK(pattern_of(catalog_formula("degree-2")).word == "aee");
    Formula empty_prefix;
    empty_prefix.matrix = MatrixNode::eq("x", "x");
    CHECK(pattern_of(empty_prefix).word.empty());
    CHECK(pattern_of(parse_formula("forall x exists y forall z (x~y & ~(x~z & y~z))")).word ==
          "aea");
}

TEST_CASE("pattern subsequence relation") {
    CHECK(is_subsequence(Pattern("aaee"), Pattern("aeaeae")));
    CHECK(is_subsequence(Pattern(""), Pattern("aaa")));
    CHECK(is_subsequence(Pattern(""), Pattern("")));
    CHECK_FALSE(is_subsequence(Pattern("ea"), Pattern("ae")));
    CHECK_FALSE(is_subsequence(Pattern("aa"), Pattern("a")));
    CHECK_THROWS_AS(Pattern("xy"), std::invalid_argument);
}

TEST_CASE("model checking the running examples") {
    // a single vertex without edges satisfies the basic-graph axiom
    Structure one = make_graph(1, {});
    CHECK(model_check(one, catalog_formula("basic")));

    // every triangle vertex has two distinct neighbors
    Structure k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(model_check(k3, catalog_formula("degree-2")));

    // the path on three vertices is not a cluster graph
    Structure p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(model_check(p3, catalog_formula("clusters")));

    // partial assignments cover free variables
    Formula free_edge;
    free_edge.matrix = MatrixNode::atom("E", {"u", "v"});
    CHECK(model_check(p3, free_edge, {{"u", 0}, {"v", 1}}));
    CHECK_FALSE(model_check(p3, free_edge, {{"u", 0}, {"v", 2}}));
    CHECK_THROWS(model_check(p3, free_edge, {{"u", 0}}));
}

TEST_CASE("model checking is invariant under universe permutations") {
    test::Rng rng(7);
    const std::vector<std::string> names = {"basic", "clusters", "degree-2", "radius-2",
                                            "no-isolated"};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform(1, 5);
        Structure s = test::random_graph(rng, StructureType::undir, n, 0.4);
        const auto perm = test::random_permutation(rng, n);
        Structure t = permute_structure(s, perm);
        for (const auto& name : names)
            CHECK(model_check(s, catalog_formula(name)) ==
                  model_check(t, catalog_formula(name)));
    }
}

TEST_CASE("prefix-free matrices agree with direct boolean evaluation") {
    test::Rng rng(11);
    const Vocabulary voc = Vocabulary::graph();
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform(2, 4);
        Structure s = test::random_graph(rng, StructureType::dir, n, 0.5);
        MatrixPtr m = test::random_matrix(rng, voc, {"u", "v"}, 3);
        Assignment a{{"u", rng.uniform(0, n - 1)}, {"v", rng.uniform(0, n - 1)}};

        // direct recursive evaluation as the base-case oracle
        std::function<bool(const MatrixPtr&)> direct = [&](const MatrixPtr& node) -> bool {
            switch (node->kind) {
                case MatrixNode::Kind::rel_atom:
                    return s.has(0, {a.at(node->args[0]), a.at(node->args[1])});
                case MatrixNode::Kind::eq_atom:
                    return a.at(node->args[0]) == a.at(node->args[1]);
                case MatrixNode::Kind::neg: return !direct(node->lhs);
                case MatrixNode::Kind::conj: return direct(node->lhs) && direct(node->rhs);
                case MatrixNode::Kind::disj: return direct(node->lhs) || direct(node->rhs);
            }
            return false;
        };
        CHECK(eval_matrix(s, m, a) == direct(m));
    }
}

TEST_CASE("structure type checks") {
    CHECK(check_structure_type(make_graph(2, {{0, 1}}), StructureType::basic));
    CHECK_FALSE(check_structure_type(make_graph(1, {}, {0}), StructureType::basic));
    CHECK_FALSE(check_structure_type(make_digraph(2, {{0, 1}}), StructureType::undir));
    CHECK(check_structure_type(make_graph(2, {}, {0}), StructureType::undir));
    CHECK(check_structure_type(make_digraph(2, {{0, 1}}), StructureType::dir));

    Structure mon(Vocabulary({{"P", 1}, {"Q", 1}}), 2, {{{0}}, {}});
    CHECK(check_structure_type(mon, StructureType::mon));
    CHECK_FALSE(check_structure_type(mon, StructureType::dir));
    CHECK(check_structure_type(mon, StructureType::arb));
    CHECK_FALSE(check_structure_type(make_graph(2, {{0, 1}}), StructureType::mon));
}

TEST_CASE("dnf of the spec shapes") {
    // a lone atom is its own clause
    auto dnf1 = to_dnf(parse_formula("forall x forall y (x ~ y)").matrix);
    REQUIRE(dnf1.size() == 1);
    REQUIRE(dnf1[0].size() == 1);
    CHECK_FALSE(dnf1[0][0].negated);

    // implication splits into two clauses
    auto dnf2 = to_dnf(parse_formula("forall x forall y (x ~ y -> y ~ x)").matrix);
    REQUIRE(dnf2.size() == 2);
    CHECK(dnf2[0].size() == 1);
    CHECK(dnf2[0][0].negated);
    CHECK(dnf2[0][0].args == std::vector<std::string>{"x", "y"});
    CHECK_FALSE(dnf2[1][0].negated);
    CHECK(dnf2[1][0].args == std::vector<std::string>{"y", "x"});

    // the contradictory clause disappears
    auto dnf3 =
        to_dnf(parse_formula("forall x forall y ((x ~ y & ~(x ~ y)) | x = y)").matrix);
    REQUIRE(dnf3.size() == 1);
    CHECK(dnf3[0][0].is_eq);

    // duplicate literals collapse
    auto dnf4 = to_dnf(parse_formula("forall x forall y (x ~ y & x ~ y)").matrix);
    REQUIRE(dnf4.size() == 1);
    CHECK(dnf4[0].size() == 1);
}

TEST_CASE("dnf is logically equivalent to its input") {
    test::Rng rng(13);
    const Vocabulary voc = Vocabulary::graph();
    const std::vector<std::string> vars = {"u", "v", "w"};
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 3);
        Structure s = test::random_graph(rng, StructureType::dir, n, 0.5);
        MatrixPtr m = test::random_matrix(rng, voc, vars, 3);
        const auto clauses = to_dnf(m);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    Assignment asg{{"u", a}, {"v", b}, {"w", c}};
                    bool dnf_value = false;
                    for (const Clause& clause : clauses) {
                        bool all = true;
                        for (const Literal& l : clause) {
                            bool v = l.is_eq ? asg.at(l.args[0]) == asg.at(l.args[1])
                                             : s.has(0, {asg.at(l.args[0]),
                                                         asg.at(l.args[1])});
                            if (l.negated) v = !v;
                            if (!v) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            dnf_value = true;
                            break;
                        }
                    }
                    CHECK(dnf_value == eval_matrix(s, m, asg));
                }
    }
}

TEST_CASE("catalog lookups") {
    auto clusters = catalog_lookup("clusters");
    REQUIRE(clusters.has_value());
    CHECK(clusters->pattern == "aaa");
    CHECK(to_dnf(clusters->formula.matrix).size() == 4);

    // cluster graphs model it, graphs with an induced path do not
    CHECK(model_check(make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}),
                      clusters->formula));
    CHECK_FALSE(model_check(make_graph(3, {{0, 1}, {1, 2}}), clusters->formula));

    auto radius2 = catalog_lookup("radius-2");
    REQUIRE(radius2.has_value());
    CHECK(radius2->pattern == "eae");
    CHECK(radius2->formula == radius_formula(2));

    auto basic = catalog_lookup("basic");
    REQUIRE(basic.has_value());
    CHECK(basic->pattern == "aa");

    CHECK_FALSE(catalog_lookup("nonexistent").has_value());
    for (const CatalogEntry& e : formula_catalog())
        CHECK(pattern_of(e.formula).word == e.pattern);
}

TEST_CASE("radius formula matches breadth-first search") {
    test::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform(1, 5);
        Structure g = test::random_graph(rng, StructureType::basic, n, 0.45);
        const int radius = test::bfs_radius(g);
        for (int r = 1; r <= 3; ++r)
            CHECK(model_check(g, radius_formula(r)) == (radius <= r));
    }
}
