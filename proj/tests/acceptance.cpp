// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run the whole binary or a single criterion via
//   relmod_acceptance --test-case='*criterion N:*'

#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "relmod/catalog.hpp"
#include "relmod/classifier.hpp"
#include "relmod/parser.hpp"
#include "relmod/solvers.hpp"
#include "relmod/verify.hpp"
#include "support.hpp"

using namespace relmod;

namespace {

struct CriterionBanner {
    const char* name;
    bool passed = false;
    explicit CriterionBanner(const char* n) : name(n) {}
    ~CriterionBanner() {
        std::printf("[acceptance] %s: %s\n", name, passed ? "PASS" : "FAIL");
        std::fflush(stdout);
    }
};

const OperationKind kKinds[] = {OperationKind::del, OperationKind::add, OperationKind::edit};

SolveRequest make_req(Structure s, StructureType t, Formula f, std::size_t k,
                      OperationKind kind) {
    return SolveRequest{std::move(s), t, std::move(f), k, kind, {}};
}

bool witness_ok(const SolveRequest& r, const SolveResult& res) {
    if (!res.decision) return !res.witness.has_value();
    if (!res.witness) return false;
    return validate(r.structure, *res.witness, r.kind, r.structure_type) &&
           norm(*res.witness, r.structure_type) <= r.budget &&
           model_check(apply(r.structure, *res.witness), r.formula);
}

}  // namespace

TEST_CASE("criterion 1: oracle equivalence of every specialized solver") {
    CriterionBanner banner("criterion 1 oracle equivalence");
    test::Rng rng(101);
    const Vocabulary graph = Vocabulary::graph();
    const Vocabulary monvoc({{"P", 1}, {"Q", 1}});
    std::size_t disagreements = 0;
    std::size_t checked = 0;
    std::size_t yes_decisions = 0;

    struct Case {
        const char* solver;
        SolveResult (*fn)(const SolveRequest&);
    };

    auto run_one = [&](const Case& c, const SolveRequest& r) {
        const SolveResult special = c.fn(r);
        const SolveResult oracle = solve_brute_force(r);
        ++checked;
        if (oracle.decision) ++yes_decisions;
        if (special.decision != oracle.decision || !witness_ok(r, special)) {
            ++disagreements;
            MESSAGE("disagreement in ", c.solver, " on pattern ",
                    pattern_of(r.formula).word);
        }
    };

    // (a) the full catalog, on structures matching each formula's shape
    for (const CatalogEntry& e : formula_catalog()) {
        const Vocabulary voc = vocabulary_of(e.formula);
        const bool monadic = voc.size() > 0 && voc.all_unary();
        for (int trial = 0; trial < 6; ++trial) {
            const std::size_t k = rng.uniform(0, 3);
            for (OperationKind kind : kKinds) {
                if (monadic) {
                    Structure s = test::random_structure(
                        rng, Vocabulary({{"R", 1}}), rng.uniform(1, 5), 0.5);
                    run_one({"monadic", solve_monadic},
                            make_req(s, StructureType::mon, e.formula, k, kind));
                    continue;
                }
                const Pattern p = pattern_of(e.formula);
                Structure b = test::random_graph(rng, StructureType::basic,
                                                 rng.uniform(2, 6), 0.4);
                Structure u = test::random_graph(rng, StructureType::undir,
                                                 rng.uniform(1, 5), 0.4);
                if (pattern_in_e_star(p)) {
                    run_one({"exists_star", solve_exists_star},
                            make_req(u, StructureType::undir, e.formula, k, kind));
                } else if (pattern_in_e_star_a(p)) {
                    run_one({"exists_star_forall", solve_exists_star_forall},
                            make_req(u, StructureType::undir, e.formula, k, kind));
                }
                if (pattern_in_e_star_a_star(p))
                    run_one({"fpt_search_tree", solve_fpt_search_tree},
                            make_req(b, StructureType::basic, e.formula, k, kind));
                if (p.word == "ae")
                    run_one({"basic_ae", solve_basic_ae},
                            make_req(b, StructureType::basic, e.formula, k, kind));
                if (p.word == "aa")
                    run_one({"basic_aa", solve_basic_aa},
                            make_req(b, StructureType::basic, e.formula, k, kind));
            }
        }
    }

    // (b) 500 random formulas per solver, rotating over the applicable
    // structure types
    const Vocabulary arbvoc({{"P", 1}, {"E", 2}});
    auto pick_structure = [&](int which, StructureType& type_out) -> Structure {
        switch (which % 5) {
            case 0:
                type_out = StructureType::arb;
                return test::random_structure(rng, arbvoc, rng.uniform(1, 4), 0.4);
            case 1:
                type_out = StructureType::dir;
                return test::random_graph(rng, StructureType::dir, rng.uniform(1, 5), 0.4);
            case 2:
                type_out = StructureType::undir;
                return test::random_graph(rng, StructureType::undir, rng.uniform(1, 6), 0.4);
            case 3:
                type_out = StructureType::basic;
                return test::random_graph(rng, StructureType::basic, rng.uniform(1, 6), 0.4);
            default:
                type_out = StructureType::mon;
                return test::random_structure(rng, monvoc, rng.uniform(1, 5), 0.5);
        }
    };
    auto vocabulary_for = [&](const Structure& s) -> const Vocabulary& {
        return s.vocabulary().all_unary() ? monvoc
               : s.vocabulary().size() == 2 ? arbvoc
                                            : graph;
    };

    const int rounds = 500;
    for (int trial = 0; trial < rounds; ++trial) {
        const std::size_t k = rng.uniform(0, 3);
        const OperationKind kind = kKinds[rng.uniform(0, 2)];

        {  // exists_star over every structure type in turn
            StructureType t;
            Structure s = pick_structure(trial, t);
            std::string pat(rng.uniform(1, 3), 'e');
            run_one({"exists_star", solve_exists_star},
                    make_req(s, t, test::random_formula(rng, vocabulary_for(s), pat), k,
                             kind));
        }
        {  // exists_star_forall over every structure type in turn
            StructureType t;
            Structure s = pick_structure(trial + 1, t);
            std::string pat(rng.uniform(0, 2), 'e');
            pat += 'a';
            run_one({"exists_star_forall", solve_exists_star_forall},
                    make_req(s, t, test::random_formula(rng, vocabulary_for(s), pat), k,
                             kind));
        }
        {  // search tree over every structure type in turn
            StructureType t;
            Structure s = pick_structure(trial + 2, t);
            std::string pat(rng.uniform(0, 1), 'e');
            pat += std::string(rng.uniform(1, 2), 'a');
            run_one({"fpt_search_tree", solve_fpt_search_tree},
                    make_req(s, t, test::random_formula(rng, vocabulary_for(s), pat), k,
                             kind));
        }
        {  // the two basic-graph case analyses
            Structure s =
                test::random_graph(rng, StructureType::basic, rng.uniform(2, 6), 0.4);
            run_one({"basic_ae", solve_basic_ae},
                    make_req(s, StructureType::basic, test::random_formula(rng, graph, "ae"),
                             k, kind));
            run_one({"basic_aa", solve_basic_aa},
                    make_req(s, StructureType::basic, test::random_formula(rng, graph, "aa"),
                             k, kind));
        }
        {  // monadic structures over two unary symbols
            Structure s = test::random_structure(rng, monvoc, rng.uniform(1, 5), 0.5);
            const char* pats[] = {"a", "e", "ae", "ea", "aa", "ee", "aae", "eea"};
            run_one({"monadic", solve_monadic},
                    make_req(s, StructureType::mon,
                             test::random_formula(rng, monvoc, pats[rng.uniform(0, 7)]), k,
                             kind));
        }
        {  // radius-1 against the radius formula oracle
            Structure s =
                test::random_graph(rng, StructureType::basic, rng.uniform(1, 6), 0.4);
            const OperationKind rk = kKinds[rng.uniform(0, 2)];
            const SolveResult direct = solve_radius(s, 1, k, rk);
            const SolveRequest oracle_req =
                make_req(s, StructureType::basic, radius_formula(1), k, rk);
            ++checked;
            if (direct.decision != solve_brute_force(oracle_req).decision ||
                !witness_ok(oracle_req, direct))
                ++disagreements;
        }
    }

    std::printf("[acceptance]   %zu comparisons (%zu yes, %zu no), %zu disagreements\n",
                checked, yes_decisions, checked - yes_decisions, disagreements);
    REQUIRE(checked >= 6 * 500);
    // both outcomes must actually occur, or the comparison would be vacuous
    REQUIRE(yes_decisions > checked / 10);
    REQUIRE(checked - yes_decisions > checked / 10);
    CHECK(disagreements == 0);
    banner.passed = disagreements == 0;
}

TEST_CASE("criterion 2: exhaustive reduction verification") {
    CriterionBanner banner("criterion 2 reduction verification");
    bool all_ok = true;

    const HarnessLimits setcover_limits{3, 2, 1, 0, 0};
    for (const char* name :
         {"setcover_ae_undir", "setcover_aea_basic", "setcover_aee_basic",
          "setcover_aae_basic", "setcover_eae_basic"}) {
        const HarnessResult res = run_verify_harness(name, setcover_limits);
        std::printf("[acceptance]   %s: %zu instances, %zu equivalent, %zu inconclusive\n",
                    name, res.instances, res.equivalent, res.inconclusive);
        std::fflush(stdout);
        CHECK(res.ok());
        all_ok = all_ok && res.ok();
    }

    {
        HarnessLimits vc{0, 0, 2, 4, 0};
        const HarnessResult res = run_verify_harness("vertexcover_aa_undir", vc);
        std::printf("[acceptance]   vertexcover_aa_undir: %zu instances, %zu equivalent\n",
                    res.instances, res.equivalent);
        CHECK(res.ok());
        all_ok = all_ok && res.ok();
    }
    {
        HarnessLimits vc{0, 0, 1, 3, 0};
        const HarnessResult res = run_verify_harness("vertexcover_eaa_basic", vc);
        std::printf("[acceptance]   vertexcover_eaa_basic: %zu instances, %zu equivalent\n",
                    res.instances, res.equivalent);
        CHECK(res.ok());
        all_ok = all_ok && res.ok();
    }
    for (const char* name : {"majority_undir_a_del", "majority_monadic_del"}) {
        HarnessLimits mj{0, 0, 0, 0, 6};
        const HarnessResult res = run_verify_harness(name, mj);
        std::printf("[acceptance]   %s: %zu instances, %zu equivalent\n", name, res.instances,
                    res.equivalent);
        CHECK(res.ok());
        all_ok = all_ok && res.ok();
    }
    // the flagged variants produce a documented report instead of a pass
    for (const char* name : {"majority_basic_ea_add", "majority_basic_aa"}) {
        HarnessLimits mj{0, 0, 0, 0, 6};
        const HarnessResult res = run_verify_harness(name, mj);
        std::printf(
            "[acceptance]   %s (flagged, report only): %zu instances, %zu equivalent, "
            "%zu inequivalent\n",
            name, res.instances, res.equivalent, res.inequivalent);
        CHECK(res.flagged);
        CHECK(res.inconclusive == 0);
        all_ok = all_ok && res.flagged && res.inconclusive == 0;
    }

    banner.passed = all_ok;
    CHECK(all_ok);
}

TEST_CASE("criterion 3: addition/deletion duality") {
    CriterionBanner banner("criterion 3 duality");
    test::Rng rng(103);
    const std::vector<std::string> patterns = {"a", "e", "ae", "ea", "aa", "ee", "ae", "eaa"};
    const StructureType types[] = {StructureType::arb, StructureType::dir,
                                   StructureType::undir, StructureType::basic};
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const StructureType t = types[rng.uniform(0, 3)];
        const int n = rng.uniform(1, 4);
        Structure s = t == StructureType::basic || t == StructureType::undir
                          ? test::random_graph(rng, t, n, 0.4)
                          : test::random_graph(rng, StructureType::dir, n, 0.4);
        Formula f = test::random_formula(
            rng, s.vocabulary(),
            patterns[rng.uniform(0, static_cast<int>(patterns.size()) - 1)]);
        const std::size_t k = rng.uniform(0, 2);

        const bool add_yes =
            solve_brute_force(make_req(s, t, f, k, OperationKind::add)).decision;
        const bool del_yes =
            solve_brute_force(make_req(complement_structure(s, t), t,
                                       complement_formula(f, t), k, OperationKind::del))
                .decision;
        if (add_yes != del_yes) ++mismatches;
    }
    CHECK(mismatches == 0);
    banner.passed = mismatches == 0;
}

TEST_CASE("criterion 4: classifier fidelity") {
    CriterionBanner banner("criterion 4 classifier fidelity");
    bool ok = true;

    std::vector<Pattern> patterns = {Pattern("")};
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (patterns[i].word.size() == 6) continue;
        patterns.push_back(Pattern(patterns[i].word + "a"));
        patterns.push_back(Pattern(patterns[i].word + "e"));
    }
    REQUIRE(patterns.size() == 127);

    const StructureType types[] = {StructureType::arb, StructureType::dir,
                                   StructureType::undir, StructureType::basic,
                                   StructureType::mon};
    auto classical_rank = [](Bucket b) {
        return b == Bucket::AC0 ? 0 : b == Bucket::TC0_not_AC0 ? 1 : 2;
    };
    auto param_rank = [](Bucket b) {
        return b == Bucket::ParaAC0 ? 0 : b == Bucket::ParaAC0up ? 1 : 2;
    };

    // partition: every pattern gets exactly one bucket of the right setting
    for (const Pattern& p : patterns)
        for (StructureType t : types) {
            const Bucket c = classify_classical(t, OperationKind::edit, p).bucket;
            const Bucket q = classify_parameterized(t, OperationKind::edit, p).bucket;
            if (c != Bucket::AC0 && c != Bucket::TC0_not_AC0 && c != Bucket::NPhard_containing)
                ok = false;
            if (q != Bucket::ParaAC0 && q != Bucket::ParaAC0up &&
                q != Bucket::W2hard_containing)
                ok = false;
        }

    // monotonicity along the subsequence order
    for (const Pattern& p : patterns)
        for (const Pattern& q : patterns) {
            if (!is_subsequence(p, q)) continue;
            for (StructureType t : types) {
                if (classical_rank(classify_classical(t, OperationKind::edit, p).bucket) >
                    classical_rank(classify_classical(t, OperationKind::edit, q).bucket))
                    ok = false;
                if (param_rank(classify_parameterized(t, OperationKind::edit, p).bucket) >
                    param_rank(classify_parameterized(t, OperationKind::edit, q).bucket))
                    ok = false;
            }
        }
    CHECK(ok);

    // the twelve pinned landscape entries
    struct Pin {
        StructureType t;
        Setting s;
        const char* p;
        Bucket b;
    } pins[] = {
        {StructureType::undir, Setting::parameterized, "ae", Bucket::W2hard_containing},
        {StructureType::basic, Setting::parameterized, "ae", Bucket::ParaAC0up},
        {StructureType::basic, Setting::classical, "eaa", Bucket::NPhard_containing},
        {StructureType::mon, Setting::parameterized, "aeaeae", Bucket::ParaAC0},
        {StructureType::undir, Setting::classical, "e", Bucket::AC0},
        {StructureType::undir, Setting::classical, "a", Bucket::TC0_not_AC0},
        {StructureType::undir, Setting::classical, "eea", Bucket::TC0_not_AC0},
        {StructureType::arb, Setting::classical, "aa", Bucket::NPhard_containing},
        {StructureType::basic, Setting::classical, "a", Bucket::AC0},
        {StructureType::basic, Setting::classical, "ae", Bucket::TC0_not_AC0},
        {StructureType::basic, Setting::parameterized, "aee", Bucket::W2hard_containing},
        {StructureType::arb, Setting::parameterized, "eeaa", Bucket::ParaAC0up},
    };
    for (const Pin& pin : pins) {
        const Bucket got =
            pin.s == Setting::classical
                ? classify_classical(pin.t, OperationKind::edit, Pattern(pin.p)).bucket
                : classify_parameterized(pin.t, OperationKind::edit, Pattern(pin.p)).bucket;
        CHECK(got == pin.b);
        if (got != pin.b) ok = false;
    }

    banner.passed = ok;
}

TEST_CASE("criterion 5: the search tree does fixed-parameter work") {
    CriterionBanner banner("criterion 5 fpt smoke test");
    test::Rng rng(105);

    // three 10-cliques, perturbed by three edits
    std::vector<std::pair<int, int>> edges;
    for (int block = 0; block < 3; ++block)
        for (int u = 10 * block; u < 10 * (block + 1); ++u)
            for (int v = u + 1; v < 10 * (block + 1); ++v) edges.emplace_back(u, v);
    // delete two intra-clique edges, add one bridge
    edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(0, 5)));
    edges.erase(std::find(edges.begin(), edges.end(), std::make_pair(12, 17)));
    edges.emplace_back(9, 10);
    Structure g = make_graph(30, edges);

    SolveRequest r = make_req(g, StructureType::basic, catalog_formula("clusters"), 3,
                              OperationKind::edit);

    const auto start = std::chrono::steady_clock::now();
    const SolveResult fpt = solve_fpt_search_tree(r);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("[acceptance]   search tree: decision=%d nodes=%llu in %lld ms\n",
                fpt.decision, static_cast<unsigned long long>(fpt.nodes_explored),
                static_cast<long long>(elapsed));
    CHECK(fpt.decision);
    CHECK(witness_ok(r, fpt));
    CHECK(elapsed < 10'000);

    // same instance drowns the oracle in candidates
    SolveRequest limited = r;
    limited.limits.node_budget = 100'000;
    bool exhausted = false;
    try {
        solve_brute_force(limited);
    } catch (const ResourceLimitError&) {
        exhausted = true;
    }
    CHECK(exhausted);

    banner.passed = fpt.decision && elapsed < 10'000 && exhausted;
}

TEST_CASE("criterion 6: invariance suite") {
    CriterionBanner banner("criterion 6 invariance suite");
    test::Rng rng(106);
    const Vocabulary graph = Vocabulary::graph();
    const Vocabulary monvoc({{"P", 1}, {"Q", 1}});
    std::size_t failures = 0;

    struct Solver {
        const char* name;
        SolveResult (*fn)(const SolveRequest&);
    };
    const Solver solvers[] = {
        {"brute_force", solve_brute_force},
        {"exists_star", solve_exists_star},
        {"exists_star_forall", solve_exists_star_forall},
        {"fpt_search_tree", solve_fpt_search_tree},
        {"basic_ae", solve_basic_ae},
        {"basic_aa", solve_basic_aa},
        {"monadic", solve_monadic},
    };

    for (const Solver& solver : solvers) {
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t k = rng.uniform(0, 2);
            const OperationKind kind = kKinds[rng.uniform(0, 2)];
            SolveRequest r;
            const std::string name = solver.name;
            if (name == "monadic") {
                Structure s = test::random_structure(rng, monvoc, rng.uniform(1, 4), 0.5);
                const char* pats[] = {"a", "e", "ae", "ea"};
                r = make_req(s, StructureType::mon,
                             test::random_formula(rng, monvoc, pats[rng.uniform(0, 3)]), k,
                             kind);
            } else if (name == "basic_ae" || name == "basic_aa") {
                Structure s =
                    test::random_graph(rng, StructureType::basic, rng.uniform(2, 5), 0.4);
                r = make_req(s, StructureType::basic,
                             test::random_formula(rng, graph,
                                                  name == "basic_ae" ? "ae" : "aa"),
                             k, kind);
            } else if (name == "exists_star") {
                Structure s =
                    test::random_graph(rng, StructureType::dir, rng.uniform(1, 4), 0.4);
                r = make_req(s, StructureType::dir,
                             test::random_formula(rng, graph,
                                                  std::string(rng.uniform(1, 2), 'e')),
                             k, kind);
            } else if (name == "exists_star_forall") {
                Structure s =
                    test::random_graph(rng, StructureType::undir, rng.uniform(1, 4), 0.4);
                std::string pat(rng.uniform(0, 1), 'e');
                pat += 'a';
                r = make_req(s, StructureType::undir, test::random_formula(rng, graph, pat),
                             k, kind);
            } else {
                Structure s =
                    test::random_graph(rng, StructureType::basic, rng.uniform(2, 4), 0.4);
                const char* pats[] = {"a", "aa", "ea", "e"};
                r = make_req(s, StructureType::basic,
                             test::random_formula(rng, graph, pats[rng.uniform(0, 3)]), k,
                             kind);
            }

            const SolveResult res = solver.fn(r);
            if (!witness_ok(r, res)) ++failures;

            // budget monotonicity
            SolveRequest bigger = r;
            bigger.budget = r.budget + 1;
            if (res.decision && !solver.fn(bigger).decision) ++failures;

            // isomorphism invariance
            SolveRequest permuted = r;
            permuted.structure = permute_structure(
                r.structure, test::random_permutation(rng, r.structure.universe_size()));
            if (solver.fn(permuted).decision != res.decision) ++failures;
        }
    }
    CHECK(failures == 0);
    banner.passed = failures == 0;
}

TEST_CASE("criterion 7: radius solvers and reductions") {
    CriterionBanner banner("criterion 7 radius");
    bool ok = true;

    // radius-1 agrees with the oracle on every basic graph with n <= 5, k <= 2
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            Structure g = make_graph(n, edges);
            for (std::size_t k = 0; k <= 2; ++k)
                for (OperationKind kind : kKinds) {
                    const bool direct = solve_radius(g, 1, k, kind).decision;
                    const bool oracle =
                        solve_brute_force(
                            make_req(g, StructureType::basic, radius_formula(1), k, kind))
                            .decision;
                    if (direct != oracle) ok = false;
                }
        }
    }
    CHECK(ok);

    // one tiny eae instance each for r = 2 and r = 3
    SetCoverInstance tiny;
    tiny.sets = {"s1"};
    tiny.universe = {"u"};
    tiny.edges = {{"s1", "u"}};
    tiny.k = 1;
    for (int r = 2; r <= 3; ++r) {
        const VerifyReport rep = verify_reduction(
            "setcover_eae_basic", tiny, {OperationKind::add, OperationKind::edit}, false, r);
        CHECK(rep.ok());
        if (!rep.ok()) ok = false;

        // cross-check with the breadth-first radius oracle
        const ReductionOutput out = reduce_setcover_eae_basic(tiny, false, r);
        bool bfs_yes = false;
        for (const Modulator& m : enumerate_modulators(out.structure, out.budget,
                                                       OperationKind::add,
                                                       StructureType::basic))
            if (test::bfs_radius(apply(out.structure, m)) <= r) {
                bfs_yes = true;
                break;
            }
        const bool source_yes = solve_source(SourceInstance(tiny));
        CHECK(bfs_yes == source_yes);
        if (bfs_yes != source_yes) ok = false;
    }

    banner.passed = ok;
    CHECK(ok);
}
