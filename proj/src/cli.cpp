#include "relmod/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "relmod/catalog.hpp"
#include "relmod/classifier.hpp"
#include "relmod/json_io.hpp"
#include "relmod/parser.hpp"
#include "relmod/solvers.hpp"
#include "relmod/verify.hpp"

namespace relmod {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string read_text_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

Json verdict_to_json(const ComplexityVerdict& v) {
    Json rules = Json::array();
    for (const VerdictRule& r : v.rules)
        rules.push_back(Json{{"pattern", r.pattern}, {"ref", r.ref}});
    return Json{{"setting", setting_name(v.setting)},
                {"bucket", bucket_name(v.bucket)},
                {"rules", std::move(rules)}};
}

Setting parse_setting(const std::string& s) {
    if (s == "classical") return Setting::classical;
    if (s == "param" || s == "parameterized") return Setting::parameterized;
    throw std::invalid_argument("unknown setting: " + s);
}

SolveLimits limits_from_flags(std::uint64_t node_budget, std::uint64_t time_budget_ms) {
    SolveLimits lim;
    lim.node_budget = node_budget;
    lim.time_budget_ms = time_budget_ms;
    return lim;
}

struct CommonFlags {
    std::string format = "text";
    std::uint64_t node_budget = 0;
    std::uint64_t time_budget_ms = 0;
    std::uint64_t seed = 1;
};

int cmd_classify(const std::string& type, const std::string& setting,
                 const std::string& pattern, const std::string& formula_file,
                 const std::string& op, const CommonFlags& flags, std::ostream& out) {
    const StructureType t = structure_type_from_name(type);
    const OperationKind kind = operation_kind_from_name(op);
    Pattern p;
    if (!formula_file.empty()) {
        p = pattern_of(parse_formula(read_text_file(formula_file)));
    } else {
        p = Pattern(pattern);
    }
    const Setting s = parse_setting(setting);
    const ComplexityVerdict v = s == Setting::classical ? classify_classical(t, kind, p)
                                                        : classify_parameterized(t, kind, p);
    if (flags.format == "json") {
        out << verdict_to_json(v).dump(2) << "\n";
    } else {
        out << structure_type_name(t) << " " << setting_name(v.setting) << " pattern '"
            << p.word << "' -> " << bucket_name(v.bucket) << "\n";
        for (const VerdictRule& r : v.rules)
            out << "  rule: " << r.pattern << "  (" << r.ref << ")\n";
    }
    return kExitYes;
}

int cmd_solve(const std::string& structure_file, const std::string& formula_file,
              const std::string& catalog_name, int radius, std::size_t k,
              const std::string& kind_name, const std::string& type_name,
              const std::string& solver, const CommonFlags& flags, std::ostream& out) {
    const Structure s = structure_from_json(load_json_file(structure_file));
    const OperationKind kind = operation_kind_from_name(kind_name);
    const StructureType t = structure_type_from_name(type_name);
    SolveResult result;
    if (radius > 0) {
        result = solve_radius(s, radius, k, kind,
                              limits_from_flags(flags.node_budget, flags.time_budget_ms));
    } else {
        Formula f;
        if (!catalog_name.empty())
            f = catalog_formula(catalog_name);
        else
            f = parse_formula(read_text_file(formula_file));
        SolveRequest req{s, t, f, k, kind,
                         limits_from_flags(flags.node_budget, flags.time_budget_ms)};
        result = solve_with(solver, req);
    }

    Json j{{"decision", result.decision},
           {"solver", result.solver_used},
           {"nodes_explored", result.nodes_explored}};
    if (result.witness) {
        const Structure modified = apply(s, *result.witness);
        j["witness"] = Json{{"kind", kind_name},
                            {"norm", norm(*result.witness, t)},
                            {"modulator", modulator_to_json(*result.witness, s.vocabulary())},
                            {"result_hash", structure_hash_hex(modified)}};
    }
    if (flags.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        out << (result.decision ? "yes" : "no") << " (solver: " << result.solver_used
            << ", nodes: " << result.nodes_explored << ")\n";
        if (result.witness)
            out << "witness norm " << norm(*result.witness, t) << ": "
                << modulator_to_json(*result.witness, s.vocabulary()).dump() << "\n";
    }
    return result.decision ? kExitYes : kExitNo;
}

int cmd_check(const std::string& structure_file, const std::string& formula_file,
              const std::string& catalog_name, const std::string& modulator_file,
              std::size_t k, const std::string& kind_name, const std::string& type_name,
              const CommonFlags& flags, std::ostream& out) {
    const Structure s = structure_from_json(load_json_file(structure_file));
    const OperationKind kind = operation_kind_from_name(kind_name);
    const StructureType t = structure_type_from_name(type_name);
    Formula f;
    if (!catalog_name.empty())
        f = catalog_formula(catalog_name);
    else
        f = parse_formula(read_text_file(formula_file));
    Modulator m = Modulator::empty_for(s.vocabulary());
    if (!modulator_file.empty())
        m = modulator_from_json(load_json_file(modulator_file), s.vocabulary());

    const bool legal = validate(s, m, kind, t);
    const std::size_t cost = norm(m, t);
    const bool within = cost <= k;
    const bool models = legal && model_check(apply(s, m), f);
    const bool pass = legal && within && models;

    Json j{{"valid", legal}, {"norm", cost}, {"within_budget", within},
           {"models", legal ? Json(models) : Json(nullptr)}, {"pass", pass}};
    if (flags.format == "json")
        out << j.dump(2) << "\n";
    else
        out << (pass ? "pass" : "fail") << " (valid=" << legal << ", norm=" << cost
            << ", budget=" << k << ", models=" << (legal && models) << ")\n";
    return pass ? kExitYes : kExitNo;
}

int cmd_reduce(const std::string& name, const std::string& source_file,
               const std::string& out_dir, bool directed, int radius, std::ostream& out) {
    const auto canonical = canonical_reduction_name(name);
    if (!canonical) throw std::invalid_argument("unknown reduction: " + name);
    const ReductionSpec* spec = nullptr;
    for (const ReductionSpec& s : reduction_registry())
        if (s.name == *canonical) spec = &s;
    const SourceInstance inst = source_from_json(load_json_file(source_file), spec->source);
    const ReductionOutput red = build_reduction(*canonical, inst, directed, radius);
    write_reduction_output(red, out_dir);
    out << red.reduction << ": " << red.structure.universe_size() << " vertices, "
        << red.structure.total_tuples() << " tuples, budget " << red.budget << " -> "
        << out_dir << "\n";
    return kExitYes;
}

int cmd_verify(const std::string& name, const HarnessLimits& limits, bool directed,
               int radius, const CommonFlags& flags, std::ostream& out) {
    const HarnessResult result = run_verify_harness(
        name, limits, directed, radius,
        limits_from_flags(flags.node_budget, flags.time_budget_ms));
    if (flags.format == "json") {
        Json failures = Json::array();
        for (const VerifyReport& r : result.failures) {
            Json kinds = Json::array();
            for (const KindReport& k : r.kinds)
                kinds.push_back(Json{{"kind", operation_kind_name(k.kind)},
                                     {"source", k.source_yes},
                                     {"target", k.target_yes},
                                     {"equivalent", k.equivalent},
                                     {"inconclusive", k.inconclusive}});
            failures.push_back(Json{{"source", r.source_desc}, {"kinds", std::move(kinds)}});
        }
        out << Json{{"reduction", result.reduction},
                    {"instances", result.instances},
                    {"equivalent", result.equivalent},
                    {"inequivalent", result.inequivalent},
                    {"inconclusive", result.inconclusive},
                    {"flagged", result.flagged},
                    {"ok", result.ok()},
                    {"failures", std::move(failures)}}
                   .dump(2)
            << "\n";
    } else {
        out << result.reduction << ": " << result.instances << " instances, "
            << result.equivalent << " equivalent, " << result.inequivalent
            << " inequivalent, " << result.inconclusive << " inconclusive"
            << (result.flagged ? " [flagged: report only]" : "") << " -> "
            << (result.ok() ? "PASS" : "FAIL") << "\n";
        for (const VerifyReport& r : result.failures) {
            out << "  " << r.source_desc << ":";
            for (const KindReport& k : r.kinds)
                out << " " << operation_kind_name(k.kind) << "(src="
                    << (k.source_yes ? "yes" : "no") << ",tgt="
                    << (k.inconclusive ? "?" : (k.target_yes ? "yes" : "no")) << ")";
            out << "\n";
        }
    }
    return result.ok() ? kExitYes : kExitNo;
}

int cmd_catalog(const std::string& name, const CommonFlags& flags, std::ostream& out) {
    if (!name.empty() && !catalog_lookup(name))
        throw std::invalid_argument("unknown formula: " + name);
    if (flags.format == "json") {
        Json arr = Json::array();
        for (const CatalogEntry& e : formula_catalog()) {
            if (!name.empty() && e.name != name) continue;
            arr.push_back(Json{{"name", e.name},
                               {"pattern", e.pattern},
                               {"formula", e.text},
                               {"note", e.note}});
        }
        out << arr.dump(2) << "\n";
    } else {
        for (const CatalogEntry& e : formula_catalog()) {
            if (!name.empty() && e.name != name) continue;
            out << e.name << "  [" << e.pattern << "]  " << print_formula(e.formula) << "\n";
        }
    }
    return kExitYes;
}

int cmd_table(std::size_t max_len, const CommonFlags& flags, std::ostream& out) {
    const StructureType types[] = {StructureType::arb, StructureType::dir,
                                   StructureType::undir, StructureType::basic,
                                   StructureType::mon};
    std::vector<std::string> patterns = {""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t start = patterns.size();
        std::vector<std::string> next;
        for (std::size_t i = 0; i < start; ++i) {
            if (patterns[i].size() == len - 1) {
                next.push_back(patterns[i] + "a");
                next.push_back(patterns[i] + "e");
            }
        }
        patterns.insert(patterns.end(), next.begin(), next.end());
    }

    Json rows = Json::array();
    for (const std::string& w : patterns) {
        const Pattern p(w);
        for (StructureType t : types) {
            const auto c = classify_classical(t, OperationKind::edit, p);
            const auto q = classify_parameterized(t, OperationKind::edit, p);
            if (flags.format == "json") {
                rows.push_back(Json{{"pattern", w},
                                    {"type", structure_type_name(t)},
                                    {"classical", bucket_name(c.bucket)},
                                    {"parameterized", bucket_name(q.bucket)}});
            } else {
                out << (w.empty() ? "(empty)" : w) << "\t" << structure_type_name(t) << "\t"
                    << bucket_name(c.bucket) << "\t" << bucket_name(q.bucket) << "\n";
            }
        }
    }
    if (flags.format == "json") out << rows.dump(2) << "\n";
    return kExitYes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"relation modification toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    CommonFlags flags;
    app.add_option("--format", flags.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--node-budget", flags.node_budget,
                   "solver node budget (default: RELMOD_NODE_BUDGET or 50000000)");
    app.add_option("--time-budget-ms", flags.time_budget_ms, "solver time budget");
    app.add_option("--seed", flags.seed, "random seed for generators");

    // classify
    auto* classify = app.add_subcommand("classify", "place a pattern on the landscape");
    std::string cl_type = "arb", cl_setting = "classical", cl_pattern, cl_formula,
                cl_op = "edit";
    classify->add_option("--type", cl_type, "arb | dir | undir | basic | mon");
    classify->add_option("--setting", cl_setting, "classical | param");
    auto* popt = classify->add_option("--pattern", cl_pattern, "word over {a, e}");
    classify->add_option("--formula", cl_formula, "formula file; its pattern is used")
        ->excludes(popt);
    classify->add_option("--op", cl_op, "del | add | edit");

    // solve
    auto* solve = app.add_subcommand("solve", "decide a modification instance");
    std::string so_structure, so_formula, so_catalog, so_kind = "edit", so_type = "arb",
                so_solver = "auto";
    std::size_t so_k = 0;
    int so_radius = 0;
    solve->add_option("--structure", so_structure, "structure JSON file")->required();
    solve->add_option("--formula", so_formula, "formula file");
    solve->add_option("--target", so_catalog, "catalog formula name instead of a file");
    solve->add_option("--radius", so_radius, "solve radius-r modification instead");
    solve->add_option("-k,--budget", so_k, "modification budget")->required();
    solve->add_option("--kind", so_kind, "del | add | edit");
    solve->add_option("--type", so_type, "structure type");
    solve->add_option("--solver", so_solver,
                      "auto | brute | exists_star | exists_star_forall | fpt_search_tree | "
                      "basic_ae | basic_aa | monadic");

    // check
    auto* check = app.add_subcommand("check", "re-validate a witness modulator");
    std::string ch_structure, ch_formula, ch_catalog, ch_modulator, ch_kind = "edit",
                ch_type = "arb";
    std::size_t ch_k = 0;
    check->add_option("--structure", ch_structure, "structure JSON file")->required();
    check->add_option("--formula", ch_formula, "formula file");
    check->add_option("--target", ch_catalog, "catalog formula name");
    check->add_option("--modulator", ch_modulator, "modulator JSON file");
    check->add_option("-k,--budget", ch_k, "modification budget")->required();
    check->add_option("--kind", ch_kind, "del | add | edit");
    check->add_option("--type", ch_type, "structure type");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "build a hardness gadget instance");
    std::string re_name, re_source, re_out = "reduction_out";
    bool re_directed = false;
    int re_radius = 2;
    reduce->add_option("name", re_name, "reduction name")->required();
    reduce->add_option("--source", re_source, "source instance JSON file")->required();
    reduce->add_option("--out", re_out, "output directory");
    reduce->add_flag("--directed", re_directed, "directed variant");
    reduce->add_option("--radius", re_radius, "radius for the eae family (>= 2)");

    // verify
    auto* verify = app.add_subcommand("verify", "exhaustively verify a reduction family");
    std::string ve_name;
    HarnessLimits ve_limits;
    bool ve_directed = false;
    int ve_radius = 2;
    verify->add_option("name", ve_name, "reduction name")->required();
    verify->add_option("--max-sets", ve_limits.max_sets, "set cover: max |S|");
    verify->add_option("--max-universe", ve_limits.max_universe, "set cover: max |U|");
    verify->add_option("--max-k", ve_limits.max_k, "max budget");
    verify->add_option("--max-vertices", ve_limits.max_vertices, "vertex cover: max |V|");
    verify->add_option("--max-bits", ve_limits.max_bits, "majority: max |s| (even)");
    verify->add_flag("--directed", ve_directed, "directed variant");
    verify->add_option("--radius", ve_radius, "radius for the eae family");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "list the named formulas");
    std::string ca_name;
    catalog->add_option("--name", ca_name, "print a single formula");

    // table
    auto* table = app.add_subcommand("table", "emit the complexity landscape");
    std::size_t ta_len = 3;
    table->add_option("--max-len", ta_len, "maximum pattern length");

    std::vector<std::string> argv(args);
    try {
        std::vector<const char*> cargv;
        cargv.push_back("relmod");
        for (const std::string& a : argv) cargv.push_back(a.c_str());
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends print through CLI11
            std::ostringstream os;
            out << app.help();
            return kExitYes;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (classify->parsed()) {
            if (cl_pattern.empty() && cl_formula.empty())
                throw std::invalid_argument("classify needs --pattern or --formula");
            return cmd_classify(cl_type, cl_setting, cl_pattern, cl_formula, cl_op, flags,
                                out);
        }
        if (solve->parsed())
            return cmd_solve(so_structure, so_formula, so_catalog, so_radius, so_k, so_kind,
                             so_type, so_solver, flags, out);
        if (check->parsed())
            return cmd_check(ch_structure, ch_formula, ch_catalog, ch_modulator, ch_k,
                             ch_kind, ch_type, flags, out);
        if (reduce->parsed())
            return cmd_reduce(re_name, re_source, re_out, re_directed, re_radius, out);
        if (verify->parsed())
            return cmd_verify(ve_name, ve_limits, ve_directed, ve_radius, flags, out);
        if (catalog->parsed()) return cmd_catalog(ca_name, flags, out);
        if (table->parsed()) return cmd_table(ta_len, flags, out);
        err << "error: no subcommand\n";
        return kExitError;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace relmod
