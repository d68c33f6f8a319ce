#include "solver_internal.hpp"

namespace relmod {

std::string dispatch_solver_name(const SolveRequest& req) {
    const Pattern p = pattern_of(req.formula);
    if (req.structure_type == StructureType::mon) return "monadic";
    if (req.structure_type == StructureType::basic) {
        if (p.word == "ae") return "basic_ae";
        if (p.word == "aa") return "basic_aa";
    }
    if (pattern_in_e_star(p)) return "exists_star";
    if (pattern_in_e_star_a(p)) return "exists_star_forall";
    if (pattern_in_e_star_a_star(p)) return "fpt_search_tree";
    return "brute_force";
}

SolveResult solve_with(const std::string& solver, const SolveRequest& req) {
    if (solver == "auto") return dispatch_solve(req);
    if (solver == "brute" || solver == "brute_force") return solve_brute_force(req);
    if (solver == "exists_star") return solve_exists_star(req);
    if (solver == "exists_star_forall") return solve_exists_star_forall(req);
    if (solver == "fpt_search_tree" || solver == "search_tree")
        return solve_fpt_search_tree(req);
    if (solver == "basic_ae") return solve_basic_ae(req);
    if (solver == "basic_aa") return solve_basic_aa(req);
    if (solver == "monadic") return solve_monadic(req);
    throw std::invalid_argument("unknown solver: " + solver);
}

SolveResult dispatch_solve(const SolveRequest& req) {
    return solve_with(dispatch_solver_name(req), req);
}

}  // namespace relmod
