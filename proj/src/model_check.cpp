#include "relmod/model_check.hpp"

#include "eval.hpp"

namespace relmod {

bool model_check(const Structure& s, const Formula& f, const Assignment& partial) {
    detail::CompiledFormula cf = detail::compile_formula(f, s.vocabulary());
    std::vector<int> env(cf.slot_vars.size(), -1);
    for (std::size_t i = f.prefix.size(); i < cf.slot_vars.size(); ++i) {
        auto it = partial.find(cf.slot_vars[i]);
        if (it == partial.end())
            throw std::invalid_argument("model_check: unbound variable " + cf.slot_vars[i]);
        if (it->second < 0 || it->second >= s.universe_size())
            throw std::invalid_argument("model_check: assignment out of range for " +
                                        cf.slot_vars[i]);
        env[i] = it->second;
    }
    detail::PackedRels rels(s);
    return detail::eval_compiled(cf, rels, s.universe_size(), env);
}

bool eval_matrix(const Structure& s, const MatrixPtr& m, const Assignment& assignment) {
    Formula f;
    f.matrix = m;
    return model_check(s, f, assignment);
}

}  // namespace relmod
