#include "relmod/verify.hpp"

#include <sstream>

namespace relmod {

bool VerifyReport::ok() const {
    for (const KindReport& k : kinds) {
        if (k.inconclusive) return false;
        if (!flagged && !k.equivalent) return false;
    }
    return true;
}

namespace {

std::string describe_source(const SourceInstance& inst) {
    std::ostringstream os;
    if (const auto* sc = std::get_if<SetCoverInstance>(&inst)) {
        os << "setcover |S|=" << sc->sets.size() << " |U|=" << sc->universe.size()
           << " edges=" << sc->edges.size() << " k=" << sc->k;
    } else if (const auto* vc = std::get_if<VertexCoverInstance>(&inst)) {
        os << "vertexcover n=" << vc->graph.universe_size()
           << " m=" << vc->graph.edge_count() / 2 << " k=" << vc->k;
    } else {
        os << "majority s=" << std::get<MajorityInstance>(inst).bits;
    }
    return os.str();
}

}  // namespace

VerifyReport verify_reduction_output(const ReductionOutput& out, const SourceInstance& inst,
                                     const std::vector<OperationKind>& kinds,
                                     SolveLimits limits) {
    VerifyReport report;
    report.reduction = out.reduction;
    report.source_desc = describe_source(inst);
    report.flagged = out.flagged;

    const bool source_yes = solve_source(inst);
    for (OperationKind kind : kinds) {
        KindReport kr;
        kr.kind = kind;
        kr.source_yes = source_yes;
        try {
            SolveRequest req = out.request(kind);
            req.limits = limits;
            SolveResult target = solve_brute_force(req);
            kr.target_yes = target.decision;
            kr.equivalent = (kr.source_yes == kr.target_yes);
            kr.witness = std::move(target.witness);
        } catch (const ResourceLimitError& e) {
            kr.inconclusive = true;
            kr.note = e.what();
        }
        report.kinds.push_back(std::move(kr));
    }
    return report;
}

VerifyReport verify_reduction(const std::string& name, const SourceInstance& inst,
                              const std::vector<OperationKind>& kinds, bool directed,
                              int radius, SolveLimits limits) {
    ReductionOutput out = build_reduction(name, inst, directed, radius);
    std::vector<OperationKind> check = kinds.empty() ? out.kinds : kinds;
    return verify_reduction_output(out, inst, check, limits);
}

namespace {

void account(HarnessResult& result, VerifyReport&& report) {
    ++result.instances;
    bool bad = false;
    for (const KindReport& k : report.kinds) {
        if (k.inconclusive) {
            ++result.inconclusive;
            bad = true;
        } else if (k.equivalent) {
            ++result.equivalent;
        } else {
            ++result.inequivalent;
            if (!report.flagged) bad = true;
        }
    }
    if (bad) result.failures.push_back(std::move(report));
}

template <typename F>
void for_each_setcover(const HarnessLimits& lim, const F& f) {
    for (std::size_t ns = 0; ns <= lim.max_sets; ++ns)
        for (std::size_t nu = 0; nu <= lim.max_universe; ++nu)
            for (std::size_t k = 0; k <= lim.max_k; ++k) {
                const std::size_t cells = ns * nu;
                for (std::size_t mask = 0; mask < (std::size_t(1) << cells); ++mask) {
                    SetCoverInstance inst;
                    for (std::size_t s = 0; s < ns; ++s)
                        inst.sets.push_back("s" + std::to_string(s + 1));
                    for (std::size_t u = 0; u < nu; ++u)
                        inst.universe.push_back("u" + std::to_string(u + 1));
                    for (std::size_t s = 0; s < ns; ++s)
                        for (std::size_t u = 0; u < nu; ++u)
                            if ((mask >> (s * nu + u)) & 1)
                                inst.edges.emplace_back(inst.sets[s], inst.universe[u]);
                    inst.k = k;
                    f(SourceInstance(std::move(inst)));
                }
            }
}

template <typename F>
void for_each_vertexcover(const HarnessLimits& lim, const F& f) {
    for (int n = 1; n <= static_cast<int>(lim.max_vertices); ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        for (std::size_t mask = 0; mask < (std::size_t(1) << pairs.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1) edges.push_back(pairs[i]);
            for (std::size_t k = 0; k <= lim.max_k; ++k) {
                VertexCoverInstance inst;
                inst.graph = make_graph(n, edges);
                inst.k = k;
                f(SourceInstance(std::move(inst)));
            }
        }
    }
}

template <typename F>
void for_each_majority(const HarnessLimits& lim, const F& f) {
    for (std::size_t len = 2; len <= lim.max_bits; len += 2) {
        for (std::size_t mask = 0; mask < (std::size_t(1) << len); ++mask) {
            MajorityInstance inst;
            for (std::size_t i = 0; i < len; ++i)
                inst.bits.push_back((mask >> i) & 1 ? '1' : '0');
            f(SourceInstance(std::move(inst)));
        }
    }
}

}  // namespace

HarnessResult run_verify_harness(const std::string& name, const HarnessLimits& limits,
                                 bool directed, int radius, SolveLimits solve_limits,
                                 const std::function<void(const VerifyReport&)>& on_report) {
    const auto canonical = canonical_reduction_name(name);
    if (!canonical) throw std::invalid_argument("unknown reduction: " + name);
    const ReductionSpec* spec = nullptr;
    for (const ReductionSpec& s : reduction_registry())
        if (s.name == *canonical) spec = &s;

    HarnessResult result;
    result.reduction = *canonical;

    auto handle = [&](const SourceInstance& inst) {
        ReductionOutput out = build_reduction(*canonical, inst, directed, radius);
        result.flagged = out.flagged;
        VerifyReport report = verify_reduction_output(out, inst, out.kinds, solve_limits);
        if (on_report) on_report(report);
        account(result, std::move(report));
    };

    switch (spec->source) {
        case ReductionSpec::SourceKind::setcover: for_each_setcover(limits, handle); break;
        case ReductionSpec::SourceKind::vertexcover: for_each_vertexcover(limits, handle); break;
        case ReductionSpec::SourceKind::majority: for_each_majority(limits, handle); break;
    }
    return result;
}

}  // namespace relmod
