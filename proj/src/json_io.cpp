#include "relmod/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace relmod {

Structure structure_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("universe") || !j.contains("relations"))
        throw std::invalid_argument("structure JSON needs 'universe' and 'relations'");
    const int n = j.at("universe").get<int>();
    std::vector<Symbol> symbols;
    std::vector<std::set<Tuple>> rels;
    for (const auto& [name, body] : j.at("relations").items()) {
        const int arity = body.at("arity").get<int>();
        symbols.push_back({name, arity});
        std::set<Tuple> tuples;
        for (const auto& t : body.at("tuples")) tuples.insert(t.get<Tuple>());
        rels.push_back(std::move(tuples));
    }
    return Structure(Vocabulary(std::move(symbols)), n, std::move(rels));
}

Json structure_to_json(const Structure& s) {
    Json rels = Json::object();
    for (std::size_t i = 0; i < s.vocabulary().size(); ++i) {
        const Symbol& sym = s.vocabulary().symbol(i);
        Json tuples = Json::array();
        for (const Tuple& t : s.relation(i)) tuples.push_back(t);
        rels[sym.name] = Json{{"arity", sym.arity}, {"tuples", std::move(tuples)}};
    }
    return Json{{"universe", s.universe_size()}, {"relations", std::move(rels)}};
}

Modulator modulator_from_json(const Json& j, const Vocabulary& voc) {
    Modulator m = Modulator::empty_for(voc);
    for (const auto& [name, tuples] : j.at("relations").items()) {
        const auto idx = voc.index_of(name);
        if (!idx) throw std::invalid_argument("modulator symbol " + name + " unknown");
        for (const auto& t : tuples) m.sets[*idx].insert(t.get<Tuple>());
    }
    return m;
}

Json modulator_to_json(const Modulator& m, const Vocabulary& voc) {
    Json rels = Json::object();
    for (std::size_t i = 0; i < m.sets.size(); ++i) {
        if (m.sets[i].empty()) continue;
        Json tuples = Json::array();
        for (const Tuple& t : m.sets[i]) tuples.push_back(t);
        rels[voc.symbol(i).name] = std::move(tuples);
    }
    return Json{{"relations", std::move(rels)}};
}

SetCoverInstance setcover_from_json(const Json& j) {
    SetCoverInstance i;
    i.sets = j.at("sets").get<std::vector<std::string>>();
    i.universe = j.at("universe").get<std::vector<std::string>>();
    for (const auto& e : j.at("edges"))
        i.edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    i.k = j.at("k").get<std::size_t>();
    i.check();
    return i;
}

Json setcover_to_json(const SetCoverInstance& i) {
    Json edges = Json::array();
    for (const auto& [a, b] : i.edges) edges.push_back(Json::array({a, b}));
    return Json{{"sets", i.sets}, {"universe", i.universe}, {"edges", std::move(edges)},
                {"k", i.k}};
}

VertexCoverInstance vertexcover_from_json(const Json& j) {
    VertexCoverInstance i;
    i.graph = structure_from_json(j);
    i.k = j.at("k").get<std::size_t>();
    i.check();
    return i;
}

Json vertexcover_to_json(const VertexCoverInstance& i) {
    Json j = structure_to_json(i.graph);
    j["k"] = i.k;
    return j;
}

MajorityInstance majority_from_json(const Json& j) {
    MajorityInstance i;
    i.bits = j.at("bits").get<std::string>();
    i.check();
    return i;
}

Json majority_to_json(const MajorityInstance& i) { return Json{{"bits", i.bits}}; }

SourceInstance source_from_json(const Json& j, ReductionSpec::SourceKind kind) {
    switch (kind) {
        case ReductionSpec::SourceKind::setcover: return setcover_from_json(j);
        case ReductionSpec::SourceKind::vertexcover: return vertexcover_from_json(j);
        case ReductionSpec::SourceKind::majority: return majority_from_json(j);
    }
    throw std::logic_error("unknown source kind");
}

std::string source_digest(const SourceInstance& inst) {
    Json j;
    if (const auto* sc = std::get_if<SetCoverInstance>(&inst))
        j = setcover_to_json(*sc);
    else if (const auto* vc = std::get_if<VertexCoverInstance>(&inst))
        j = vertexcover_to_json(*vc);
    else
        j = majority_to_json(std::get<MajorityInstance>(inst));
    const std::string dump = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

void write_reduction_output(const ReductionOutput& out, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    {
        std::ofstream f(fs::path(dir) / "structure.json");
        f << structure_to_json(out.structure).dump(2) << "\n";
    }
    {
        std::ofstream f(fs::path(dir) / "formula.fo");
        f << print_formula(out.formula) << "\n";
    }
    Json kinds = Json::array();
    for (OperationKind k : out.kinds) kinds.push_back(operation_kind_name(k));
    Json meta{{"reduction", out.reduction},
              {"k", out.budget},
              {"kinds", std::move(kinds)},
              {"structure_type", structure_type_name(out.structure_type)},
              {"directed", out.directed},
              {"flagged", out.flagged},
              {"source_digest", out.source_digest},
              {"anchor", out.anchor},
              {"vertices", out.structure.universe_size()},
              {"labels", out.labels}};
    std::ofstream f(fs::path(dir) / "meta.json");
    f << meta.dump(2) << "\n";
}

Json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    Json j;
    f >> j;
    return j;
}

}  // namespace relmod
