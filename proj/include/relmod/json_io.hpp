#pragma once

#include <string>

#include <json.hpp>

#include "relmod/modulator.hpp"
#include "relmod/reductions.hpp"
#include "relmod/structure.hpp"

namespace relmod {

using Json = nlohmann::ordered_json;

// {"universe": n, "relations": {"E": {"arity": 2, "tuples": [[0,1],[1,0]]}}}
// Symbol order follows the file.
Structure structure_from_json(const Json& j);
Json structure_to_json(const Structure& s);

// {"relations": {"E": [[0,1],[1,0]]}}
Modulator modulator_from_json(const Json& j, const Vocabulary& voc);
Json modulator_to_json(const Modulator& m, const Vocabulary& voc);

// {"sets": ["s1"], "universe": ["u"], "edges": [["s1","u"]], "k": 1}
SetCoverInstance setcover_from_json(const Json& j);
Json setcover_to_json(const SetCoverInstance& i);

// structure JSON plus a "k" field
VertexCoverInstance vertexcover_from_json(const Json& j);
Json vertexcover_to_json(const VertexCoverInstance& i);

// {"bits": "1100"}
MajorityInstance majority_from_json(const Json& j);
Json majority_to_json(const MajorityInstance& i);

SourceInstance source_from_json(const Json& j, ReductionSpec::SourceKind kind);

std::string source_digest(const SourceInstance& inst);

// Writes structure.json, formula.fo, and meta.json into dir.
void write_reduction_output(const ReductionOutput& out, const std::string& dir);

Json load_json_file(const std::string& path);

}  // namespace relmod
