#include <doctest.h>

#include <map>

#include "relmod/classifier.hpp"

using namespace relmod;

// The landscape for every pattern of length at most three, pinned by hand.
// gen = undirected/directed/arbitrary structures, which share one row.

namespace {

struct GoldenRow {
    const char* pattern;
    const char* gen_classical;
    const char* gen_param;
    const char* basic_classical;
    const char* basic_param;
    const char* mon_classical;
};

const GoldenRow kGolden[] = {
    // pattern  gen classical        gen param     basic classical      basic param   mon classical
    {"",    "AC0",               "ParaAC0up", "AC0",               "ParaAC0up", "AC0"},
    {"a",   "TC0_not_AC0",       "ParaAC0up", "AC0",               "ParaAC0up", "TC0_not_AC0"},
    {"e",   "AC0",               "ParaAC0up", "AC0",               "ParaAC0up", "AC0"},
    {"aa",  "NPhard_containing", "ParaAC0up", "TC0_not_AC0",       "ParaAC0up", "TC0_not_AC0"},
    {"ae",  "NPhard_containing", "W2hard_containing", "TC0_not_AC0", "ParaAC0up", "TC0_not_AC0"},
    {"ea",  "TC0_not_AC0",       "ParaAC0up", "TC0_not_AC0",       "ParaAC0up", "TC0_not_AC0"},
    {"ee",  "AC0",               "ParaAC0up", "AC0",               "ParaAC0up", "AC0"},
    {"aaa", "NPhard_containing", "ParaAC0up", "NPhard_containing", "ParaAC0up", "TC0_not_AC0"},
    {"aae", "NPhard_containing", "W2hard_containing", "NPhard_containing", "W2hard_containing", "TC0_not_AC0"},
    {"aea", "NPhard_containing", "W2hard_containing", "NPhard_containing", "W2hard_containing", "TC0_not_AC0"},
    {"aee", "NPhard_containing", "W2hard_containing", "NPhard_containing", "W2hard_containing", "TC0_not_AC0"},
    {"eaa", "NPhard_containing", "ParaAC0up", "NPhard_containing", "ParaAC0up", "TC0_not_AC0"},
    {"eae", "NPhard_containing", "W2hard_containing", "NPhard_containing", "W2hard_containing", "TC0_not_AC0"},
    {"eea", "TC0_not_AC0",       "ParaAC0up", "TC0_not_AC0",       "ParaAC0up", "TC0_not_AC0"},
    {"eee", "AC0",               "ParaAC0up", "AC0",               "ParaAC0up", "AC0"},
};

std::string classical(StructureType t, const char* p) {
    return bucket_name(classify_classical(t, OperationKind::edit, Pattern(p)).bucket);
}

std::string parameterized(StructureType t, const char* p) {
    return bucket_name(classify_parameterized(t, OperationKind::edit, Pattern(p)).bucket);
}

}  // namespace

TEST_CASE("golden landscape slice for patterns of length at most three") {
    for (const GoldenRow& row : kGolden) {
        CAPTURE(row.pattern);
        for (StructureType t :
             {StructureType::arb, StructureType::dir, StructureType::undir}) {
            CHECK(classical(t, row.pattern) == row.gen_classical);
            CHECK(parameterized(t, row.pattern) == row.gen_param);
        }
        CHECK(classical(StructureType::basic, row.pattern) == row.basic_classical);
        CHECK(parameterized(StructureType::basic, row.pattern) == row.basic_param);
        CHECK(classical(StructureType::mon, row.pattern) == row.mon_classical);
        CHECK(parameterized(StructureType::mon, row.pattern) == std::string("ParaAC0"));
    }
}
