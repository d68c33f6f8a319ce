#include "relmod/classifier.hpp"

#include <algorithm>

namespace relmod {

const char* setting_name(Setting s) {
    return s == Setting::classical ? "classical" : "parameterized";
}

const char* bucket_name(Bucket b) {
    switch (b) {
        case Bucket::AC0: return "AC0";
        case Bucket::TC0_not_AC0: return "TC0_not_AC0";
        case Bucket::NPhard_containing: return "NPhard_containing";
        case Bucket::ParaAC0: return "ParaAC0";
        case Bucket::ParaAC0up: return "ParaAC0up";
        case Bucket::W2hard_containing: return "W2hard_containing";
    }
    return "?";
}

bool pattern_in_e_star(const Pattern& p) {
    return p.word.find('a') == std::string::npos;
}

bool pattern_in_e_star_a(const Pattern& p) {
    const auto first = p.word.find('a');
    if (first == std::string::npos) return true;
    return first == p.word.size() - 1;
}

bool pattern_in_e_star_a_star(const Pattern& p) {
    // no 'e' after an 'a'
    const auto first_a = p.word.find('a');
    if (first_a == std::string::npos) return true;
    return p.word.find('e', first_a) == std::string::npos;
}

bool pattern_in_a_star(const Pattern& p) {
    return p.word.find('e') == std::string::npos;
}

namespace {

bool contains(const Pattern& p, const char* sub) {
    return is_subsequence(Pattern(sub), p);
}

// first pattern of `subs` that embeds into p, for the justification
std::string trigger(const Pattern& p, std::initializer_list<const char*> subs) {
    for (const char* s : subs)
        if (contains(p, s)) return s;
    return "";
}

ComplexityVerdict verdict(Setting s, Bucket b, std::vector<VerdictRule> rules) {
    return {s, b, std::move(rules)};
}

void note_a_star_open(ComplexityVerdict& v) {
    v.rules.push_back({"p <= a*",
                       "search tree gives the bound; whether a* drops to the "
                       "constant-depth class is open"});
}

}  // namespace

ComplexityVerdict classify_classical(StructureType t, OperationKind, const Pattern& p) {
    const Setting s = Setting::classical;
    if (t == StructureType::mon) {
        if (pattern_in_e_star(p))
            return verdict(s, Bucket::AC0, {{"p <= e*", "constant-size certificate check"}});
        return verdict(s, Bucket::TC0_not_AC0,
                       {{"a <= p", "majority lower bound; type-histogram counting upper bound"}});
    }
    if (t == StructureType::basic) {
        if (pattern_in_e_star(p))
            return verdict(s, Bucket::AC0, {{"p <= e*", "constant-size certificate check"}});
        if (p.word == "a")
            return verdict(s, Bucket::AC0,
                           {{"p <= a", "one universal variable is trivial without loops"}});
        const bool upper = pattern_in_e_star_a(p) || is_subsequence(p, Pattern("aa")) ||
                           is_subsequence(p, Pattern("ae"));
        if (upper) {
            std::string low = trigger(p, {"ea", "ae", "aa"});
            return verdict(s, Bucket::TC0_not_AC0,
                           {{low + " <= p <= e*a | aa | ae",
                             "majority lower bound; vertex-counting upper bound"}});
        }
        std::string low = trigger(p, {"aea", "aee", "aae", "eae", "eaa", "aaa"});
        return verdict(s, Bucket::NPhard_containing,
                       {{low + " <= p",
                         low == "aaa" ? "cluster editing is expressible"
                                      : (low == "eaa" ? "vertex-cover gadget"
                                                      : "set-cover gadget")}});
    }
    // arb, dir, undir share one landscape
    if (pattern_in_e_star(p))
        return verdict(s, Bucket::AC0, {{"p <= e*", "constant-size certificate check"}});
    if (pattern_in_e_star_a(p))
        return verdict(s, Bucket::TC0_not_AC0,
                       {{"a <= p <= e*a",
                         "majority lower bound; independent local repairs upper bound"}});
    std::string low = trigger(p, {"aa", "ae"});
    return verdict(s, Bucket::NPhard_containing,
                   {{low + " <= p", low == "aa" ? "vertex-cover gadget" : "set-cover gadget"}});
}

ComplexityVerdict classify_parameterized(StructureType t, OperationKind, const Pattern& p) {
    const Setting s = Setting::parameterized;
    if (t == StructureType::mon)
        return verdict(s, Bucket::ParaAC0,
                       {{"any p", "type-histogram enumeration, polynomially many candidates"}});
    if (t == StructureType::basic) {
        if (pattern_in_e_star_a_star(p) || is_subsequence(p, Pattern("ae"))) {
            ComplexityVerdict v =
                verdict(s, Bucket::ParaAC0up,
                        {{"p <= e*a* or p <= ae",
                          "bounded search tree; ae collapses to vertex counting"}});
            if (!p.empty() && pattern_in_a_star(p)) note_a_star_open(v);
            return v;
        }
        std::string low = trigger(p, {"aea", "aee", "aae", "eae"});
        return verdict(s, Bucket::W2hard_containing, {{low + " <= p", "set-cover gadget"}});
    }
    if (pattern_in_e_star_a_star(p)) {
        ComplexityVerdict v =
            verdict(s, Bucket::ParaAC0up, {{"p <= e*a*", "bounded search tree"}});
        if (!p.empty() && pattern_in_a_star(p)) note_a_star_open(v);
        return v;
    }
    return verdict(s, Bucket::W2hard_containing, {{"ae <= p", "set-cover gadget"}});
}

}  // namespace relmod
