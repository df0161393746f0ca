#ifndef GLOSSNET_GOLDEN_HPP
#define GLOSSNET_GOLDEN_HPP

#include <string>
#include <vector>

#include "glossnet/net.hpp"

namespace glossnet {

/// Expected frame content for one meaning. `source` distinguishes triples
/// verbatim from the published frame listings from reconstructed ones.
struct GoldenFrame {
    std::string name;
    MeaningId meaning;
    bool exact = false; // exact: triple-set equality; else containment
    enum class Scope { Direct, DirectRaised, Any } scope = Scope::Any;
    std::string source;
    std::vector<RelationTriple> expected;
};

/// Golden file grammar, line-oriented:
///   golden <name> <meaning-id> <exact|contains> <direct|direct+raised|any> <source>
///   <subject> TAB <relation> TAB <object>
///   ...
///   end
std::vector<GoldenFrame> load_goldens(const std::string& path);

struct GoldenDiff {
    std::vector<std::string> missing;    // expected but absent
    std::vector<std::string> unexpected; // present but not expected (exact only)
};

struct GoldenItemReport {
    std::string name;
    bool passed = false;
    std::string message;
    GoldenDiff diff;
};

struct GoldenReport {
    std::vector<GoldenItemReport> items;
    bool all_passed = true;

    std::string str() const; // one line per golden plus diffs for failures
};

GoldenReport verify_golden(const SemanticNet& net,
                           const std::vector<GoldenFrame>& goldens);

} // namespace glossnet

#endif
