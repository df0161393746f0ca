#ifndef GLOSSNET_FUNCTORS_HPP
#define GLOSSNET_FUNCTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "glossnet/frame.hpp"
#include "glossnet/rules.hpp"

namespace glossnet {

/// One maximal run of attribution levels linked through functor units;
/// adjacent levels share the linking unit.
struct AttributionChain {
    std::vector<RelationTriple> levels;

    bool empty() const { return levels.empty(); }
    std::string str() const; // "I  ATTRIBUTION,TOKEN_OF(vertebrate, type)" lines
};

/// Snapshot after one rewrite step. Slots track the initial levels: a
/// rewritten level keeps its slot, a deleted one goes empty with the step
/// action printed in its place.
struct TraceState {
    std::string action; // "raising and deletion", "raising", "deletion"
    int action_slot = -1;
    std::vector<std::optional<RelationTriple>> slots;

    std::size_t live_count() const;
};

struct ChainTrace {
    AttributionChain initial;
    std::vector<TraceState> states;
    std::vector<RelationTriple> final_levels;
    bool aborted = false;
    std::string diagnostic;

    std::string str() const; // full level-by-level layout
};

struct RewriteTrace {
    std::vector<ChainTrace> chains;

    std::string str() const;
};

/// Finds every maximal attribution chain whose intermediate units are
/// functor-family words. Chains sharing a unit are merged; levels keep
/// frame order.
std::vector<AttributionChain> detect_functors(const SemanticFrame& frame,
                                              const RuleSet& rules);

/// Bottom-up rewrite, deepest functor first: the functor's content unit
/// replaces the functor in its parent triple, the functor's own triple is
/// deleted, ATTRIBUTION wrappers dissolve into the yielded kind, and the
/// last step retargets properties left on a dissolved head functor onto
/// the lemma. A chain that references an already-rewritten triple aborts
/// alone (frame unchanged for it) with a diagnostic.
RewriteTrace raise_and_delete(SemanticFrame& frame,
                              const std::vector<AttributionChain>& chains,
                              const RuleSet& rules);

/// Marks relative-value qualifiers (normale, spesso, ...): a quality triple
/// whose object is a marker word is flagged instead of standing as a plain
/// quality; a marker hanging off another quality collapses onto it. A
/// marker in gloss-head position is left alone with a warning. Returns the
/// number of affected triples.
int mark_relative_value(SemanticFrame& frame, const RuleSet& rules,
                        std::vector<std::string>* warnings = nullptr);

} // namespace glossnet

#endif
