#ifndef GLOSSNET_PRIMITIVES_HPP
#define GLOSSNET_PRIMITIVES_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glossnet/lexicon.hpp"
#include "glossnet/rules.hpp"
#include "glossnet/types.hpp"

namespace glossnet {

class SemanticNet;

/// Gloss-head frequency counts (criterion i of primitive discovery).
struct HeadFrequencyTable {
    std::map<std::string, long> rows;
    long threshold = 200;

    long total() const;
    long count(const std::string& lemma) const;
};

struct HeadCountReport {
    std::vector<std::string> errors; // per-entry problems; entries skipped
    long processed = 0;
    long causative_fare = 0; // "fare" heads with an infinitive-verb object
};

/// Counts the gloss-head lemma of every entry. Pronouns and verbs count
/// like any lemma. Invalid trees are reported and skipped, never fatal.
HeadFrequencyTable count_heads(const Lexicon& lex, HeadCountReport* report = nullptr);

/// Terminal-tag inventory of dictionary-specific primitives.
struct PrimitiveInventory {
    std::map<std::string, TagSequence> entries;
    std::vector<VariantGroup> variant_groups;
    /// Lemmas admitted by frequency + stop-status that still need a manual
    /// tag assignment (no variant group supplied one).
    std::set<std::string> pending;

    bool contains(const std::string& lemma) const;
    const TagSequence* lookup(const std::string& lemma) const;
};

PrimitiveInventory inventory_from_rules(const RuleSet& rules);

/// Criterion ii: true iff every hypernym walk upward from any meaning of
/// `lemma` ends at the lemma itself within `depth_limit` — the lemma has no
/// outgoing lexical TOKEN_OF, or only cyclic ones. Walks follow word links
/// of lexical categories (NOUN/VERB/ADJ/ADV); pronoun links terminate.
bool stop_status(const SemanticNet& net, const std::string& lemma, int depth_limit);

/// Frequency + stop-status admission. Variant-group member counts are
/// summed before thresholding; admitted groups enter with their shared
/// tag sequence, single lemmas without one land in `pending`.
PrimitiveInventory build_inventory(const HeadFrequencyTable& table,
                                   const PrimitiveInventory& seeds,
                                   const std::function<bool(const std::string&)>& stop);

} // namespace glossnet

#endif
