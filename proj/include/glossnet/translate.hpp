#ifndef GLOSSNET_TRANSLATE_HPP
#define GLOSSNET_TRANSLATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glossnet/frame.hpp"
#include "glossnet/lexicon.hpp"
#include "glossnet/primitives.hpp"
#include "glossnet/rules.hpp"

namespace glossnet {

struct TranslateDiagnostics {
    std::vector<std::string> warnings;
    int ambiguous_relations = 0;
    int skipped_edges = 0;
    bool low_confidence_class = false;
};

struct TranslateContext {
    const RuleSet* rules = nullptr;
    const PrimitiveInventory* inventory = nullptr;
    const Lexicon* lexicon = nullptr; // optional, refines unit tags
};

/// Preposition sense selection. `head_lemma` matters only for the "di"
/// role (denomination vs part-word vs plain specifier). Unknown
/// prepositions resolve to RELATION_TO with `warned` set.
RelationSlot tag_preposition(const RuleSet& rules, const std::string& prep,
                             WordCategory head_category, const std::string& head_lemma,
                             const std::optional<TagSequence>& dependent_tag,
                             bool dependent_infinitive = false, bool* warned = nullptr);

/// Refines a bare-CHANGE verb tag from the dependent's terminal tag:
/// PLACE evidence appends PLACE, QUALITY/DIMENSION evidence appends
/// QUALITY, and with no evidence the ambiguity is retained unchanged.
TagSequence disambiguate_change_verb(const TagSequence& verb_tags,
                                     const std::optional<TagSequence>& dependent_tag);

/// Translates a validated gloss tree into a Semantic Frame: every tree
/// edge maps to zero or more DIRECT triples per the rule set. Functor
/// material keeps its full lexical form (ATTRIBUTION-wrapped triples);
/// the functor engine rewrites it afterwards.
SemanticFrame translate(const MeaningEntry& e, const TranslateContext& ctx,
                        TranslateDiagnostics* diag = nullptr);

/// Spec surface taking precomputed per-node tags (index -> tags); the
/// context form derives them via unit_tags.
SemanticFrame translate(const MeaningEntry& e,
                        const std::map<int, TagSequence>& node_tags,
                        const RuleSet& rules, const PrimitiveInventory& inv,
                        TranslateDiagnostics* diag = nullptr);

} // namespace glossnet

#endif
