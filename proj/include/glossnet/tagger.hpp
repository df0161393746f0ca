#ifndef GLOSSNET_TAGGER_HPP
#define GLOSSNET_TAGGER_HPP

#include <optional>
#include <string>
#include <vector>

#include "glossnet/frame.hpp"
#include "glossnet/lexicon.hpp"
#include "glossnet/primitives.hpp"
#include "glossnet/rules.hpp"

namespace glossnet {

// ---------------------------------------------------------------------------
// Gloss classification
// ---------------------------------------------------------------------------

enum class GlossStructure : std::uint8_t { Synonymy, CategorySwitch, Hypernymy };

/// Noun gloss sub-classes; None for non-noun entries or synonym glosses.
enum class NounSubClass : std::uint8_t { None, A, B, C, D, E, F, G, GToken };

std::string to_string(GlossStructure s);
std::string to_string(NounSubClass s);

struct GlossClass {
    GlossStructure structure = GlossStructure::Hypernymy;
    NounSubClass sub = NounSubClass::None;
    bool low_confidence = false;

    std::string str() const; // "HYPERNYMY/b", "SYNONYMY"
};

GlossClass classify_gloss(const DependencyTree& t, WordCategory category,
                          const RuleSet& rules);

// ---------------------------------------------------------------------------
// Entry tagging
// ---------------------------------------------------------------------------

TagSequence default_tags(WordCategory c);

/// Assigns the entry's tag sequence from the highest-priority matching rule,
/// extended by hypernym-modifier tags and the rule suffix. Inventory heads
/// fall back to THING/ACTION + the head's tags; a category default always
/// exists, so tagging never fails.
TagSequence tag_entry(const MeaningEntry& e, const PrimitiveInventory& inv,
                      const RuleSet& rules);

/// Tags available for a gloss-internal unit: inventory first, then the tag
/// of an unambiguous lexicon entry, then the adverb default. nullopt when
/// nothing is known (that absence is what keeps relations ambiguous).
std::optional<TagSequence> unit_tags(const std::string& lemma, WordCategory category,
                                     const PrimitiveInventory& inv, const RuleSet& rules,
                                     const Lexicon* lex);

// ---------------------------------------------------------------------------
// Hypernym attribute raising
// ---------------------------------------------------------------------------

/// Raises the hypernym's tag sequence onto the frame lemma (terminal twins
/// of TOKEN_OF/REFERS_TO links) and retargets the hypernym node's own
/// dependents to the lemma; adverbial qualities come back wrapped in
/// MANNER. Original triples are preserved; additions carry RAISED.
/// Tag source: the primitive inventory, else the hypernym frame's terminal
/// TOKEN_OF. A hypernym with neither a frame nor inventory tags raises
/// nothing and records a warning.
/// `only_hypernym` restricts the call to one link lemma; by default the
/// call covers hyper_frame's lemma, or every link when hyper_frame is
/// absent. Returns the number of added triples; idempotent.
int raise_hypernym_attributes(SemanticFrame& frame, const SemanticFrame* hyper_frame,
                              const PrimitiveInventory& inv,
                              std::vector<std::string>* warnings = nullptr,
                              const std::string& only_hypernym = "");

} // namespace glossnet

#endif
