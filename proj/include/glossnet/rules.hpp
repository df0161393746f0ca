#ifndef GLOSSNET_RULES_HPP
#define GLOSSNET_RULES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "glossnet/frame.hpp"
#include "glossnet/types.hpp"

namespace glossnet {

/// Entry-tagging rule. `head_match` / `modifier_match` are a lemma, a
/// "@class" reference or "*" (modifier also "-" for "no condition").
/// The emitted sequence is extended by matched modifier tags, then by the
/// suffix (e.g. the PLUS of the grow-verb family).
struct EntityTagRule {
    int priority = 0;
    WordCategory category = WordCategory::Verb;
    std::string head_match = "*";
    std::string modifier_match = "-";
    TagSequence emit;
    TagSequence suffix;
    long line = 0; // rule-file line, for diagnostics

    /// Non-wildcard match components; higher is more specific.
    int specificity() const;
};

/// One surface pattern of a functor family: optional preposition before
/// the content word and/or after it ("in:grado+di", "caratterizzato+da",
/// "uso").
struct FunctorPattern {
    std::string pre_prep;
    std::string word;
    std::string post_prep;

    std::string str() const;
    static FunctorPattern parse(const std::string& text);
};

/// Family of semantically empty defining expressions. The family only
/// mediates `yields`; its lexical material is deleted by the rewrite.
/// When `quality_alt` is set the yielded name switches to it if the
/// dependent carries a QUALITY tag (the "caratterizzato da" split).
struct FunctorFamily {
    std::string name;
    RelationKind yields;
    std::optional<RelationName> quality_alt;
    std::vector<FunctorPattern> patterns;
};

/// Preposition senses are keyed by role so the shipped rules can map
/// English surface forms onto the same disambiguation logic.
enum class PrepRole : std::uint8_t { Con, Per, Di, A, Da };

PrepRole prep_role_from_string(const std::string& s);

struct VariantGroup {
    std::string name;
    std::vector<std::string> lemmas;
    TagSequence tags; // empty when the group is only a frequency-summing set
};

/// The full declarative rule inventory, loaded from one UTF-8 rule file.
/// Immutable after load.
struct RuleSet {
    std::map<std::string, TagSequence> seeds; // seed primitives, incl. group members
    std::vector<VariantGroup> groups;
    std::map<std::string, std::set<std::string>> wordclasses;
    std::vector<EntityTagRule> tag_rules;
    std::map<std::string, TagSequence> modifier_tags;
    std::vector<FunctorFamily> functor_families;
    std::set<std::string> relative_markers;
    std::set<std::string> quantifiers;
    std::set<std::string> part_words;
    std::set<std::string> denom_words;
    std::set<std::string> type_words;
    std::set<std::string> act_words;
    std::set<std::string> belong_verbs;
    std::set<std::string> skip_words;
    std::map<std::string, PrepRole> prep_roles;

    bool in_class(const std::string& cls, const std::string& lemma) const;
    /// Match test for rule keys: lemma, "@class" or "*".
    bool key_matches(const std::string& key, const std::string& lemma) const;

    const TagSequence* seed_tags(const std::string& lemma) const;
    const VariantGroup* group_of(const std::string& lemma) const;
    const FunctorFamily* match_functor(const std::string& lemma,
                                       const std::string& pre_prep,
                                       const std::string& post_prep) const;
    /// True when any family pattern uses this content word, whatever its
    /// prepositional frame.
    bool is_functor_word(const std::string& lemma) const;
    std::optional<PrepRole> prep_role(const std::string& lemma) const;
};

RuleSet load_rules(const std::string& path);

} // namespace glossnet

#endif
