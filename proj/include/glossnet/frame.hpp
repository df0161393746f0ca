#ifndef GLOSSNET_FRAME_HPP
#define GLOSSNET_FRAME_HPP

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "glossnet/types.hpp"

namespace glossnet {

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

enum class RelationName : std::uint8_t {
    TokenOf,
    HasToken,
    HasTag,
    HasQuality,
    QualityOf,
    HasPart,
    PartOf,
    HasAgnt,
    AgntOf,
    HasObj,
    ObjOf,
    HasSubj,
    HasInstrument,
    HasManner,
    HasFunction,
    HasCause,
    HasPlace,
    PlaceOf,
    HasSpace,
    HasSpec,
    RefersTo,
    RelationTo,
    Attribution,
    Existence,
};

std::string to_string(RelationName r);
RelationName relation_name_from_string(const std::string& s);

/// Inverse partner on the invertible subset, nullopt elsewhere. Total both
/// ways: inverse(inverse(r)) == r whenever defined.
std::optional<RelationName> inverse_of(RelationName r);

/// Relation modifiers. NEG renders as a prefix, the others as suffixes,
/// matching the layouts "NEG,HAS_QUALITY", "AGNT_OF,POTENTIAL" and
/// "HAS_PART,TOKEN".
enum class RelMod : std::uint8_t { Neg, Potential, Token };

struct RelationKind {
    RelationName name = RelationName::TokenOf;
    std::set<RelMod> modifiers;
    /// Attribution wrapper: the triple still carries its full lexical
    /// functor and renders as "ATTRIBUTION,<name>"; the rewrite dissolves it.
    bool attribution = false;

    RelationKind() = default;
    RelationKind(RelationName n) : name(n) {} // NOLINT: implicit by design
    RelationKind(RelationName n, std::set<RelMod> mods, bool attr = false)
        : name(n), modifiers(std::move(mods)), attribution(attr) {}

    bool has(RelMod m) const { return modifiers.count(m) != 0; }
    auto operator<=>(const RelationKind&) const = default;

    std::string str() const;
    static RelationKind parse(const std::string& text);
};

/// Unresolved relation: candidates kept until the (out-of-scope) relevance
/// phase picks one. Never a singleton.
struct AmbiguousRelation {
    std::set<RelationName> candidates;

    auto operator<=>(const AmbiguousRelation&) const = default;

    std::string str() const; // "HAS_FUNCTION|HAS_CAUSE|RELATION_TO"
};

/// A triple's relation slot: resolved kind or candidate set.
struct RelationSlot {
    RelationKind kind;
    std::optional<AmbiguousRelation> ambiguous;

    RelationSlot() = default;
    RelationSlot(RelationKind k) : kind(std::move(k)) {} // NOLINT
    RelationSlot(RelationName n) : kind(n) {}            // NOLINT
    RelationSlot(AmbiguousRelation a) : ambiguous(std::move(a)) {} // NOLINT

    bool is_ambiguous() const { return ambiguous.has_value(); }
    auto operator<=>(const RelationSlot&) const = default;

    std::string str() const;
    static RelationSlot parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// Semantic units
// ---------------------------------------------------------------------------

enum class UnitKind : std::uint8_t {
    TerminalTag, // primitive, analysis ends here
    MeaningLink, // resolved link to a specific meaning
    WordLink,    // unresolved link to a word
    HeadVar,     // "$head": the modified head of an adjective at use-site
};

struct SemanticUnit {
    UnitKind kind = UnitKind::WordLink;
    TagSequence tags;      // TerminalTag
    MeaningId meaning;     // MeaningLink
    std::string lemma;     // WordLink
    WordCategory category = WordCategory::Other; // WordLink
    bool reflexive = false;                      // WordLink
    std::optional<Tag> wrap; // role wrapper, e.g. MANNER(veloce)

    static SemanticUnit terminal(TagSequence t);
    static SemanticUnit meaning_link(MeaningId id);
    static SemanticUnit word(std::string lemma, WordCategory cat, bool refl = false);
    static SemanticUnit head_var();

    bool is_terminal() const { return kind == UnitKind::TerminalTag; }
    bool is_word() const { return kind == UnitKind::WordLink; }

    /// Lemma-level identity used by derivation passes ("matching is by
    /// lemma for word links"); empty for terminal tags.
    std::string link_key() const;

    auto operator<=>(const SemanticUnit&) const = default;

    // "scimmia(NOUN)", "[THING,PERSON]", "#101671.5", "$head",
    // "MANNER(veloce(ADJ))", "muovere[si](VERB)"
    std::string str() const;
    static SemanticUnit parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// Triples and frames
// ---------------------------------------------------------------------------

enum class Provenance : std::uint8_t {
    Direct,
    Raised,
    DerivedTaxonomy,
    DerivedInverse,
    DerivedRole,
    DerivedInference,
};

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct RelationTriple {
    SemanticUnit subject; // never TerminalTag
    RelationSlot relation;
    SemanticUnit object;
    Provenance provenance = Provenance::Direct;
    int subject_node = 0;  // gloss node index of the subject, 0 = lemma
    int source_node = 0;   // node that licensed the triple (DIRECT only)
    bool relative_value = false; // qualifier marked by a relative-value word

    /// Identity for set semantics: subject, relation and object only;
    /// provenance and trace fields are bookkeeping.
    std::tuple<const SemanticUnit&, const RelationSlot&, const SemanticUnit&>
    key() const {
        return {subject, relation, object};
    }

    std::string str() const; // "<subject> <relation> <object>"
};

bool same_triple(const RelationTriple& a, const RelationTriple& b);

struct SemanticFrame {
    std::string lemma;
    bool reflexive = false;
    MeaningId meaning;
    WordCategory category = WordCategory::Noun;
    std::vector<RelationTriple> triples; // ordered, duplicate-free

    SemanticUnit lemma_unit() const;

    /// Appends unless an identical (subject, relation, object) is present.
    /// Returns false on duplicates.
    bool add(RelationTriple t);
    bool contains(const RelationTriple& t) const;
};

} // namespace glossnet

#endif
