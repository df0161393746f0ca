#include "glossnet/frame.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace glossnet {

namespace {

struct RelName {
    RelationName rel;
    const char* name;
};

constexpr std::array<RelName, 24> kRelNames = {{
    {RelationName::TokenOf, "TOKEN_OF"},
    {RelationName::HasToken, "HAS_TOKEN"},
    {RelationName::HasTag, "HAS_TAG"},
    {RelationName::HasQuality, "HAS_QUALITY"},
    {RelationName::QualityOf, "QUALITY_OF"},
    {RelationName::HasPart, "HAS_PART"},
    {RelationName::PartOf, "PART_OF"},
    {RelationName::HasAgnt, "HAS_AGNT"},
    {RelationName::AgntOf, "AGNT_OF"},
    {RelationName::HasObj, "HAS_OBJ"},
    {RelationName::ObjOf, "OBJ_OF"},
    {RelationName::HasSubj, "HAS_SUBJ"},
    {RelationName::HasInstrument, "HAS_INSTRUMENT"},
    {RelationName::HasManner, "HAS_MANNER"},
    {RelationName::HasFunction, "HAS_FUNCTION"},
    {RelationName::HasCause, "HAS_CAUSE"},
    {RelationName::HasPlace, "HAS_PLACE"},
    {RelationName::PlaceOf, "PLACE_OF"},
    {RelationName::HasSpace, "HAS_SPACE"},
    {RelationName::HasSpec, "HAS_SPEC"},
    {RelationName::RefersTo, "REFERS_TO"},
    {RelationName::RelationTo, "RELATION_TO"},
    {RelationName::Attribution, "ATTRIBUTION"},
    {RelationName::Existence, "EXISTENCE"},
}};

struct InversePair {
    RelationName a;
    RelationName b;
};

constexpr std::array<InversePair, 6> kInversePairs = {{
    {RelationName::TokenOf, RelationName::HasToken},
    {RelationName::HasQuality, RelationName::QualityOf},
    {RelationName::HasPart, RelationName::PartOf},
    {RelationName::HasAgnt, RelationName::AgntOf},
    {RelationName::HasObj, RelationName::ObjOf},
    {RelationName::HasPlace, RelationName::PlaceOf},
}};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace

std::string to_string(RelationName r) {
    for (const auto& n : kRelNames)
        if (n.rel == r) return n.name;
    throw std::logic_error("unnamed relation value");
}

RelationName relation_name_from_string(const std::string& s) {
    for (const auto& n : kRelNames)
        if (s == n.name) return n.rel;
    throw std::invalid_argument("unknown relation: '" + s + "'");
}

std::optional<RelationName> inverse_of(RelationName r) {
    for (const auto& p : kInversePairs) {
        if (p.a == r) return p.b;
        if (p.b == r) return p.a;
    }
    return std::nullopt;
}

std::string RelationKind::str() const {
    std::string out;
    if (attribution) out += "ATTRIBUTION,";
    if (has(RelMod::Neg)) out += "NEG,";
    out += to_string(name);
    if (has(RelMod::Potential)) out += ",POTENTIAL";
    if (has(RelMod::Token)) out += ",TOKEN";
    return out;
}

RelationKind RelationKind::parse(const std::string& text) {
    RelationKind kind;
    bool have_name = false;
    for (const std::string& part : split(text, ',')) {
        if (part == "ATTRIBUTION" && !have_name) {
            kind.attribution = true;
        } else if (part == "NEG") {
            kind.modifiers.insert(RelMod::Neg);
        } else if (part == "POTENTIAL") {
            kind.modifiers.insert(RelMod::Potential);
        } else if (part == "TOKEN" && have_name) {
            kind.modifiers.insert(RelMod::Token);
        } else {
            kind.name = relation_name_from_string(part);
            have_name = true;
        }
    }
    if (!have_name) throw std::invalid_argument("relation without a name: '" + text + "'");
    return kind;
}

std::string AmbiguousRelation::str() const {
    std::string out;
    for (RelationName r : candidates) {
        if (!out.empty()) out += '|';
        out += to_string(r);
    }
    return out;
}

std::string RelationSlot::str() const {
    return ambiguous ? ambiguous->str() : kind.str();
}

RelationSlot RelationSlot::parse(const std::string& text) {
    if (text.find('|') != std::string::npos) {
        AmbiguousRelation amb;
        for (const std::string& part : split(text, '|'))
            amb.candidates.insert(relation_name_from_string(part));
        if (amb.candidates.size() < 2)
            throw std::invalid_argument("ambiguous relation needs >= 2 candidates");
        return RelationSlot(std::move(amb));
    }
    return RelationSlot(RelationKind::parse(text));
}

SemanticUnit SemanticUnit::terminal(TagSequence t) {
    SemanticUnit u;
    u.kind = UnitKind::TerminalTag;
    u.tags = std::move(t);
    return u;
}

SemanticUnit SemanticUnit::meaning_link(MeaningId id) {
    SemanticUnit u;
    u.kind = UnitKind::MeaningLink;
    u.meaning = id;
    return u;
}

SemanticUnit SemanticUnit::word(std::string lemma, WordCategory cat, bool refl) {
    SemanticUnit u;
    u.kind = UnitKind::WordLink;
    u.lemma = std::move(lemma);
    u.category = cat;
    u.reflexive = refl;
    return u;
}

SemanticUnit SemanticUnit::head_var() {
    SemanticUnit u;
    u.kind = UnitKind::HeadVar;
    return u;
}

std::string SemanticUnit::link_key() const {
    switch (kind) {
        case UnitKind::WordLink: return lemma;
        case UnitKind::MeaningLink: return "#" + meaning.str();
        case UnitKind::HeadVar: return "$head";
        case UnitKind::TerminalTag: return "";
    }
    return "";
}

std::string SemanticUnit::str() const {
    std::string core;
    switch (kind) {
        case UnitKind::TerminalTag:
            core = "[" + tags.str() + "]";
            break;
        case UnitKind::MeaningLink:
            core = "#" + meaning.str();
            break;
        case UnitKind::HeadVar:
            core = "$head";
            break;
        case UnitKind::WordLink:
            core = lemma;
            if (reflexive) core += "[si]";
            core += "(" + to_string(category) + ")";
            break;
    }
    if (wrap) return to_string(*wrap) + "(" + core + ")";
    return core;
}

SemanticUnit SemanticUnit::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty semantic unit");
    // Role wrapper: TAG(unit)
    if (text.back() == ')' && text.front() != '[' ) {
        const auto open = text.find('(');
        if (open != std::string::npos && open > 0) {
            const std::string head = text.substr(0, open);
            const std::string body = text.substr(open + 1, text.size() - open - 2);
            bool is_tag = true;
            try {
                Tag wrap_tag = tag_from_string(head);
                SemanticUnit inner = SemanticUnit::parse(body);
                inner.wrap = wrap_tag;
                return inner;
            } catch (const std::invalid_argument&) {
                is_tag = false;
            }
            if (!is_tag) {
                // word link: lemma(CAT), with optional [si]
                std::string lemma = head;
                bool refl = false;
                if (lemma.size() > 4 && lemma.ends_with("[si]")) {
                    lemma.resize(lemma.size() - 4);
                    refl = true;
                }
                return SemanticUnit::word(lemma, category_from_string(body), refl);
            }
        }
    }
    if (text.front() == '[' && text.back() == ']')
        return SemanticUnit::terminal(TagSequence::parse(text.substr(1, text.size() - 2)));
    if (text == "$head") return SemanticUnit::head_var();
    if (text.front() == '#') return SemanticUnit::meaning_link(MeaningId::parse(text.substr(1)));
    throw std::invalid_argument("malformed semantic unit: '" + text + "'");
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Direct: return "DIRECT";
        case Provenance::Raised: return "RAISED";
        case Provenance::DerivedTaxonomy: return "DERIVED_TAXONOMY";
        case Provenance::DerivedInverse: return "DERIVED_INVERSE";
        case Provenance::DerivedRole: return "DERIVED_ROLE";
        case Provenance::DerivedInference: return "DERIVED_INFERENCE";
    }
    return "DIRECT";
}

Provenance provenance_from_string(const std::string& s) {
    if (s == "DIRECT") return Provenance::Direct;
    if (s == "RAISED") return Provenance::Raised;
    if (s == "DERIVED_TAXONOMY") return Provenance::DerivedTaxonomy;
    if (s == "DERIVED_INVERSE") return Provenance::DerivedInverse;
    if (s == "DERIVED_ROLE") return Provenance::DerivedRole;
    if (s == "DERIVED_INFERENCE") return Provenance::DerivedInference;
    throw std::invalid_argument("unknown provenance: '" + s + "'");
}

std::string RelationTriple::str() const {
    return subject.str() + " " + relation.str() + " " + object.str();
}

bool same_triple(const RelationTriple& a, const RelationTriple& b) {
    return a.key() == b.key();
}

SemanticUnit SemanticFrame::lemma_unit() const {
    return SemanticUnit::word(lemma, category, reflexive);
}

bool SemanticFrame::add(RelationTriple t) {
    if (t.subject.is_terminal())
        throw std::invalid_argument("triple subject may not be a terminal tag");
    if (contains(t)) return false;
    triples.push_back(std::move(t));
    return true;
}

bool SemanticFrame::contains(const RelationTriple& t) const {
    return std::any_of(triples.begin(), triples.end(),
                       [&](const RelationTriple& x) { return same_triple(x, t); });
}

} // namespace glossnet
