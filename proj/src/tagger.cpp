#include "glossnet/tagger.hpp"

#include "glossnet/translate.hpp"

#include <algorithm>

namespace glossnet {

std::string to_string(GlossStructure s) {
    switch (s) {
        case GlossStructure::Synonymy: return "SYNONYMY";
        case GlossStructure::CategorySwitch: return "CATEGORY_SWITCH";
        case GlossStructure::Hypernymy: return "HYPERNYMY";
    }
    return "HYPERNYMY";
}

std::string to_string(NounSubClass s) {
    switch (s) {
        case NounSubClass::None: return "-";
        case NounSubClass::A: return "a";
        case NounSubClass::B: return "b";
        case NounSubClass::C: return "c";
        case NounSubClass::D: return "d";
        case NounSubClass::E: return "e";
        case NounSubClass::F: return "f";
        case NounSubClass::G: return "g";
        case NounSubClass::GToken: return "g-token";
    }
    return "-";
}

std::string GlossClass::str() const {
    std::string out = to_string(structure);
    if (sub != NounSubClass::None) out += "/" + to_string(sub);
    if (low_confidence) out += " (low-confidence)";
    return out;
}

namespace {

bool is_lexical(WordCategory c) {
    return c == WordCategory::Noun || c == WordCategory::Verb ||
           c == WordCategory::Adj || c == WordCategory::Adv;
}

/// PREP child of `node` with the given role; `before` selects the side.
const DependencyNode* prep_child(const DependencyTree& t, const DependencyNode& node,
                                 const RuleSet& rules, PrepRole role, bool before) {
    for (const DependencyNode* c : t.children(node.index)) {
        if (c->dep != DepLabel::Prep) continue;
        if (before && c->index > node.index) continue;
        if (!before && c->index < node.index) continue;
        auto r = rules.prep_role(c->lemma);
        if (r && *r == role) return c;
    }
    return nullptr;
}

const DependencyNode* pmod_of(const DependencyTree& t, const DependencyNode& prep) {
    for (const DependencyNode* c : t.children(prep.index))
        if (c->dep == DepLabel::Pmod || c->dep == DepLabel::Comp) return c;
    return nullptr;
}

bool is_essere_attributive(const DependencyTree& t, const DependencyNode& verb) {
    if (verb.lemma != "essere" && verb.lemma != "be") return false;
    for (const DependencyNode* c : t.children(verb.index))
        if (c->category == WordCategory::Adj &&
            (c->dep == DepLabel::Comp || c->dep == DepLabel::Mod))
            return true;
    return false;
}

} // namespace

GlossClass classify_gloss(const DependencyTree& t, WordCategory category,
                          const RuleSet& rules) {
    GlossClass cls;
    if (!validate_tree(t).empty()) {
        cls.low_confidence = true;
        if (category == WordCategory::Noun) cls.sub = NounSubClass::D;
        return cls;
    }
    const DependencyNode& head = gloss_head(t);
    const bool single = t.nodes.size() == 1;

    if (category == WordCategory::Noun) {
        if (head.category == WordCategory::Pron) {
            if (head.lemma == "chi" || head.lemma == "who") {
                cls.structure = GlossStructure::Hypernymy;
                cls.sub = NounSubClass::B;
                return cls;
            }
            // "ciò che" and kin: feature nouns when the relative is a bare
            // attribution, generic things otherwise.
            cls.structure = GlossStructure::Hypernymy;
            cls.sub = NounSubClass::D;
            for (const DependencyNode* c : t.children(head.index))
                if (c->dep == DepLabel::Rel && is_essere_attributive(t, *c))
                    cls.sub = NounSubClass::F;
            return cls;
        }
        if (rules.type_words.count(head.lemma)) {
            cls.structure = GlossStructure::Hypernymy;
            cls.sub = NounSubClass::GToken;
            return cls;
        }
        if (rules.denom_words.count(head.lemma)) {
            cls.structure = GlossStructure::Hypernymy;
            cls.sub = NounSubClass::G;
            return cls;
        }
        if (rules.act_words.count(head.lemma)) {
            const DependencyNode* di = prep_child(t, head, rules, PrepRole::Di, false);
            const DependencyNode* content = di ? pmod_of(t, *di) : nullptr;
            if (content && content->category == WordCategory::Verb &&
                content->has_feature("inf")) {
                cls.structure = GlossStructure::CategorySwitch;
                cls.sub = NounSubClass::E;
                return cls;
            }
        }
        if (prep_child(t, head, rules, PrepRole::Di, true)) {
            // Bare "di N" definition: an elided denomination.
            cls.structure = GlossStructure::Hypernymy;
            cls.sub = NounSubClass::G;
            return cls;
        }
        if (single && head.category == WordCategory::Noun) {
            cls.structure = GlossStructure::Synonymy;
            return cls;
        }
        if (head.category == WordCategory::Verb && head.has_feature("part")) {
            cls.structure = GlossStructure::Hypernymy;
            cls.sub = NounSubClass::C;
            return cls;
        }
        if (head.category == WordCategory::Noun) {
            cls.structure = GlossStructure::Hypernymy;
            const TagSequence* tags = rules.seed_tags(head.lemma);
            cls.sub = (tags && tags->contains(Tag::Person)) ? NounSubClass::A
                                                            : NounSubClass::D;
            return cls;
        }
        cls.structure = GlossStructure::Hypernymy;
        cls.sub = NounSubClass::D;
        cls.low_confidence = true;
        return cls;
    }

    if (category == WordCategory::Adj) {
        if (single && head.category == WordCategory::Adj) {
            cls.structure = GlossStructure::Synonymy;
            return cls;
        }
        if (head.category == WordCategory::Noun &&
            prep_child(t, head, rules, PrepRole::Di, true)) {
            cls.structure = GlossStructure::CategorySwitch;
            return cls;
        }
        cls.structure = GlossStructure::Hypernymy;
        return cls;
    }

    if (category == WordCategory::Adv) {
        if (single && head.category == WordCategory::Adv) {
            cls.structure = GlossStructure::Synonymy;
            return cls;
        }
        // "in modo/in maniera + ADJ": a category switch onto the adjective.
        if (rules.match_functor(head.lemma,
                                [&]() -> std::string {
                                    for (const DependencyNode* c : t.children(head.index))
                                        if (c->dep == DepLabel::Prep && c->index < head.index)
                                            return c->lemma;
                                    return "";
                                }(),
                                "")) {
            cls.structure = GlossStructure::CategorySwitch;
            return cls;
        }
        cls.structure = GlossStructure::Hypernymy;
        return cls;
    }

    // Verbs and the rest.
    if (single && head.category == category) {
        cls.structure = GlossStructure::Synonymy;
        return cls;
    }
    cls.structure = GlossStructure::Hypernymy;
    if (!is_lexical(head.category)) cls.low_confidence = true;
    return cls;
}

TagSequence default_tags(WordCategory c) {
    switch (c) {
        case WordCategory::Verb: return {Tag::Action};
        case WordCategory::Adj: return {Tag::Quality};
        case WordCategory::Adv: return {Tag::Manner};
        default: return {Tag::Thing};
    }
}

namespace {

/// Modifier lemmas of the head: direct MOD/ADVMOD children plus PMOD
/// content of PREP children ("aumentare *in grandezza*").
std::vector<std::string> head_modifier_lemmas(const DependencyTree& t,
                                              const DependencyNode& head) {
    std::vector<std::string> out;
    for (const DependencyNode* c : t.children(head.index)) {
        if (c->dep == DepLabel::Mod || c->dep == DepLabel::Advmod) {
            out.push_back(c->lemma);
        } else if (c->dep == DepLabel::Prep) {
            for (const DependencyNode* g : t.children(c->index))
                if (g->dep == DepLabel::Pmod) out.push_back(g->lemma);
        }
    }
    return out;
}

} // namespace

TagSequence tag_entry(const MeaningEntry& e, const PrimitiveInventory& inv,
                      const RuleSet& rules) {
    if (e.gloss.empty() || !validate_tree(e.gloss).empty())
        return default_tags(e.category);
    const DependencyNode& head = gloss_head(e.gloss);
    const std::vector<std::string> modifiers = head_modifier_lemmas(e.gloss, head);

    const EntityTagRule* best = nullptr;
    for (const EntityTagRule& r : rules.tag_rules) {
        if (r.category != e.category) continue;
        if (!rules.key_matches(r.head_match, head.lemma)) continue;
        if (r.modifier_match != "-") {
            const bool any = std::any_of(modifiers.begin(), modifiers.end(),
                                         [&](const std::string& m) {
                                             return rules.key_matches(r.modifier_match, m);
                                         });
            if (!any) continue;
        }
        if (!best || r.specificity() > best->specificity() ||
            (r.specificity() == best->specificity() && r.priority > best->priority))
            best = &r;
    }

    TagSequence tags;
    if (best) {
        tags = best->emit;
    } else if (const TagSequence* head_tags = inv.lookup(head.lemma)) {
        switch (e.category) {
            case WordCategory::Noun: tags.append(Tag::Thing); break;
            case WordCategory::Verb: tags.append(Tag::Action); break;
            default: break;
        }
        if (e.category == WordCategory::Noun || e.category == WordCategory::Verb)
            for (Tag t : head_tags->tags) tags.append(t);
    }
    if (tags.empty() && rules.part_words.count(head.lemma) &&
        e.category == WordCategory::Noun)
        tags = {Tag::Thing}; // "parte di X": THING, the PART_OF link is a triple

    if (tags.empty()) tags = default_tags(e.category);

    for (const std::string& m : modifiers) {
        auto it = rules.modifier_tags.find(m);
        if (it != rules.modifier_tags.end())
            for (Tag t : it->second.tags) tags.append(t);
    }

    if (tags.contains(Tag::Change) && !tags.contains(Tag::Place) &&
        !tags.contains(Tag::Quality)) {
        for (const std::string& m : modifiers) {
            if (const TagSequence* mt = inv.lookup(m)) {
                TagSequence refined = disambiguate_change_verb(tags, *mt);
                if (refined != tags) {
                    tags = refined;
                    break;
                }
            }
        }
    }

    if (best)
        for (Tag t : best->suffix.tags) tags.append(t);
    return tags;
}

std::optional<TagSequence> unit_tags(const std::string& lemma, WordCategory category,
                                     const PrimitiveInventory& inv, const RuleSet& rules,
                                     const Lexicon* lex) {
    if (const TagSequence* t = inv.lookup(lemma)) return *t;
    if (lex) {
        const auto entries = lex->lookup_lemma(lemma);
        if (!entries.empty()) {
            TagSequence first = tag_entry(*entries.front(), inv, rules);
            const bool agree = std::all_of(entries.begin() + 1, entries.end(),
                                           [&](const MeaningEntry* e) {
                                               return tag_entry(*e, inv, rules) == first;
                                           });
            if (agree) return first;
            return std::nullopt; // polysemous and divergent: leave untagged
        }
    }
    if (category == WordCategory::Adv) return TagSequence{Tag::Manner};
    return std::nullopt;
}

int raise_hypernym_attributes(SemanticFrame& frame, const SemanticFrame* hyper_frame,
                              const PrimitiveInventory& inv,
                              std::vector<std::string>* warnings,
                              const std::string& only_hypernym) {
    int added = 0;
    const SemanticUnit lemma_unit = frame.lemma_unit();
    const std::string scope =
        !only_hypernym.empty() ? only_hypernym
                               : (hyper_frame ? hyper_frame->lemma : std::string());

    struct Link {
        RelationName relation;
        SemanticUnit hypernym;
    };
    std::vector<Link> links;
    for (const RelationTriple& t : frame.triples) {
        if (t.relation.is_ambiguous() || t.relation.kind.attribution) continue;
        const RelationName name = t.relation.kind.name;
        if (name != RelationName::TokenOf && name != RelationName::RefersTo) continue;
        if (t.subject_node != 0 || !t.object.is_word()) continue;
        if (!scope.empty() && t.object.lemma != scope) continue;
        links.push_back({name, t.object});
    }

    for (const Link& link : links) {
        const TagSequence* tags = inv.lookup(link.hypernym.lemma);
        if (!tags && hyper_frame && hyper_frame->lemma == link.hypernym.lemma) {
            for (const RelationTriple& ht : hyper_frame->triples) {
                if (!ht.relation.is_ambiguous() &&
                    ht.relation.kind.name == RelationName::TokenOf &&
                    ht.subject_node == 0 && ht.object.is_terminal()) {
                    tags = &ht.object.tags;
                    break;
                }
            }
        }
        if (tags) {
            RelationTriple twin;
            twin.subject = lemma_unit;
            twin.relation = RelationKind(link.relation);
            twin.object = SemanticUnit::terminal(*tags);
            twin.provenance = Provenance::Raised;
            if (frame.add(twin)) ++added;
        } else if (warnings && !hyper_frame) {
            warnings->push_back("frame " + frame.meaning.str() +
                                ": hypernym '" + link.hypernym.lemma +
                                "' has no frame and no tags to raise");
        }

        // Retarget the hypernym node's own dependents onto the lemma.
        const std::vector<RelationTriple> snapshot = frame.triples;
        for (const RelationTriple& t : snapshot) {
            if (!t.subject.is_word() || t.subject.lemma != link.hypernym.lemma) continue;
            if (!t.relation.is_ambiguous()) {
                const RelationName name = t.relation.kind.name;
                if (name == RelationName::TokenOf || name == RelationName::HasTag)
                    continue;
            }
            RelationTriple copy = t;
            copy.subject = lemma_unit;
            copy.subject_node = 0;
            copy.provenance = Provenance::Raised;
            if (!copy.relation.is_ambiguous() &&
                copy.relation.kind.name == RelationName::HasQuality &&
                copy.object.is_word() && !copy.object.wrap)
                copy.object.wrap = Tag::Manner;
            if (frame.add(std::move(copy))) ++added;
        }
    }
    return added;
}

} // namespace glossnet
