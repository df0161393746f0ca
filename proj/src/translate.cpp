#include "glossnet/translate.hpp"

#include "glossnet/tagger.hpp"

#include <algorithm>
#include <set>

namespace glossnet {

// ---------------------------------------------------------------------------
// Preposition tagging
// ---------------------------------------------------------------------------

RelationSlot tag_preposition(const RuleSet& rules, const std::string& prep,
                             WordCategory head_category, const std::string& head_lemma,
                             const std::optional<TagSequence>& dependent_tag,
                             bool dependent_infinitive, bool* warned) {
    if (warned) *warned = false;
    const auto role = rules.prep_role(prep);
    if (!role) {
        if (warned) *warned = true;
        return RelationSlot(RelationName::RelationTo);
    }
    switch (*role) {
        case PrepRole::Con:
            if (head_category != WordCategory::Verb)
                return RelationSlot(RelationName::HasPart);
            if (dependent_tag) {
                if (dependent_tag->contains(Tag::Instrument))
                    return RelationSlot(RelationName::HasInstrument);
                if (dependent_tag->contains(Tag::Manner) ||
                    dependent_tag->contains(Tag::Quality))
                    return RelationSlot(RelationName::HasManner);
            }
            return RelationSlot(AmbiguousRelation{{RelationName::HasInstrument,
                                                   RelationName::HasManner,
                                                   RelationName::RelationTo}});
        case PrepRole::Per:
            if (dependent_infinitive ||
                (dependent_tag && dependent_tag->contains(Tag::Action)))
                return RelationSlot(RelationName::HasFunction);
            if (dependent_tag && dependent_tag->contains(Tag::Cause))
                return RelationSlot(RelationName::HasCause);
            return RelationSlot(AmbiguousRelation{{RelationName::HasFunction,
                                                   RelationName::HasCause,
                                                   RelationName::RelationTo}});
        case PrepRole::Di:
            if (rules.denom_words.count(head_lemma) || rules.type_words.count(head_lemma))
                return RelationSlot(RelationName::TokenOf);
            if (rules.part_words.count(head_lemma))
                return RelationSlot(RelationName::PartOf);
            return RelationSlot(RelationName::HasSpec);
        case PrepRole::A:
        case PrepRole::Da:
            return RelationSlot(RelationName::RelationTo);
    }
    return RelationSlot(RelationName::RelationTo);
}

TagSequence disambiguate_change_verb(const TagSequence& verb_tags,
                                     const std::optional<TagSequence>& dependent_tag) {
    if (!verb_tags.contains(Tag::Change) || verb_tags.contains(Tag::Place) ||
        verb_tags.contains(Tag::Quality) || !dependent_tag)
        return verb_tags;
    TagSequence out = verb_tags;
    if (dependent_tag->contains(Tag::Place)) {
        out.append(Tag::Place);
    } else if (dependent_tag->contains(Tag::Quality) ||
               dependent_tag->contains(Tag::Dimension)) {
        out.append(Tag::Quality);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gloss translation
// ---------------------------------------------------------------------------

namespace {

bool is_lexical(WordCategory c) {
    return c == WordCategory::Noun || c == WordCategory::Verb ||
           c == WordCategory::Adj || c == WordCategory::Adv;
}

struct FunctorHit {
    const FunctorFamily* family = nullptr;
    int content = 0;            // content node index
    int consumed_prep = 0;      // post-preposition node, 0 if none
    int consumed_pre_prep = 0;  // pre-preposition node, 0 if none
};

class Translator {
public:
    Translator(const MeaningEntry& e, const std::map<int, TagSequence>& node_tags,
               const RuleSet& rules, const PrimitiveInventory& inv,
               TranslateDiagnostics* diag)
        : entry_(e), tree_(e.gloss), node_tags_(node_tags), rules_(rules), inv_(inv),
          diag_(diag) {}

    SemanticFrame run();

private:
    const MeaningEntry& entry_;
    const DependencyTree& tree_;
    const std::map<int, TagSequence>& node_tags_;
    const RuleSet& rules_;
    const PrimitiveInventory& inv_;
    TranslateDiagnostics* diag_;

    SemanticFrame frame_;
    std::map<int, FunctorHit> functors_;
    std::set<int> consumed_preps_;
    std::set<int> handled_; // nodes whose incoming edge is already emitted
    bool emitted_token_of_ = false;

    // -- helpers ----------------------------------------------------------

    void warn(const std::string& msg) {
        if (diag_) diag_->warnings.push_back("entry " + entry_.id.str() + ": " + msg);
    }

    SemanticUnit unit_for(const DependencyNode& n) const {
        return SemanticUnit::word(n.lemma, n.category, n.has_feature("refl"));
    }

    /// Adjective base replaces a derived adverb in quality objects.
    SemanticUnit quality_unit(const DependencyNode& n) const {
        if (n.category == WordCategory::Adv && n.has_feature("base"))
            return SemanticUnit::word(n.feature("base"), WordCategory::Adj);
        return unit_for(n);
    }

    std::optional<TagSequence> tags_of(const DependencyNode& n) const {
        auto it = node_tags_.find(n.index);
        if (it == node_tags_.end()) return std::nullopt;
        return it->second;
    }

    const DependencyNode& head() const { return gloss_head(tree_); }

    bool skipped(const DependencyNode& n) const {
        if (n.dep == DepLabel::Det || n.dep == DepLabel::Conj) return true;
        if (n.category == WordCategory::Det) return true;
        if (rules_.skip_words.count(n.lemma)) return true;
        if (rules_.quantifiers.count(n.lemma)) return true;
        return false;
    }

    /// The node itself plus its COORD conjuncts, recursively, index order.
    std::vector<const DependencyNode*> with_conjuncts(const DependencyNode& n) const {
        std::vector<const DependencyNode*> out{&n};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (const DependencyNode* c : tree_.children(out[i]->index))
                if (c->dep == DepLabel::Coord && !skipped(*c)) out.push_back(c);
        std::sort(out.begin(), out.end(),
                  [](const DependencyNode* a, const DependencyNode* b) {
                      return a->index < b->index;
                  });
        return out;
    }

    const DependencyNode* pmod_of(const DependencyNode& prep) const {
        for (const DependencyNode* c : tree_.children(prep.index))
            if (c->dep == DepLabel::Pmod || c->dep == DepLabel::Comp) return c;
        return nullptr;
    }

    void add(SemanticUnit subject, int subject_node, RelationSlot relation,
             SemanticUnit object, int source_node) {
        RelationTriple t;
        t.subject = std::move(subject);
        t.relation = std::move(relation);
        t.object = std::move(object);
        t.provenance = Provenance::Direct;
        t.subject_node = subject_node;
        t.source_node = source_node;
        if (t.relation.is_ambiguous() && diag_) ++diag_->ambiguous_relations;
        if (!t.relation.is_ambiguous() && !t.relation.kind.attribution &&
            t.relation.kind.name == RelationName::TokenOf)
            emitted_token_of_ = true;
        frame_.add(std::move(t));
    }

    // -- functor detection --------------------------------------------------

    void detect_functor_nodes() {
        for (const DependencyNode& n : tree_.nodes) {
            if (skipped(n) || !is_lexical(n.category)) continue;
            std::string pre;
            int pre_idx = 0;
            for (const DependencyNode* c : tree_.children(n.index)) {
                if (c->dep == DepLabel::Prep && c->index < n.index) {
                    pre = c->lemma;
                    pre_idx = c->index;
                    break;
                }
            }
            FunctorHit hit;
            for (const DependencyNode* post : tree_.children(n.index)) {
                if (post->dep != DepLabel::Prep || post->index < n.index) continue;
                const FunctorFamily* fam = rules_.match_functor(n.lemma, pre, post->lemma);
                if (!fam) continue;
                const DependencyNode* content = pmod_of(*post);
                if (!content) continue;
                hit.family = fam;
                hit.content = content->index;
                hit.consumed_prep = post->index;
                break;
            }
            if (!hit.family) {
                const FunctorFamily* fam = rules_.match_functor(n.lemma, pre, "");
                if (fam) {
                    for (const DependencyNode* c : tree_.children(n.index)) {
                        if (c->index == pre_idx) continue;
                        if (c->dep == DepLabel::Mod || c->dep == DepLabel::Comp ||
                            c->dep == DepLabel::Obj || c->dep == DepLabel::Pmod) {
                            hit.family = fam;
                            hit.content = c->index;
                            break;
                        }
                    }
                }
            }
            if (hit.family) {
                // a matched pre-preposition is part of the functor surface
                if (pre_idx != 0) {
                    for (const auto& p : hit.family->patterns)
                        if (p.word == n.lemma && !p.pre_prep.empty()) {
                            hit.consumed_pre_prep = pre_idx;
                            break;
                        }
                }
                functors_[n.index] = hit;
                if (hit.consumed_prep) consumed_preps_.insert(hit.consumed_prep);
                if (hit.consumed_pre_prep) consumed_preps_.insert(hit.consumed_pre_prep);
            }
        }
    }

    RelationKind resolve_yield(const FunctorHit& hit) const {
        RelationKind kind = hit.family->yields;
        if (hit.family->quality_alt) {
            const DependencyNode* content = tree_.find(hit.content);
            if (content) {
                auto tags = tags_of(*content);
                if ((tags && tags->contains(Tag::Quality)) ||
                    content->category == WordCategory::Adj)
                    kind.name = *hit.family->quality_alt;
            }
        }
        return kind;
    }

    /// Emits the attribution levels of a functor: a wrapped parent edge
    /// (unless the functor is itself another functor's content) and a
    /// content edge, recursing into nested functors.
    void emit_functor(const DependencyNode& f, const SemanticUnit& parent_subject,
                      int parent_node, bool nested_content) {
        const FunctorHit& hit = functors_.at(f.index);
        const DependencyNode& content = tree_.node(hit.content);
        handled_.insert(f.index);
        handled_.insert(content.index);
        RelationKind kind = resolve_yield(hit);

        if (!nested_content) {
            RelationKind wrapped = kind;
            wrapped.attribution = true;
            add(parent_subject, parent_node, RelationSlot(wrapped), unit_for(f),
                f.index);
        }

        const bool content_is_functor = functors_.count(content.index) != 0;
        RelationKind content_kind = kind;
        content_kind.attribution = nested_content; // nested functor: wrapped content edge
        add(unit_for(f), f.index, RelationSlot(content_kind), unit_for(content),
            content.index);

        if (content_is_functor) {
            emit_functor(content, unit_for(f), f.index, /*nested_content=*/true);
        } else if (content.category == WordCategory::Verb) {
            process_verb_arguments(content);
        } else {
            process_dependents(content, unit_for(content), content.index);
        }
    }

    // -- relatives and verb arguments ---------------------------------------

    struct TraceInfo {
        bool found = false;
        bool head_var = false;
        SemanticUnit unit;
        int node = 0;
        std::string role; // "subj", "obj", "place" or "" (by voice)
    };

    TraceInfo find_trace(const DependencyNode& verb) const {
        TraceInfo info;
        for (const DependencyNode* c : tree_.children(verb.index)) {
            if (c->dep != DepLabel::Trace) continue;
            info.found = true;
            info.role = c->feature("role");
            const std::string ant = c->feature("ant");
            const int ant_idx = ant.empty() ? -1 : std::stoi(ant);
            if (ant_idx == 0) {
                info.head_var = true;
                info.unit = SemanticUnit::head_var();
                info.node = 0;
            } else if (const DependencyNode* a = tree_.find(ant_idx)) {
                if (a->index == head().index) {
                    info.unit = frame_.lemma_unit();
                    info.node = 0;
                } else {
                    info.unit = unit_for(*a);
                    info.node = a->index;
                }
            } else {
                info.found = false;
            }
            return info;
        }
        return info;
    }

    /// A relative clause on `ant_unit` (the relativized referent). Emits the
    /// clause relation plus the verb's own arguments.
    void handle_relative(const DependencyNode& verb, const SemanticUnit& ant_unit,
                         int ant_node) {
        for (const DependencyNode* vv : with_conjuncts(verb)) {
            // Functor verbs in relative position ("che serve a ...") keep
            // only their mediated relation.
            if (functors_.count(vv->index)) {
                emit_functor(*vv, ant_unit, ant_node, false);
                continue;
            }
            handled_.insert(vv->index);
            SemanticUnit rel_unit = ant_unit;
            int rel_node = ant_node;
            std::string role;
            const TraceInfo trace = find_trace(*vv);
            if (trace.found) {
                rel_unit = trace.unit;
                rel_node = trace.node;
                role = trace.role;
            }
            if (role.empty())
                role = (vv->has_feature("pass")) ? "obj" : "subj";

            if (role == "place") {
                add(rel_unit, rel_node, RelationSlot(RelationName::PlaceOf),
                    unit_for(*vv), vv->index);
                process_verb_arguments(*vv);
                continue;
            }
            if (role == "obj") {
                // Trace-resolved patient: single direction, the inversion
                // pass completes the pair.
                add(rel_unit, rel_node, RelationSlot(RelationName::ObjOf),
                    unit_for(*vv), vv->index);
                process_verb_arguments(*vv);
                continue;
            }

            // Subject role.
            if (is_attributive_be(*vv)) {
                emit_attributive(*vv, rel_unit, rel_node);
                continue;
            }
            if (rules_.belong_verbs.count(vv->lemma)) {
                // "to which X belongs": the relativized referent collects X.
                for (const DependencyNode* c : tree_.children(vv->index)) {
                    if (c->dep != DepLabel::Subj || skipped(*c)) continue;
                    for (const DependencyNode* s : with_conjuncts(*c)) {
                        add(rel_unit, rel_node, RelationSlot(RelationName::HasToken),
                            unit_for(*s), vv->index);
                        process_dependents(*s, unit_for(*s), s->index);
                    }
                }
                continue;
            }
            add(rel_unit, rel_node, RelationSlot(RelationName::AgntOf), unit_for(*vv),
                vv->index);
            process_verb_arguments(*vv);
        }
    }

    bool is_attributive_be(const DependencyNode& verb) const {
        if (verb.lemma != "essere" && verb.lemma != "be") return false;
        for (const DependencyNode* c : tree_.children(verb.index))
            if (c->category == WordCategory::Adj &&
                (c->dep == DepLabel::Comp || c->dep == DepLabel::Mod))
                return true;
        return false;
    }

    /// "che (non) è X": the attribution predicates the referent itself;
    /// a head-variable referent falls back to the lemma.
    void emit_attributive(const DependencyNode& be, const SemanticUnit& ant_unit,
                          int ant_node) {
        SemanticUnit subject = ant_unit;
        int subject_node = ant_node;
        if (subject.kind == UnitKind::HeadVar) {
            subject = frame_.lemma_unit();
            subject_node = 0;
        }
        bool negated = false;
        for (const DependencyNode* c : tree_.children(be.index))
            if (c->dep == DepLabel::Advmod && (c->lemma == "non" || c->lemma == "not"))
                negated = true;
        for (const DependencyNode* c : tree_.children(be.index)) {
            if (c->category != WordCategory::Adj ||
                (c->dep != DepLabel::Comp && c->dep != DepLabel::Mod))
                continue;
            for (const DependencyNode* cc : with_conjuncts(*c)) {
                handled_.insert(cc->index);
                RelationKind kind(RelationName::HasQuality);
                if (negated) kind.modifiers.insert(RelMod::Neg);
                add(subject, subject_node, RelationSlot(kind), quality_unit(*cc),
                    cc->index);
                process_dependents(*cc, quality_unit(*cc), cc->index);
            }
        }
    }

    /// Overt arguments of a verb node: subject and object emit both
    /// directions, adverbs and prepositional satellites single ones.
    void process_verb_arguments(const DependencyNode& verb) {
        const SemanticUnit vu = unit_for(verb);
        const std::vector<const DependencyNode*> verbs = with_conjuncts(verb);
        for (const DependencyNode* c : tree_.children(verb.index)) {
            if (skipped(*c) || c->dep == DepLabel::Trace || c->dep == DepLabel::Coord)
                continue;
            if (c->dep == DepLabel::Subj) {
                // Subjects of verbs with a non-ACTION terminal tag are not
                // agents; they keep a plain HAS_SUBJ link.
                const auto vtags = tags_of(verb);
                const bool stative = vtags && !vtags->contains(Tag::Action);
                for (const DependencyNode* s : with_conjuncts(*c)) {
                    handled_.insert(s->index);
                    for (const DependencyNode* v : verbs) {
                        if (stative) {
                            add(unit_for(*v), v->index,
                                RelationSlot(RelationName::HasSubj), unit_for(*s),
                                s->index);
                            continue;
                        }
                        add(unit_for(*s), s->index, RelationSlot(RelationName::AgntOf),
                            unit_for(*v), v->index);
                        add(unit_for(*v), v->index, RelationSlot(RelationName::HasAgnt),
                            unit_for(*s), s->index);
                    }
                    process_dependents(*s, unit_for(*s), s->index);
                }
            } else if (c->dep == DepLabel::Obj) {
                if (c->category == WordCategory::Verb && c->has_feature("inf")) {
                    // Infinitive object (causative "fare" pattern): keep the
                    // plain object link.
                    for (const DependencyNode* v : verbs)
                        add(unit_for(*v), v->index, RelationSlot(RelationName::HasObj),
                            unit_for(*c), c->index);
                    handled_.insert(c->index);
                    process_verb_arguments(*c);
                    continue;
                }
                for (const DependencyNode* o : with_conjuncts(*c)) {
                    handled_.insert(o->index);
                    for (const DependencyNode* v : verbs) {
                        add(unit_for(*o), o->index, RelationSlot(RelationName::ObjOf),
                            unit_for(*v), v->index);
                        add(unit_for(*v), v->index, RelationSlot(RelationName::HasObj),
                            unit_for(*o), o->index);
                    }
                    process_dependents(*o, unit_for(*o), o->index);
                }
            } else if (c->dep == DepLabel::Advmod || c->dep == DepLabel::Mod) {
                if (functors_.count(c->index)) {
                    emit_functor(*c, vu, verb.index, false);
                    continue;
                }
                for (const DependencyNode* m : with_conjuncts(*c)) {
                    handled_.insert(m->index);
                    add(vu, verb.index, RelationSlot(RelationName::HasQuality),
                        quality_unit(*m), m->index);
                    process_dependents(*m, quality_unit(*m), m->index);
                }
            } else if (c->dep == DepLabel::Prep) {
                handle_prep(*c, verb, vu, verb.index);
            } else if (c->dep == DepLabel::Comp) {
                handled_.insert(c->index);
                process_dependents(*c, unit_for(*c), c->index);
            } else {
                warn("node " + std::to_string(c->index) + ": unhandled label " +
                     to_string(c->dep) + " under verb, skipped");
                if (diag_) ++diag_->skipped_edges;
            }
        }
    }

    /// Prepositional satellite of `gov`; fans out over coordinated
    /// conjuncts on both sides.
    void handle_prep(const DependencyNode& prep, const DependencyNode& gov,
                     const SemanticUnit& gov_unit, int gov_node) {
        if (consumed_preps_.count(prep.index)) return;
        for (const DependencyNode* pp : with_conjuncts(prep)) {
            if (consumed_preps_.count(pp->index)) continue;
            const DependencyNode* dep = pmod_of(*pp);
            if (!dep) {
                warn("node " + std::to_string(pp->index) +
                     ": preposition without content, skipped");
                if (diag_) ++diag_->skipped_edges;
                continue;
            }
            // Passive agent: "ricoperta da pelo".
            const auto role = rules_.prep_role(pp->lemma);
            if (role && *role == PrepRole::Da && gov.category == WordCategory::Verb &&
                gov.has_feature("pass")) {
                for (const DependencyNode* a : with_conjuncts(*dep)) {
                    handled_.insert(a->index);
                    add(unit_for(*a), a->index, RelationSlot(RelationName::AgntOf),
                        unit_for(gov), gov.index);
                    add(unit_for(gov), gov.index, RelationSlot(RelationName::HasAgnt),
                        unit_for(*a), a->index);
                    process_dependents(*a, unit_for(*a), a->index);
                }
                continue;
            }
            for (const DependencyNode* dd : with_conjuncts(*dep)) {
                handled_.insert(dd->index);
                // Category-switch link: "attività del comprare".
                if (role && *role == PrepRole::Di && rules_.act_words.count(gov.lemma) &&
                    dd->category == WordCategory::Verb && dd->has_feature("inf")) {
                    add(gov_unit, gov_node, RelationSlot(RelationName::TokenOf),
                        unit_for(*dd), dd->index);
                    process_verb_arguments(*dd);
                    continue;
                }
                // Locative satellite of a verb: a PLACE-tagged dependent
                // behind "a"/"da" marks where the event sits.
                if (gov.category == WordCategory::Verb && role &&
                    (*role == PrepRole::A || *role == PrepRole::Da)) {
                    const auto dtags = tags_of(*dd);
                    if (dtags && dtags->contains(Tag::Place)) {
                        add(gov_unit, gov_node, RelationSlot(RelationName::HasSpace),
                            unit_for(*dd), pp->index);
                        process_dependents(*dd, unit_for(*dd), dd->index);
                        continue;
                    }
                }
                const bool dep_inf =
                    dd->category == WordCategory::Verb && dd->has_feature("inf");
                bool warned = false;
                RelationSlot slot =
                    tag_preposition(rules_, pp->lemma, gov.category, gov.lemma,
                                    tags_of(*dd), dep_inf, &warned);
                if (warned)
                    warn("node " + std::to_string(pp->index) + ": preposition '" +
                         pp->lemma + "' outside the inventory");
                add(gov_unit, gov_node, std::move(slot), unit_for(*dd), pp->index);
                if (dd->category == WordCategory::Verb)
                    process_verb_arguments(*dd);
                else
                    process_dependents(*dd, unit_for(*dd), dd->index);
            }
        }
    }

    // -- generic dependent walk ---------------------------------------------

    void process_dependents(const DependencyNode& gov, const SemanticUnit& gov_unit,
                            int gov_node) {
        for (const DependencyNode* c : tree_.children(gov.index)) {
            if (skipped(*c) || c->dep == DepLabel::Coord || c->dep == DepLabel::Trace)
                continue;
            if (handled_.count(c->index)) continue;
            switch (c->dep) {
                case DepLabel::Mod:
                case DepLabel::Advmod:
                    if (functors_.count(c->index)) {
                        emit_functor(*c, gov_unit, gov_node, false);
                        break;
                    }
                    if (c->category == WordCategory::Verb && !c->has_feature("part")) {
                        handle_relative(*c, gov_unit, gov_node);
                        break;
                    }
                    for (const DependencyNode* m : with_conjuncts(*c)) {
                        handled_.insert(m->index);
                        bool negated = false;
                        for (const DependencyNode* g : tree_.children(m->index))
                            if (g->dep == DepLabel::Advmod &&
                                (g->lemma == "non" || g->lemma == "not"))
                                negated = true;
                        RelationKind kind(RelationName::HasQuality);
                        if (negated) kind.modifiers.insert(RelMod::Neg);
                        add(gov_unit, gov_node, RelationSlot(kind), quality_unit(*m),
                            m->index);
                        process_dependents(*m, quality_unit(*m), m->index);
                    }
                    break;
                case DepLabel::Rel:
                    handle_relative(*c, gov_unit, gov_node);
                    break;
                case DepLabel::Prep:
                    handle_prep(*c, gov, gov_unit, gov_node);
                    break;
                case DepLabel::Subj:
                case DepLabel::Obj:
                case DepLabel::Comp:
                    if (gov.category == WordCategory::Verb) break; // verb path covers it
                    warn("node " + std::to_string(c->index) + ": unhandled label " +
                         to_string(c->dep) + ", skipped");
                    if (diag_) ++diag_->skipped_edges;
                    break;
                default:
                    warn("node " + std::to_string(c->index) + ": unhandled label " +
                         to_string(c->dep) + ", skipped");
                    if (diag_) ++diag_->skipped_edges;
                    break;
            }
        }
    }

    // -- head emission -------------------------------------------------------

    void emit_head() {
        const DependencyNode& h = head();
        const SemanticUnit lemma = frame_.lemma_unit();
        const bool verb_entry = entry_.category == WordCategory::Verb;

        if (functors_.count(h.index)) {
            emit_functor(h, lemma, 0, false);
            process_dependents(h, unit_for(h), h.index);
            return;
        }

        // "parte di X": the part-word head collapses into the entry tag,
        // the holonym link survives as PART_OF.
        if (!verb_entry && rules_.part_words.count(h.lemma)) {
            const DependencyNode* di = nullptr;
            for (const DependencyNode* c : tree_.children(h.index)) {
                if (c->dep != DepLabel::Prep) continue;
                auto role = rules_.prep_role(c->lemma);
                if (role && *role == PrepRole::Di && c->index > h.index) {
                    di = c;
                    break;
                }
            }
            const DependencyNode* holonym = di ? pmod_of(*di) : nullptr;
            if (holonym) {
                consumed_preps_.insert(di->index);
                add(lemma, 0, RelationSlot(RelationName::TokenOf),
                    SemanticUnit::terminal(tag_entry(entry_, inv_, rules_)), h.index);
                for (const DependencyNode* hh : with_conjuncts(*holonym)) {
                    handled_.insert(hh->index);
                    add(lemma, 0, RelationSlot(RelationName::PartOf), unit_for(*hh),
                        di->index);
                    process_dependents(*hh, unit_for(*hh), hh->index);
                }
                process_dependents(h, lemma, 0);
                return;
            }
        }

        // Adjective paraphrased by "di N": a reference, not a hypernym.
        if (entry_.category == WordCategory::Adj &&
            h.category == WordCategory::Noun) {
            const DependencyNode* pre_di = nullptr;
            for (const DependencyNode* c : tree_.children(h.index)) {
                if (c->dep != DepLabel::Prep || c->index > h.index) continue;
                auto role = rules_.prep_role(c->lemma);
                if (role && *role == PrepRole::Di) pre_di = c;
            }
            if (pre_di) {
                consumed_preps_.insert(pre_di->index);
                add(lemma, 0, RelationSlot(RelationName::RefersTo), unit_for(h),
                    h.index);
                process_dependents(h, unit_for(h), h.index);
                return;
            }
        }

        // Relative-clause style definitions with a verbal head.
        if (h.category == WordCategory::Verb && !verb_entry) {
            handle_relative(h, entry_.category == WordCategory::Adj
                                   ? SemanticUnit::head_var()
                                   : lemma,
                            0);
            return;
        }

        if (is_lexical(h.category) || h.category == WordCategory::Pron) {
            const std::vector<const DependencyNode*> heads = with_conjuncts(h);
            for (const DependencyNode* hh : heads) {
                handled_.insert(hh->index);
                add(lemma, 0, RelationSlot(RelationName::TokenOf), unit_for(*hh),
                    hh->index);
            }
            if (verb_entry) {
                for (const DependencyNode* hh : heads) process_verb_arguments(*hh);
            } else {
                process_dependents(h, lemma, 0);
                for (const DependencyNode* hh : heads)
                    if (hh->index != h.index)
                        process_dependents(*hh, unit_for(*hh), hh->index);
            }
            return;
        }

        warn("head node " + std::to_string(h.index) + " of category " +
             to_string(h.category) + " is not interpretable");
        if (diag_) diag_->low_confidence_class = true;
        process_dependents(h, lemma, 0);
    }

public:
    SemanticFrame build() {
        frame_.lemma = entry_.lemma;
        frame_.reflexive = entry_.reflexive;
        frame_.meaning = entry_.id;
        frame_.category = entry_.category;

        detect_functor_nodes();
        emit_head();

        // The lemma's own tag sequence anchors the frame whenever no word
        // hypernym was produced.
        if (!emitted_token_of_) {
            add(frame_.lemma_unit(), 0, RelationSlot(RelationName::TokenOf),
                SemanticUnit::terminal(tag_entry(entry_, inv_, rules_)), 0);
        }

        emit_has_tags();
        return std::move(frame_);
    }

private:
    void emit_has_tags() {
        std::set<std::string> used;
        for (const RelationTriple& t : frame_.triples) {
            if (t.subject.is_word()) used.insert(t.subject.str());
            if (t.object.is_word()) {
                SemanticUnit plain = t.object;
                plain.wrap.reset();
                used.insert(plain.str());
            }
        }
        for (const DependencyNode& n : tree_.nodes) {
            const TagSequence* tags = inv_.lookup(n.lemma);
            if (!tags) continue;
            const SemanticUnit u = unit_for(n);
            if (!used.count(u.str())) continue;
            RelationTriple t;
            t.subject = u;
            t.relation = RelationSlot(RelationName::HasTag);
            t.object = SemanticUnit::terminal(*tags);
            t.provenance = Provenance::Direct;
            t.subject_node = n.index;
            t.source_node = n.index;
            frame_.add(std::move(t));
        }
    }
};

SemanticFrame Translator::run() { return build(); }

} // namespace

SemanticFrame translate(const MeaningEntry& e,
                        const std::map<int, TagSequence>& node_tags,
                        const RuleSet& rules, const PrimitiveInventory& inv,
                        TranslateDiagnostics* diag) {
    ValidationReport report = validate_tree(e.gloss);
    if (!report.empty())
        throw lookup_error("entry " + e.id.str() + " has an invalid gloss tree: " +
                           report.front().message);
    Translator tr(e, node_tags, rules, inv, diag);
    SemanticFrame frame = tr.run();
    if (diag) {
        GlossClass cls = classify_gloss(e.gloss, e.category, rules);
        if (cls.low_confidence) diag->low_confidence_class = true;
    }
    return frame;
}

SemanticFrame translate(const MeaningEntry& e, const TranslateContext& ctx,
                        TranslateDiagnostics* diag) {
    if (!ctx.rules || !ctx.inventory)
        throw std::invalid_argument("translate: context needs rules and inventory");
    std::map<int, TagSequence> node_tags;
    for (const DependencyNode& n : e.gloss.nodes) {
        auto tags = unit_tags(n.lemma, n.category, *ctx.inventory, *ctx.rules,
                              ctx.lexicon);
        if (tags) node_tags[n.index] = *tags;
    }
    return translate(e, node_tags, *ctx.rules, *ctx.inventory, diag);
}

} // namespace glossnet
