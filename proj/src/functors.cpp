#include "glossnet/functors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace glossnet {

namespace {

std::string roman(std::size_t n) {
    static const char* ones[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII",
                                 "IX"};
    static const char* tens[] = {"", "X", "XX", "XXX", "XL", "L"};
    if (n == 0 || n >= 60) return std::to_string(n);
    return std::string(tens[n / 10]) + ones[n % 10];
}

std::string bare(const SemanticUnit& u) {
    std::string core;
    switch (u.kind) {
        case UnitKind::WordLink:
            core = u.lemma;
            if (u.reflexive) core += "[si]";
            break;
        case UnitKind::TerminalTag: core = u.tags.str(); break;
        case UnitKind::MeaningLink: core = "#" + u.meaning.str(); break;
        case UnitKind::HeadVar: core = "$head"; break;
    }
    if (u.wrap) return to_string(*u.wrap) + "(" + core + ")";
    return core;
}

std::string level_line(const RelationTriple& t) {
    return t.relation.str() + "(" + bare(t.subject) + ", " + bare(t.object) + ")";
}

} // namespace

std::string AttributionChain::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < levels.size(); ++i)
        out << roman(i + 1) << "\t" << level_line(levels[i]) << "\n";
    return out.str();
}

std::size_t TraceState::live_count() const {
    std::size_t n = 0;
    for (const auto& s : slots)
        if (s) ++n;
    return n;
}

std::string ChainTrace::str() const {
    std::ostringstream out;
    out << initial.str();
    for (const TraceState& state : states) {
        out << "\n";
        for (std::size_t i = 0; i < state.slots.size(); ++i) {
            out << roman(i + 1) << "\t";
            if (state.slots[i])
                out << level_line(*state.slots[i]);
            else if (static_cast<int>(i) == state.action_slot)
                out << "-- " << state.action;
            else
                out << "--";
            out << "\n";
        }
    }
    if (aborted) out << "\n(aborted: " << diagnostic << ")\n";
    return out.str();
}

std::string RewriteTrace::str() const {
    std::string out;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (i) out += "\n";
        out += chains[i].str();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chain detection
// ---------------------------------------------------------------------------

std::vector<AttributionChain> detect_functors(const SemanticFrame& frame,
                                              const RuleSet& rules) {
    auto functor_key = [&](const SemanticUnit& u) -> std::string {
        if (u.is_word() && rules.is_functor_word(u.lemma)) return u.lemma;
        return "";
    };

    struct Member {
        std::size_t triple_index;
        std::string subject_key;
        std::string object_key;
    };
    std::vector<Member> members;
    for (std::size_t i = 0; i < frame.triples.size(); ++i) {
        const RelationTriple& t = frame.triples[i];
        if (!t.relation.is_ambiguous() &&
            t.relation.kind.name == RelationName::HasTag)
            continue;
        const std::string sk = functor_key(t.subject);
        const std::string ok = functor_key(t.object);
        if (sk.empty() && ok.empty()) continue;
        members.push_back({i, sk, ok});
    }
    if (members.empty()) return {};

    // Merge members sharing a functor unit.
    std::map<std::string, std::size_t> owner; // functor key -> first member
    std::vector<std::size_t> parent(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (const std::string& key : {members[i].subject_key, members[i].object_key}) {
            if (key.empty()) continue;
            auto it = owner.find(key);
            if (it == owner.end())
                owner[key] = i;
            else
                unite(i, it->second);
        }
    }

    std::map<std::size_t, AttributionChain> chains; // root -> chain, frame order
    for (std::size_t i = 0; i < members.size(); ++i)
        chains[find(i)].levels.push_back(frame.triples[members[i].triple_index]);

    std::vector<AttributionChain> out;
    out.reserve(chains.size());
    for (auto& [root, chain] : chains) out.push_back(std::move(chain));
    std::sort(out.begin(), out.end(),
              [&](const AttributionChain& a, const AttributionChain& b) {
                  return a.levels.front().source_node < b.levels.front().source_node;
              });
    return out;
}

// ---------------------------------------------------------------------------
// Rewriting
// ---------------------------------------------------------------------------

namespace {

struct WorkTriple {
    RelationTriple triple;
    bool alive = true;
};

std::string word_key(const SemanticUnit& u) {
    return u.is_word() ? u.lemma : "";
}

} // namespace

RewriteTrace raise_and_delete(SemanticFrame& frame,
                              const std::vector<AttributionChain>& chains,
                              const RuleSet& rules) {
    RewriteTrace trace;

    for (const AttributionChain& chain : chains) {
        ChainTrace ct;
        ct.initial = chain;

        // Locate the chain's triples in the frame.
        std::vector<long> slot_index(chain.levels.size(), -1);
        std::vector<bool> taken(frame.triples.size(), false);
        bool located = true;
        for (std::size_t s = 0; s < chain.levels.size(); ++s) {
            for (std::size_t i = 0; i < frame.triples.size(); ++i) {
                if (taken[i]) continue;
                if (same_triple(frame.triples[i], chain.levels[s])) {
                    slot_index[s] = static_cast<long>(i);
                    taken[i] = true;
                    break;
                }
            }
            if (slot_index[s] < 0) located = false;
        }
        if (!located) {
            ct.aborted = true;
            ct.diagnostic = "chain references a triple no longer present";
            trace.chains.push_back(std::move(ct));
            continue;
        }

        std::vector<WorkTriple> work;
        work.reserve(chain.levels.size());
        for (long idx : slot_index)
            work.push_back({frame.triples[static_cast<std::size_t>(idx)], true});

        auto snapshot = [&](const std::string& action, int action_slot) {
            TraceState state;
            state.action = action;
            state.action_slot = action_slot;
            state.slots.resize(work.size());
            for (std::size_t i = 0; i < work.size(); ++i)
                if (work[i].alive) state.slots[i] = work[i].triple;
            ct.states.push_back(std::move(state));
        };

        // Functor units of this chain, ordered for the bottom-up pass by
        // the position of their content edge (deepest last in the chain).
        std::vector<std::pair<long, std::string>> order; // (content slot, key)
        std::set<std::string> seen;
        for (std::size_t s = 0; s < work.size(); ++s) {
            const std::string key = word_key(work[s].triple.subject);
            if (key.empty() || !rules.is_functor_word(key) || seen.count(key)) continue;
            seen.insert(key);
            order.push_back({static_cast<long>(s), key});
        }
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });

        const SemanticUnit lemma_unit = frame.lemma_unit();
        bool ok = true;
        std::set<std::string> dissolved;

        for (const auto& [content_slot, key] : order) {
            long parent = -1;
            long content = -1;
            for (std::size_t s = 0; s < work.size(); ++s) {
                if (!work[s].alive) continue;
                if (word_key(work[s].triple.object) == key) parent = static_cast<long>(s);
                if (word_key(work[s].triple.subject) == key &&
                    content < 0) content = static_cast<long>(s);
            }
            if (parent < 0 || content < 0) {
                ok = false;
                ct.diagnostic = "functor '" + key + "' lost its parent or content edge";
                break;
            }
            WorkTriple& pe = work[static_cast<std::size_t>(parent)];
            WorkTriple& ce = work[static_cast<std::size_t>(content)];

            // Raise: the content unit replaces the functor in the parent
            // triple; the functor's own triple is deleted.
            pe.triple.object = ce.triple.object;
            ce.alive = false;
            dissolved.insert(key);

            const bool wrapped = !pe.triple.relation.is_ambiguous() &&
                                 pe.triple.relation.kind.attribution;
            const bool at_lemma = pe.triple.subject_node == 0;
            if (wrapped && at_lemma) {
                pe.triple.relation.kind.attribution = false;
                snapshot("raising and deletion", static_cast<int>(content));
            } else if (wrapped) {
                snapshot("raising", static_cast<int>(content));
                pe.triple.relation.kind.attribution = false;
                snapshot("deletion", static_cast<int>(content));
            } else {
                snapshot("raising and deletion", static_cast<int>(content));
            }
        }

        if (ok) {
            // Last step: properties still anchored to a dissolved functor
            // move up to the lemma.
            bool retargeted = false;
            for (WorkTriple& w : work) {
                if (!w.alive) continue;
                if (dissolved.count(word_key(w.triple.subject))) {
                    w.triple.subject = lemma_unit;
                    w.triple.subject_node = 0;
                    retargeted = true;
                }
                if (dissolved.count(word_key(w.triple.object))) {
                    ok = false;
                    ct.diagnostic = "functor '" + word_key(w.triple.object) +
                                    "' survives as an object after rewriting";
                    break;
                }
            }
            if (ok && retargeted) snapshot("raising", -1);
        }

        if (!ok) {
            ct.aborted = true;
            trace.chains.push_back(std::move(ct));
            continue;
        }

        // Commit: rewrite the frame in place, original positions preserved.
        for (std::size_t s = 0; s < work.size(); ++s) {
            const std::size_t idx = static_cast<std::size_t>(slot_index[s]);
            frame.triples[idx] = work[s].triple;
            if (!work[s].alive) frame.triples[idx].subject_node = -1; // tombstone
        }
        std::vector<RelationTriple> kept;
        kept.reserve(frame.triples.size());
        std::set<std::string> seen_keys;
        for (const RelationTriple& t : frame.triples) {
            if (t.subject_node == -1) continue;
            const std::string key = t.subject.str() + "\x1f" + t.relation.str() +
                                    "\x1f" + t.object.str();
            if (!seen_keys.insert(key).second) continue; // rewrite may converge
            kept.push_back(t);
        }
        frame.triples = std::move(kept);

        for (const WorkTriple& w : work)
            if (w.alive) ct.final_levels.push_back(w.triple);
        trace.chains.push_back(std::move(ct));
    }
    return trace;
}

// ---------------------------------------------------------------------------
// Relative-value markers
// ---------------------------------------------------------------------------

int mark_relative_value(SemanticFrame& frame, const RuleSet& rules,
                        std::vector<std::string>* warnings) {
    int affected = 0;
    const SemanticUnit lemma_unit = frame.lemma_unit();

    // Degenerate case: the marker is the gloss hypernym itself.
    for (const RelationTriple& t : frame.triples) {
        if (t.relation.is_ambiguous()) continue;
        if (t.relation.kind.name != RelationName::TokenOf) continue;
        if (t.object.is_word() && rules.relative_markers.count(t.object.lemma)) {
            if (warnings)
                warnings->push_back("frame " + frame.meaning.str() +
                                    ": relative-value marker '" + t.object.lemma +
                                    "' in gloss-head position, left alone");
            return 0;
        }
    }

    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < frame.triples.size(); ++i) {
        RelationTriple& t = frame.triples[i];
        if (t.relation.is_ambiguous()) continue;
        if (t.relation.kind.name != RelationName::HasQuality) continue;
        if (!t.object.is_word() || !rules.relative_markers.count(t.object.lemma))
            continue;

        // A marker qualifying another quality collapses onto it.
        bool collapsed = false;
        for (std::size_t j = 0; j < frame.triples.size(); ++j) {
            if (j == i) continue;
            RelationTriple& g = frame.triples[j];
            if (g.relation.is_ambiguous()) continue;
            if (g.relation.kind.name != RelationName::HasQuality) continue;
            if (g.object.is_word() && t.subject.is_word() &&
                g.object.lemma == t.subject.lemma) {
                g.relative_value = true;
                drop.push_back(i);
                collapsed = true;
                ++affected;
                break;
            }
        }
        if (!collapsed && !t.relative_value) {
            t.relative_value = true;
            ++affected;
        }
    }
    for (auto it = drop.rbegin(); it != drop.rend(); ++it)
        frame.triples.erase(frame.triples.begin() + static_cast<long>(*it));
    return affected;
}

} // namespace glossnet
