#include "glossnet/net.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <ostream>
#include <sstream>

namespace glossnet {

namespace {

std::string triple_key(const RelationTriple& t) {
    return t.subject.str() + "\x1f" + t.relation.str() + "\x1f" + t.object.str();
}

bool is_lexical(WordCategory c) {
    return c == WordCategory::Noun || c == WordCategory::Verb ||
           c == WordCategory::Adj || c == WordCategory::Adv;
}

} // namespace

void SemanticNet::add_frame(SemanticFrame f) {
    const MeaningId id = f.meaning;
    if (frames_.count(id))
        throw std::invalid_argument("duplicate frame for meaning id " + id.str() +
                                    " (lemma '" + f.lemma + "' and '" +
                                    frames_.at(id).lemma + "')");
    for (const RelationTriple& t : f.triples) triple_index_.insert(triple_key(t));
    lemma_index_[f.lemma].insert(id);
    frames_.emplace(id, std::move(f));
}

const SemanticFrame* SemanticNet::frame(MeaningId id) const {
    auto it = frames_.find(id);
    return it == frames_.end() ? nullptr : &it->second;
}

std::vector<const SemanticFrame*> SemanticNet::frames() const {
    std::vector<const SemanticFrame*> out;
    out.reserve(frames_.size());
    for (const auto& [id, f] : frames_) out.push_back(&f);
    return out;
}

std::vector<const SemanticFrame*> SemanticNet::frames_for(const std::string& lemma) const {
    std::vector<const SemanticFrame*> out;
    auto it = lemma_index_.find(lemma);
    if (it == lemma_index_.end()) return out;
    for (MeaningId id : it->second) out.push_back(&frames_.at(id));
    return out;
}

bool SemanticNet::has_lemma(const std::string& lemma) const {
    return lemma_index_.count(lemma) != 0;
}

bool SemanticNet::add_derived(RelationTriple t, MeaningId source) {
    if (t.provenance == Provenance::Direct || t.provenance == Provenance::Raised)
        throw std::invalid_argument("derived triples need derived provenance");
    const std::string key = triple_key(t);
    if (triple_index_.count(key)) return false;
    triple_index_.insert(key);
    derived_.push_back({source, std::move(t)});
    return true;
}

bool SemanticNet::contains(const RelationTriple& t) const {
    return triple_index_.count(triple_key(t)) != 0;
}

void SemanticNet::for_each_triple(
    const std::function<void(const RelationTriple&, MeaningId)>& fn) const {
    for (const auto& [id, f] : frames_)
        for (const RelationTriple& t : f.triples) fn(t, id);
    for (const DerivedEntry& d : derived_) fn(d.triple, d.source);
}

SemanticNet build_net(std::vector<SemanticFrame> frames) {
    SemanticNet net;
    for (SemanticFrame& f : frames) net.add_frame(std::move(f));
    return net;
}

// ---------------------------------------------------------------------------
// Taxonomy
// ---------------------------------------------------------------------------

namespace {

struct TokenEdge {
    std::string target;
    WordCategory category = WordCategory::Noun;
    bool reflexive = false;
};

/// Lexical TOKEN_OF edges lemma -> targets, plus each lemma's own unit
/// category. Pronoun and terminal links do not continue chains.
std::map<std::string, std::vector<TokenEdge>> lexical_token_edges(const SemanticNet& net) {
    std::map<std::string, std::vector<TokenEdge>> edges;
    std::set<std::string> seen;
    net.for_each_triple([&](const RelationTriple& t, MeaningId) {
        if (t.relation.is_ambiguous()) return;
        const RelationKind& k = t.relation.kind;
        if (k.name != RelationName::TokenOf || k.attribution) return;
        if (k.has(RelMod::Neg)) return; // negated links derive nothing
        if (!t.subject.is_word() || !t.object.is_word()) return;
        if (!is_lexical(t.object.category)) return;
        const std::string key = t.subject.lemma + "\x1f" + t.object.lemma;
        if (!seen.insert(key).second) return;
        edges[t.subject.lemma].push_back(
            {t.object.lemma, t.object.category, t.object.reflexive});
    });
    return edges;
}

} // namespace

std::vector<RelationTriple> hypernym_chain(const SemanticNet& net,
                                           const std::string& start, int depth_limit) {
    if (!net.has_lemma(start))
        throw lookup_error("lemma '" + start + "' not present in the net");
    const auto edges = lexical_token_edges(net);
    const SemanticFrame* sf = net.frames_for(start).front();
    const SemanticUnit subject =
        SemanticUnit::word(start, sf->category, sf->reflexive);

    std::vector<RelationTriple> out;
    std::set<std::string> visited{start};
    std::deque<std::pair<std::string, int>> queue{{start, 0}};
    while (!queue.empty()) {
        const auto [lemma, depth] = queue.front();
        queue.pop_front();
        if (depth >= depth_limit) continue;
        auto it = edges.find(lemma);
        if (it == edges.end()) continue;
        for (const TokenEdge& e : it->second) {
            if (!visited.insert(e.target).second) continue;
            RelationTriple t;
            t.subject = subject;
            t.relation = RelationSlot(RelationName::TokenOf);
            t.object = SemanticUnit::word(e.target, e.category, e.reflexive);
            t.provenance = Provenance::DerivedTaxonomy;
            out.push_back(std::move(t));
            queue.push_back({e.target, depth + 1});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

int invert_relations(SemanticNet& net) {
    struct Pending {
        MeaningId source;
        RelationTriple triple;
    };
    std::vector<Pending> pending;
    net.for_each_triple([&](const RelationTriple& t, MeaningId source) {
        if (t.relation.is_ambiguous()) return;
        const RelationKind& k = t.relation.kind;
        if (k.attribution) return;
        const auto inv = inverse_of(k.name);
        if (!inv) return;
        if (t.object.is_terminal() || t.subject.is_terminal()) return;
        RelationTriple r;
        // Units swap as they stand (wrappers included) so that inverting
        // twice reproduces the original exactly.
        r.subject = t.object;
        r.object = t.subject;
        r.relation = RelationSlot(RelationKind(*inv, k.modifiers));
        r.provenance = Provenance::DerivedInverse;
        r.relative_value = t.relative_value;
        pending.push_back({source, std::move(r)});
    });
    int added = 0;
    for (Pending& p : pending)
        if (net.add_derived(std::move(p.triple), p.source)) ++added;
    return added;
}

// ---------------------------------------------------------------------------
// Inheritance
// ---------------------------------------------------------------------------

int inherit_attributes(SemanticNet& net, int depth_limit) {
    int added = 0;

    // Taxonomy closure for every lemma with a frame.
    std::set<std::string> lemmas;
    for (const SemanticFrame* f : net.frames()) lemmas.insert(f->lemma);
    for (const std::string& lemma : lemmas) {
        const MeaningId source = net.frames_for(lemma).front()->meaning;
        for (RelationTriple& t : hypernym_chain(net, lemma, depth_limit))
            if (net.add_derived(std::move(t), source)) ++added;
    }

    // Downward copy to fixpoint: a token collects the type's content.
    bool changed = true;
    while (changed) {
        changed = false;
        struct Hyper {
            std::string token;  // x
            WordCategory token_cat;
            bool token_refl;
            std::string type;   // y
            MeaningId source;
        };
        std::vector<Hyper> links;
        std::set<std::string> seen;
        net.for_each_triple([&](const RelationTriple& t, MeaningId source) {
            if (t.relation.is_ambiguous()) return;
            const RelationKind& k = t.relation.kind;
            if (k.name != RelationName::TokenOf || k.attribution) return;
            if (k.has(RelMod::Neg)) return; // negated links derive nothing
            if (!t.subject.is_word() || !t.object.is_word()) return;
            if (!is_lexical(t.object.category)) return;
            const std::string key = t.subject.lemma + "\x1f" + t.object.lemma;
            if (!seen.insert(key).second) return;
            links.push_back({t.subject.lemma, t.subject.category, t.subject.reflexive,
                             t.object.lemma, source});
        });

        for (const Hyper& link : links) {
            std::vector<std::pair<RelationTriple, MeaningId>> copies;
            net.for_each_triple([&](const RelationTriple& t, MeaningId source) {
                if (!t.subject.is_word() || t.subject.lemma != link.type) return;
                if (!t.relation.is_ambiguous()) {
                    const RelationName n = t.relation.kind.name;
                    if (n == RelationName::TokenOf || n == RelationName::HasToken)
                        return; // the taxonomy itself is closed separately
                }
                RelationTriple copy = t;
                copy.subject =
                    SemanticUnit::word(link.token, link.token_cat, link.token_refl);
                copy.subject_node = 0;
                copy.source_node = 0;
                copy.provenance = Provenance::DerivedTaxonomy;
                copies.push_back({std::move(copy), source});
            });
            for (auto& [copy, source] : copies) {
                if (net.add_derived(std::move(copy), source)) {
                    ++added;
                    changed = true;
                }
            }
        }
    }
    return added;
}

// ---------------------------------------------------------------------------
// Role inference
// ---------------------------------------------------------------------------

int infer_roles(SemanticNet& net) {
    int added = 0;

    auto link_of = [](const SemanticUnit& u) { return u.link_key(); };

    bool changed = true;
    while (changed) {
        changed = false;

        struct Fact {
            RelationTriple t;
            MeaningId source;
        };
        std::vector<Fact> agents, objects, tokens;
        net.for_each_triple([&](const RelationTriple& t, MeaningId source) {
            if (t.relation.is_ambiguous() || t.relation.kind.attribution) return;
            if (t.relation.kind.has(RelMod::Neg)) return; // premises hold positively
            switch (t.relation.kind.name) {
                case RelationName::AgntOf: agents.push_back({t, source}); break;
                case RelationName::HasObj: objects.push_back({t, source}); break;
                case RelationName::TokenOf: tokens.push_back({t, source}); break;
                default: break;
            }
        });

        // p & q |- r : AGNT_OF(n; v1) & HAS_OBJ(v1; o) & TOKEN_OF(v2; v1)
        // & HAS_OBJ(v2; o)  =>  AGNT_OF(n; v2)
        for (const Fact& p1 : agents) {
            const std::string n = link_of(p1.t.subject);
            const std::string v1 = link_of(p1.t.object);
            if (n.empty() || v1.empty()) continue;
            for (const Fact& p2 : objects) {
                if (link_of(p2.t.subject) != v1) continue;
                const std::string o = link_of(p2.t.object);
                if (o.empty()) continue;
                for (const Fact& q1 : tokens) {
                    if (link_of(q1.t.object) != v1) continue;
                    const std::string v2 = link_of(q1.t.subject);
                    if (v2.empty() || v2 == v1 || v2 == n) continue;
                    for (const Fact& q2 : objects) {
                        if (link_of(q2.t.subject) != v2) continue;
                        if (link_of(q2.t.object) != o) continue;
                        RelationTriple r;
                        r.subject = p1.t.subject;
                        r.subject.wrap.reset();
                        r.relation = RelationSlot(RelationName::AgntOf);
                        r.object = q1.t.subject;
                        r.object.wrap.reset();
                        r.provenance = Provenance::DerivedInference;
                        if (net.add_derived(std::move(r), p1.source)) {
                            ++added;
                            changed = true;
                        }
                    }
                }
            }
        }

        // New agents propagate down the taxonomy: a token of the agent is
        // an agent as well.
        std::vector<Fact> inferred;
        for (const DerivedEntry& d : net.derived()) {
            if (d.triple.provenance != Provenance::DerivedInference &&
                d.triple.provenance != Provenance::DerivedRole)
                continue;
            if (d.triple.relation.is_ambiguous() ||
                d.triple.relation.kind.name != RelationName::AgntOf)
                continue;
            inferred.push_back({d.triple, d.source});
        }
        for (const Fact& r : inferred) {
            const std::string agent = link_of(r.t.subject);
            for (const Fact& tok : tokens) {
                if (link_of(tok.t.object) != agent) continue;
                if (!tok.t.subject.is_word()) continue;
                RelationTriple down;
                down.subject = tok.t.subject;
                down.subject.wrap.reset();
                down.relation = RelationSlot(RelationName::AgntOf);
                down.object = r.t.object;
                down.provenance = Provenance::DerivedRole;
                if (net.add_derived(std::move(down), tok.source)) {
                    ++added;
                    changed = true;
                }
            }

            // PERSON-tagged agents mark the action as a human activity.
            bool person = false;
            for (const SemanticFrame* f : r.t.subject.is_word()
                                              ? net.frames_for(r.t.subject.lemma)
                                              : std::vector<const SemanticFrame*>{}) {
                for (const RelationTriple& t : f->triples) {
                    if (t.relation.is_ambiguous()) continue;
                    if (t.relation.kind.name != RelationName::TokenOf) continue;
                    if (t.subject_node != 0 || !t.object.is_terminal()) continue;
                    if (t.object.tags.contains(Tag::Person)) person = true;
                }
            }
            if (person) {
                RelationTriple tag;
                tag.subject = r.t.object;
                tag.subject.wrap.reset();
                tag.relation = RelationSlot(RelationName::HasTag);
                tag.object = SemanticUnit::terminal({Tag::Person});
                tag.provenance = Provenance::DerivedRole;
                if (net.add_derived(std::move(tag), r.source)) {
                    ++added;
                    changed = true;
                }
            }
        }
    }
    return added;
}

// ---------------------------------------------------------------------------
// Query
// ---------------------------------------------------------------------------

namespace {

bool unit_matches(const std::string& pattern, const SemanticUnit& u) {
    if (pattern == "*") return true;
    if (pattern == u.str()) return true;
    return u.is_word() && pattern == u.lemma;
}

} // namespace

bool TriplePattern::matches(const RelationTriple& t) const {
    if (!unit_matches(subject, t.subject)) return false;
    if (!unit_matches(object, t.object)) return false;
    if (relation == "*") return true;
    return relation == t.relation.str();
}

std::vector<QueryResult> query(const SemanticNet& net, const TriplePattern& pattern) {
    std::vector<QueryResult> out;
    net.for_each_triple([&](const RelationTriple& t, MeaningId source) {
        if (pattern.matches(t)) out.push_back({source, t});
    });
    return out;
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

namespace {

std::string net_line(MeaningId id, int sub, const RelationTriple& t) {
    std::string col0 = std::to_string(id.entry) + ".";
    col0 += sub < 0 ? "-" : std::to_string(sub);
    std::string line = col0;
    line += '\t';
    line += t.subject.str();
    line += '\t';
    line += t.relation.str();
    if (t.relative_value) line += "~RELATIVE";
    line += '\t';
    line += t.object.str();
    line += '\t';
    line += to_string(t.provenance);
    return line;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace

void save_net(const SemanticNet& net, std::ostream& out) {
    for (const SemanticFrame* f : net.frames()) {
        out << "@ " << f->meaning.str() << ' '
            << (f->reflexive ? f->lemma + "[si]" : f->lemma) << ' '
            << to_string(f->category) << '\n';
        std::vector<std::pair<int, std::string>> lines;
        lines.reserve(f->triples.size());
        for (const RelationTriple& t : f->triples)
            lines.emplace_back(t.subject_node, net_line(f->meaning, t.subject_node, t));
        std::sort(lines.begin(), lines.end());
        for (const auto& [sub, line] : lines) out << line << '\n';
    }
    out << "@ derived\n";
    std::vector<std::string> lines;
    lines.reserve(net.derived().size());
    for (const DerivedEntry& d : net.derived())
        lines.push_back(net_line(d.source, -1, d.triple));
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out << line << '\n';
}

SemanticNet load_net(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, 0, "cannot open net file");

    SemanticNet net;
    std::optional<SemanticFrame> current;
    bool in_derived = false;
    std::vector<std::pair<MeaningId, RelationTriple>> derived;
    std::string line;
    long lineno = 0;

    auto flush = [&]() {
        if (current) {
            net.add_frame(std::move(*current));
            current.reset();
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '@') {
            flush();
            std::stringstream header(line.substr(1));
            std::string idtext;
            header >> idtext;
            if (idtext == "derived") {
                in_derived = true;
                continue;
            }
            std::string lemma, cat;
            header >> lemma >> cat;
            if (lemma.empty() || cat.empty())
                throw input_error(path, lineno, "malformed frame header");
            SemanticFrame f;
            f.meaning = MeaningId::parse(idtext);
            if (lemma.size() > 4 && lemma.ends_with("[si]")) {
                lemma.resize(lemma.size() - 4);
                f.reflexive = true;
            }
            f.lemma = lemma;
            f.category = category_from_string(cat);
            current = std::move(f);
            in_derived = false;
            continue;
        }
        const std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 5)
            throw input_error(path, lineno, "expected 5 tab-separated triple fields");
        try {
            RelationTriple t;
            const std::string& col0 = fields[0];
            const auto dot = col0.find('.');
            if (dot == std::string::npos)
                throw std::invalid_argument("malformed id column '" + col0 + "'");
            MeaningId source;
            source.entry = std::stoull(col0.substr(0, dot));
            const std::string subpart = col0.substr(dot + 1);
            t.subject_node = subpart == "-" ? -1 : std::stoi(subpart);
            t.subject = SemanticUnit::parse(fields[1]);
            std::string rel = fields[2];
            if (rel.size() > 9 && rel.ends_with("~RELATIVE")) {
                rel.resize(rel.size() - 9);
                t.relative_value = true;
            }
            t.relation = RelationSlot::parse(rel);
            t.object = SemanticUnit::parse(fields[3]);
            t.provenance = provenance_from_string(fields[4]);
            if (in_derived) {
                t.subject_node = 0;
                derived.push_back({source, std::move(t)});
            } else if (current) {
                current->triples.push_back(std::move(t));
            } else {
                throw std::invalid_argument("triple line outside a frame");
            }
        } catch (const std::exception& e) {
            throw input_error(path, lineno, e.what());
        }
    }
    flush();
    for (auto& [source, t] : derived) net.add_derived(std::move(t), source);
    return net;
}

void export_graph(const SemanticNet& net, std::ostream& out) {
    std::set<std::string> nodes;
    std::vector<std::string> edge_lines;
    net.for_each_triple([&](const RelationTriple& t, MeaningId) {
        const std::string s = t.subject.str();
        const std::string o = t.object.str();
        nodes.insert(s);
        nodes.insert(o);
        const bool derived = t.provenance != Provenance::Direct &&
                             t.provenance != Provenance::Raised;
        std::string line = "  \"" + s + "\" -> \"" + o + "\" [label=\"" +
                           t.relation.str() + "\"";
        if (derived) line += ", style=dashed";
        line += "];";
        edge_lines.push_back(std::move(line));
    });
    std::sort(edge_lines.begin(), edge_lines.end());
    edge_lines.erase(std::unique(edge_lines.begin(), edge_lines.end()),
                     edge_lines.end());

    out << "digraph semantic_net {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontsize=10];\n";
    for (const std::string& n : nodes) out << "  \"" << n << "\";\n";
    for (const std::string& e : edge_lines) out << e << '\n';
    out << "}\n";
}

} // namespace glossnet
