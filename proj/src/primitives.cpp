#include "glossnet/primitives.hpp"

#include <algorithm>

#include "glossnet/net.hpp"

namespace glossnet {

long HeadFrequencyTable::total() const {
    long sum = 0;
    for (const auto& [lemma, n] : rows) sum += n;
    return sum;
}

long HeadFrequencyTable::count(const std::string& lemma) const {
    auto it = rows.find(lemma);
    return it == rows.end() ? 0 : it->second;
}

HeadFrequencyTable count_heads(const Lexicon& lex, HeadCountReport* report) {
    HeadFrequencyTable table;
    for (const MeaningEntry* e : lex.entries()) {
        ValidationReport violations = validate_tree(e->gloss);
        if (!violations.empty()) {
            if (report)
                report->errors.push_back("entry " + e->id.str() + ": " +
                                         violations.front().message);
            continue;
        }
        const DependencyNode& head = gloss_head(e->gloss);
        ++table.rows[head.lemma];
        if (report) {
            ++report->processed;
            if (head.lemma == "fare") {
                // Causative reading: an infinitive verb as object.
                for (const DependencyNode* child : e->gloss.children(head.index))
                    if (child->dep == DepLabel::Obj &&
                        child->category == WordCategory::Verb &&
                        child->has_feature("inf"))
                        ++report->causative_fare;
            }
        }
    }
    return table;
}

bool PrimitiveInventory::contains(const std::string& lemma) const {
    return entries.count(lemma) != 0;
}

const TagSequence* PrimitiveInventory::lookup(const std::string& lemma) const {
    auto it = entries.find(lemma);
    if (it == entries.end() || it->second.empty()) return nullptr;
    return &it->second;
}

PrimitiveInventory inventory_from_rules(const RuleSet& rules) {
    PrimitiveInventory inv;
    inv.entries = rules.seeds;
    inv.variant_groups = rules.groups;
    return inv;
}

PrimitiveInventory build_inventory(const HeadFrequencyTable& table,
                                   const PrimitiveInventory& seeds,
                                   const std::function<bool(const std::string&)>& stop) {
    PrimitiveInventory out = seeds;

    // Group counts are summed before thresholding; a group is admitted as
    // one merged concept.
    std::set<std::string> grouped;
    for (const auto& g : seeds.variant_groups) {
        long sum = 0;
        bool all_stop = true;
        for (const auto& lemma : g.lemmas) {
            grouped.insert(lemma);
            const long n = table.count(lemma);
            sum += n;
            if (n > 0 && !stop(lemma)) all_stop = false;
        }
        if (sum >= table.threshold && all_stop) {
            for (const auto& lemma : g.lemmas) {
                if (!g.tags.empty())
                    out.entries[lemma] = g.tags;
                else if (!out.contains(lemma))
                    out.pending.insert(lemma);
            }
        }
    }

    for (const auto& [lemma, n] : table.rows) {
        if (grouped.count(lemma) || out.contains(lemma)) continue;
        if (n >= table.threshold && stop(lemma)) {
            out.entries[lemma] = TagSequence{};
            out.pending.insert(lemma);
        }
    }
    return out;
}

namespace {

/// Lexical TOKEN_OF edges of the net, lemma -> target lemmas. Pronoun and
/// terminal targets are chain stops and do not appear.
std::map<std::string, std::set<std::string>> token_edges(const SemanticNet& net) {
    std::map<std::string, std::set<std::string>> edges;
    auto lexical = [](WordCategory c) {
        return c == WordCategory::Noun || c == WordCategory::Verb ||
               c == WordCategory::Adj || c == WordCategory::Adv;
    };
    net.for_each_triple([&](const RelationTriple& t, MeaningId) {
        if (t.relation.is_ambiguous()) return;
        if (t.relation.kind.name != RelationName::TokenOf) return;
        if (t.relation.kind.attribution) return;
        if (!t.subject.is_word() || !t.object.is_word()) return;
        if (!lexical(t.object.category)) return;
        edges[t.subject.lemma].insert(t.object.lemma);
    });
    return edges;
}

/// Every maximal walk from `start` must end back at `start`. A walk ends
/// where no outgoing edge exists, where it would revisit a node on the
/// path, or at the depth limit.
bool walks_end_at_start(const std::map<std::string, std::set<std::string>>& edges,
                        const std::string& start, std::vector<std::string>& path,
                        int depth_limit) {
    const std::string& current = path.back();
    auto it = edges.find(current);
    if (it == edges.end() || it->second.empty())
        return current == start;
    if (static_cast<int>(path.size()) > depth_limit)
        return current == start;
    for (const std::string& next : it->second) {
        if (std::find(path.begin(), path.end(), next) != path.end()) {
            if (next != start) return false; // cycle not through the lemma
            continue;
        }
        path.push_back(next);
        const bool ok = walks_end_at_start(edges, start, path, depth_limit);
        path.pop_back();
        if (!ok) return false;
    }
    return true;
}

} // namespace

bool stop_status(const SemanticNet& net, const std::string& lemma, int depth_limit) {
    if (!net.has_lemma(lemma))
        throw lookup_error("lemma '" + lemma + "' not present in the net");
    const auto edges = token_edges(net);
    std::vector<std::string> path{lemma};
    return walks_end_at_start(edges, lemma, path, depth_limit);
}

} // namespace glossnet
