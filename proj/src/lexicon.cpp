#include "glossnet/lexicon.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace glossnet {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::set<std::string> parse_label_set(const std::string& field) {
    std::set<std::string> out;
    if (field == "-" || field.empty()) return out;
    for (const auto& item : split(field, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

std::string render_list(const std::vector<std::string>& items) {
    if (items.empty()) return "-";
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ',';
        out += s;
    }
    return out;
}

std::string render_set(const std::set<std::string>& items) {
    return render_list(std::vector<std::string>(items.begin(), items.end()));
}

} // namespace

std::string MeaningEntry::display_lemma() const {
    return reflexive ? lemma + "[si]" : lemma;
}

void Lexicon::add(MeaningEntry entry) {
    if (entry.lemma.empty())
        throw std::invalid_argument("entry " + entry.id.str() + " has empty lemma");
    MeaningId id = entry.id;
    std::string lemma = entry.lemma;
    if (!entries_.emplace(id, std::move(entry)).second)
        throw std::invalid_argument("duplicate meaning id " + id.str());
    lemma_index_[lemma].push_back(id);
}

const MeaningEntry* Lexicon::find(MeaningId id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

const MeaningEntry& Lexicon::at(MeaningId id) const {
    const MeaningEntry* e = find(id);
    if (!e) throw lookup_error("no entry with id " + id.str());
    return *e;
}

std::vector<const MeaningEntry*> Lexicon::lookup_lemma(const std::string& lemma) const {
    std::vector<const MeaningEntry*> out;
    auto it = lemma_index_.find(lemma);
    if (it == lemma_index_.end()) return out;
    out.reserve(it->second.size());
    for (MeaningId id : it->second) out.push_back(&entries_.at(id));
    return out;
}

std::vector<const MeaningEntry*> Lexicon::entries() const {
    std::vector<const MeaningEntry*> out;
    out.reserve(entries_.size());
    for (const auto& [id, e] : entries_) out.push_back(&e);
    return out;
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, 0, "cannot open lexicon file");

    Lexicon lex;
    std::map<MeaningId, long> seen_at;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        const std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 7)
            throw input_error(path, lineno,
                              "expected 7 tab-separated record fields, got " +
                                  std::to_string(fields.size()));
        MeaningEntry e;
        auto id = MeaningId::try_parse(fields[0]);
        if (!id) throw input_error(path, lineno, "malformed id field '" + fields[0] + "'");
        e.id = *id;

        e.lemma = fields[1];
        constexpr const char* kReflSuffix = "[si]";
        if (e.lemma.size() > 4 && e.lemma.ends_with(kReflSuffix)) {
            e.lemma.resize(e.lemma.size() - 4);
            e.reflexive = true;
        }
        if (e.lemma.empty())
            throw input_error(path, lineno, "empty lemma field");

        try {
            e.category = category_from_string(fields[2]);
        } catch (const std::exception& ex) {
            throw input_error(path, lineno, ex.what());
        }
        e.domain_labels = parse_label_set(fields[3]);
        e.usage_labels = parse_label_set(fields[4]);
        if (fields[5] != "-" && !fields[5].empty())
            e.valency = split(fields[5], ',');

        auto ref = MeaningId::try_parse(fields[6]);
        if (!ref)
            throw input_error(path, lineno, "malformed gloss-ref field '" + fields[6] + "'");
        e.gloss_ref = *ref;

        if (auto prev = seen_at.find(e.id); prev != seen_at.end())
            throw input_error(path, lineno,
                              "duplicate meaning id " + e.id.str() + " (first at line " +
                                  std::to_string(prev->second) + ")");
        seen_at[e.id] = lineno;
        lex.add(std::move(e));
    }
    return lex;
}

Lexicon load_lexicon(const std::string& lexicon_path, const std::string& parse_path) {
    Lexicon lex = load_lexicon(lexicon_path);
    const auto trees = load_parse_file(parse_path);

    Lexicon out;
    for (const MeaningEntry* e : lex.entries()) {
        MeaningEntry copy = *e;
        auto it = trees.find(copy.gloss_ref);
        if (it == trees.end())
            throw input_error(parse_path, 0,
                              "no parse record for gloss-ref " + copy.gloss_ref.str() +
                                  " (entry " + copy.id.str() + ")");
        copy.gloss = it->second;
        ValidationReport report = validate_tree(copy.gloss);
        if (!report.empty())
            throw input_error(parse_path, 0,
                              "invalid gloss tree " + copy.gloss_ref.str() + ": " +
                                  report.front().message);
        out.add(std::move(copy));
    }
    return out;
}

void save_lexicon(const Lexicon& lex, std::ostream& out) {
    for (const MeaningEntry* e : lex.entries()) {
        out << e->id.str() << '\t' << e->display_lemma() << '\t'
            << to_string(e->category) << '\t' << render_set(e->domain_labels) << '\t'
            << render_set(e->usage_labels) << '\t' << render_list(e->valency) << '\t'
            << e->gloss_ref.str() << '\n';
    }
}

} // namespace glossnet
