#include "glossnet/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace glossnet {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

/// Yield grammar: NAME[+MOD...][/ALT], e.g. "HAS_PART/HAS_QUALITY",
/// "AGNT_OF+POTENTIAL", "HAS_PART+TOKEN".
void parse_yield(const std::string& text, FunctorFamily& family) {
    std::string primary = text;
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        primary = text.substr(0, slash);
        family.quality_alt = relation_name_from_string(text.substr(slash + 1));
    }
    RelationKind kind;
    bool first = true;
    for (const std::string& part : split(primary, '+')) {
        if (first) {
            kind.name = relation_name_from_string(part);
            first = false;
        } else if (part == "POTENTIAL") {
            kind.modifiers.insert(RelMod::Potential);
        } else if (part == "TOKEN") {
            kind.modifiers.insert(RelMod::Token);
        } else if (part == "NEG") {
            kind.modifiers.insert(RelMod::Neg);
        } else {
            throw std::invalid_argument("unknown yield modifier: '" + part + "'");
        }
    }
    family.yields = kind;
}

} // namespace

int EntityTagRule::specificity() const {
    int score = 0;
    if (head_match != "*") ++score;
    if (modifier_match != "-" && modifier_match != "*") ++score;
    return score;
}

std::string FunctorPattern::str() const {
    std::string out;
    if (!pre_prep.empty()) out += pre_prep + ":";
    out += word;
    if (!post_prep.empty()) out += "+" + post_prep;
    return out;
}

FunctorPattern FunctorPattern::parse(const std::string& text) {
    FunctorPattern p;
    std::string rest = text;
    if (const auto colon = rest.find(':'); colon != std::string::npos) {
        p.pre_prep = rest.substr(0, colon);
        rest = rest.substr(colon + 1);
    }
    if (const auto plus = rest.find('+'); plus != std::string::npos) {
        p.word = rest.substr(0, plus);
        p.post_prep = rest.substr(plus + 1);
    } else {
        p.word = rest;
    }
    if (p.word.empty())
        throw std::invalid_argument("functor pattern without content word: '" + text + "'");
    return p;
}

PrepRole prep_role_from_string(const std::string& s) {
    if (s == "con") return PrepRole::Con;
    if (s == "per") return PrepRole::Per;
    if (s == "di") return PrepRole::Di;
    if (s == "a") return PrepRole::A;
    if (s == "da") return PrepRole::Da;
    throw std::invalid_argument("unknown preposition role: '" + s + "'");
}

bool RuleSet::in_class(const std::string& cls, const std::string& lemma) const {
    auto it = wordclasses.find(cls);
    return it != wordclasses.end() && it->second.count(lemma) != 0;
}

bool RuleSet::key_matches(const std::string& key, const std::string& lemma) const {
    if (key == "*") return true;
    if (!key.empty() && key[0] == '@') return in_class(key.substr(1), lemma);
    return key == lemma;
}

const TagSequence* RuleSet::seed_tags(const std::string& lemma) const {
    auto it = seeds.find(lemma);
    return it == seeds.end() ? nullptr : &it->second;
}

const VariantGroup* RuleSet::group_of(const std::string& lemma) const {
    for (const auto& g : groups)
        if (std::find(g.lemmas.begin(), g.lemmas.end(), lemma) != g.lemmas.end())
            return &g;
    return nullptr;
}

const FunctorFamily* RuleSet::match_functor(const std::string& lemma,
                                            const std::string& pre_prep,
                                            const std::string& post_prep) const {
    for (const auto& family : functor_families) {
        for (const auto& p : family.patterns) {
            if (p.word != lemma) continue;
            if (!p.pre_prep.empty() && p.pre_prep != pre_prep) continue;
            if (!p.post_prep.empty() && p.post_prep != post_prep) continue;
            return &family;
        }
    }
    return nullptr;
}

bool RuleSet::is_functor_word(const std::string& lemma) const {
    for (const auto& family : functor_families)
        for (const auto& p : family.patterns)
            if (p.word == lemma) return true;
    return false;
}

std::optional<PrepRole> RuleSet::prep_role(const std::string& lemma) const {
    auto it = prep_roles.find(lemma);
    if (it == prep_roles.end()) return std::nullopt;
    return it->second;
}

RuleSet load_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, 0, "cannot open rule file");

    RuleSet rules;
    std::string line;
    long lineno = 0;

    auto read_word_list = [&](const std::vector<std::string>& toks,
                              std::set<std::string>& target) {
        for (std::size_t i = 1; i < toks.size(); ++i) target.insert(toks[i]);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;

        const std::vector<std::string> toks = tokenize(text);
        const std::string& record = toks[0];
        try {
            if (record == "seed") {
                if (toks.size() != 3) throw std::invalid_argument("seed needs: lemma tags");
                rules.seeds[toks[1]] = TagSequence::parse(toks[2]);
            } else if (record == "group") {
                // group <name> <lemma>... : <tags>
                VariantGroup g;
                g.name = toks.at(1);
                std::size_t i = 2;
                for (; i < toks.size() && toks[i] != ":"; ++i) g.lemmas.push_back(toks[i]);
                if (i + 1 < toks.size() && toks[i] == ":")
                    g.tags = TagSequence::parse(toks[i + 1]);
                if (g.lemmas.empty())
                    throw std::invalid_argument("group without member lemmas");
                for (const auto& lemma : g.lemmas) {
                    if (rules.group_of(lemma))
                        throw std::invalid_argument("lemma '" + lemma +
                                                    "' already belongs to a variant group");
                    if (!g.tags.empty()) rules.seeds[lemma] = g.tags;
                }
                rules.groups.push_back(std::move(g));
            } else if (record == "wordclass") {
                if (toks.size() < 3) throw std::invalid_argument("wordclass needs members");
                auto& cls = rules.wordclasses[toks[1]];
                for (std::size_t i = 2; i < toks.size(); ++i) cls.insert(toks[i]);
            } else if (record == "rule") {
                // rule <priority> <category> <head-match> [mod=<key>] <tags> [+suffix]
                if (toks.size() < 5) throw std::invalid_argument("short rule record");
                EntityTagRule r;
                r.line = lineno;
                r.priority = std::stoi(toks[1]);
                r.category = category_from_string(toks[2]);
                r.head_match = toks[3];
                std::size_t i = 4;
                if (toks[i].rfind("mod=", 0) == 0) {
                    r.modifier_match = toks[i].substr(4);
                    ++i;
                }
                if (i >= toks.size()) throw std::invalid_argument("rule without tags");
                r.emit = TagSequence::parse(toks[i]);
                ++i;
                if (i < toks.size() && toks[i][0] == '+')
                    r.suffix = TagSequence::parse(toks[i].substr(1));
                for (const auto& other : rules.tag_rules) {
                    if (other.category == r.category && other.head_match == r.head_match &&
                        other.modifier_match == r.modifier_match &&
                        other.priority == r.priority)
                        throw std::invalid_argument(
                            "rule duplicates match key and priority of line " +
                            std::to_string(other.line));
                }
                rules.tag_rules.push_back(std::move(r));
            } else if (record == "mod") {
                if (toks.size() != 3) throw std::invalid_argument("mod needs: lemma tags");
                rules.modifier_tags[toks[1]] = TagSequence::parse(toks[2]);
            } else if (record == "functor") {
                // functor <name> <yield> <pattern>[;<pattern>...]
                if (toks.size() < 4) throw std::invalid_argument("short functor record");
                FunctorFamily family;
                family.name = toks[1];
                parse_yield(toks[2], family);
                std::string pattern_text;
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    if (!pattern_text.empty()) pattern_text += ' ';
                    pattern_text += toks[i];
                }
                for (std::string part : split(pattern_text, ';')) {
                    part = trim(part);
                    if (part.empty()) continue;
                    FunctorPattern p = FunctorPattern::parse(part);
                    for (const auto& other : rules.functor_families)
                        for (const auto& q : other.patterns)
                            if (q.word == p.word && q.pre_prep == p.pre_prep &&
                                q.post_prep == p.post_prep)
                                throw std::invalid_argument("pattern '" + p.str() +
                                                            "' already belongs to family '" +
                                                            other.name + "'");
                    family.patterns.push_back(std::move(p));
                }
                if (family.patterns.empty())
                    throw std::invalid_argument("functor family without patterns");
                rules.functor_families.push_back(std::move(family));
            } else if (record == "marker") {
                read_word_list(toks, rules.relative_markers);
            } else if (record == "quantifier") {
                read_word_list(toks, rules.quantifiers);
            } else if (record == "partword") {
                read_word_list(toks, rules.part_words);
            } else if (record == "denomword") {
                read_word_list(toks, rules.denom_words);
            } else if (record == "typeword") {
                read_word_list(toks, rules.type_words);
            } else if (record == "actword") {
                read_word_list(toks, rules.act_words);
            } else if (record == "belongverb") {
                read_word_list(toks, rules.belong_verbs);
            } else if (record == "skipword") {
                read_word_list(toks, rules.skip_words);
            } else if (record == "prep") {
                if (toks.size() != 3) throw std::invalid_argument("prep needs: lemma role");
                rules.prep_roles[toks[1]] = prep_role_from_string(toks[2]);
            } else {
                throw std::invalid_argument("unknown record kind: '" + record + "'");
            }
        } catch (const std::exception& e) {
            throw input_error(path, lineno, e.what());
        }
    }
    return rules;
}

} // namespace glossnet
