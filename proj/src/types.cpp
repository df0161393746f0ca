#include "glossnet/types.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace glossnet {

namespace {

struct CategoryName {
    WordCategory cat;
    const char* name;
};

constexpr std::array<CategoryName, 8> kCategoryNames = {{
    {WordCategory::Noun, "NOUN"},
    {WordCategory::Verb, "VERB"},
    {WordCategory::Adj, "ADJ"},
    {WordCategory::Adv, "ADV"},
    {WordCategory::Pron, "PRON"},
    {WordCategory::Prep, "PREP"},
    {WordCategory::Det, "DET"},
    {WordCategory::Other, "OTHER"},
}};

struct TagName {
    Tag tag;
    const char* name;
};

constexpr std::array<TagName, 30> kTagNames = {{
    {Tag::Thing, "THING"},
    {Tag::Person, "PERSON"},
    {Tag::Animal, "ANIMAL"},
    {Tag::Vegetal, "VEGETAL"},
    {Tag::Instrument, "INSTRUMENT"},
    {Tag::Place, "PLACE"},
    {Tag::Substance, "SUBSTANCE"},
    {Tag::Set, "SET"},
    {Tag::PartOf, "PART_OF"},
    {Tag::Action, "ACTION"},
    {Tag::ActOf, "ACT_OF"},
    {Tag::Activity, "ACTIVITY"},
    {Tag::Change, "CHANGE"},
    {Tag::Quality, "QUALITY"},
    {Tag::Dimension, "DIMENSION"},
    {Tag::Plus, "PLUS"},
    {Tag::Minus, "MINUS"},
    {Tag::Manner, "MANNER"},
    {Tag::State, "STATE"},
    {Tag::Event, "EVENT"},
    {Tag::Expression, "EXPRESSION"},
    {Tag::SpeechAct, "SPEECH_ACT"},
    {Tag::Cognition, "COGNITION"},
    {Tag::Potential, "POTENTIAL"},
    {Tag::Neg, "NEG"},
    {Tag::Attribution, "ATTRIBUTION"},
    {Tag::Existence, "EXISTENCE"},
    {Tag::RelationTo, "RELATION_TO"},
    {Tag::Function, "FUNCTION"},
    {Tag::Cause, "CAUSE"},
}};

} // namespace

std::string to_string(WordCategory c) {
    for (const auto& n : kCategoryNames)
        if (n.cat == c) return n.name;
    return "OTHER";
}

WordCategory category_from_string(const std::string& s) {
    for (const auto& n : kCategoryNames)
        if (s == n.name) return n.cat;
    throw std::invalid_argument("unknown word category: '" + s + "'");
}

std::string to_string(Tag t) {
    for (const auto& n : kTagNames)
        if (n.tag == t) return n.name;
    throw std::logic_error("unnamed tag value");
}

Tag tag_from_string(const std::string& s) {
    for (const auto& n : kTagNames)
        if (s == n.name) return n.tag;
    throw std::invalid_argument("unknown tag: '" + s + "'");
}

std::string MeaningId::str() const {
    return std::to_string(entry) + "." + std::to_string(sub);
}

std::optional<MeaningId> MeaningId::try_parse(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= text.size())
        return std::nullopt;
    MeaningId id;
    const char* b = text.data();
    auto r1 = std::from_chars(b, b + dot, id.entry);
    if (r1.ec != std::errc() || r1.ptr != b + dot) return std::nullopt;
    auto r2 = std::from_chars(b + dot + 1, b + text.size(), id.sub);
    if (r2.ec != std::errc() || r2.ptr != b + text.size()) return std::nullopt;
    return id;
}

MeaningId MeaningId::parse(const std::string& text) {
    auto id = try_parse(text);
    if (!id) throw std::invalid_argument("malformed meaning id: '" + text + "'");
    return *id;
}

bool TagSequence::contains(Tag t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

void TagSequence::append(Tag t) {
    if (!contains(t)) tags.push_back(t);
}

std::string TagSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i) out += ',';
        out += to_string(tags[i]);
    }
    return out;
}

TagSequence TagSequence::parse(const std::string& text) {
    TagSequence seq;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) seq.tags.push_back(tag_from_string(item));
    return seq;
}

} // namespace glossnet
