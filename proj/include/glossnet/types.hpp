#ifndef GLOSSNET_TYPES_HPP
#define GLOSSNET_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glossnet {

/// Error raised by parsers and loaders. Carries the offending file/line so
/// CLI error records can point at the exact input record.
class input_error : public std::runtime_error {
public:
    input_error(std::string file, long line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
          file_(std::move(file)), line_(line) {}

    const std::string& file() const { return file_; }
    long line() const { return line_; }

private:
    std::string file_;
    long line_;
};

class lookup_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Word categories
// ---------------------------------------------------------------------------

enum class WordCategory : std::uint8_t {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Prep,
    Det,
    Other,
};

std::string to_string(WordCategory c);
WordCategory category_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Meaning ids
// ---------------------------------------------------------------------------

/// Identifier of one word meaning. `sub == 0` names the lemma node of a
/// frame, `sub > 0` names gloss-internal units (assigned by token position).
struct MeaningId {
    std::uint64_t entry = 0;
    std::uint32_t sub = 0;

    MeaningId() = default;
    MeaningId(std::uint64_t e, std::uint32_t s) : entry(e), sub(s) {}

    MeaningId with_sub(std::uint32_t s) const { return MeaningId(entry, s); }

    auto operator<=>(const MeaningId&) const = default;

    /// Canonical "entry.sub" rendering, e.g. "101671.5".
    std::string str() const;

    static MeaningId parse(const std::string& text);
    static std::optional<MeaningId> try_parse(const std::string& text);
};

// ---------------------------------------------------------------------------
// Semantic tags
// ---------------------------------------------------------------------------

/// Closed inventory of terminal tags. Extensions go through the rule file
/// (which can only combine these names), not through code.
enum class Tag : std::uint8_t {
    Thing,
    Person,
    Animal,
    Vegetal,
    Instrument,
    Place,
    Substance,
    Set,
    PartOf,
    Action,
    ActOf,
    Activity,
    Change,
    Quality,
    Dimension,
    Plus,
    Minus,
    Manner,
    State,
    Event,
    Expression,
    SpeechAct,
    Cognition,
    Potential,
    Neg,
    Attribution,
    Existence,
    RelationTo,
    Function,
    Cause,
};

std::string to_string(Tag t);
Tag tag_from_string(const std::string& s);

/// Ordered tag list, general to specific; the first tag is the major class.
struct TagSequence {
    std::vector<Tag> tags;

    TagSequence() = default;
    TagSequence(std::initializer_list<Tag> t) : tags(t) {}
    explicit TagSequence(std::vector<Tag> t) : tags(std::move(t)) {}

    bool empty() const { return tags.empty(); }
    bool contains(Tag t) const;
    /// Appends `t` unless already present (sequences are duplicate-free).
    void append(Tag t);

    auto operator<=>(const TagSequence&) const = default;

    /// "ACTION,CHANGE,QUALITY" rendering; "[...]" wrapping is done by the
    /// unit renderer, not here.
    std::string str() const;
    static TagSequence parse(const std::string& text);
};

} // namespace glossnet

#endif
