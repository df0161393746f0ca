#ifndef GLOSSNET_LEXICON_HPP
#define GLOSSNET_LEXICON_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glossnet/gloss.hpp"
#include "glossnet/types.hpp"

namespace glossnet {

/// One word-meaning. The gloss tree is attached from the sibling parse file
/// during loading; `gloss_ref` keeps the key it was attached by.
struct MeaningEntry {
    MeaningId id;
    std::string lemma; // canonical lowercase, clitics stripped
    bool reflexive = false;
    WordCategory category = WordCategory::Noun;
    std::set<std::string> domain_labels;
    std::set<std::string> usage_labels;
    std::vector<std::string> valency;
    MeaningId gloss_ref;
    DependencyTree gloss;

    /// "muovere[si]" when the reflexive flag is set, else the plain lemma.
    std::string display_lemma() const;
};

/// Immutable after load; safe for concurrent reads.
class Lexicon {
public:
    void add(MeaningEntry entry); // throws on duplicate id

    const MeaningEntry* find(MeaningId id) const;
    const MeaningEntry& at(MeaningId id) const; // throws when absent

    /// All entries for a lemma (exact, case-sensitive match on the canonical
    /// lowercase lemma), in load order. Empty when none.
    std::vector<const MeaningEntry*> lookup_lemma(const std::string& lemma) const;

    /// Entries in id order for deterministic iteration.
    std::vector<const MeaningEntry*> entries() const;
    std::size_t size() const { return entries_.size(); }

private:
    std::map<MeaningId, MeaningEntry> entries_;
    std::map<std::string, std::vector<MeaningId>> lemma_index_;
};

// ---------------------------------------------------------------------------
// Lexicon file I/O
// ---------------------------------------------------------------------------
//
// UTF-8, one record per line, 7 tab-separated fields:
//
//   id  lemma[si-flag]  category  domain-labels  usage-labels  valency  gloss-ref
//
// Label and valency fields are comma-joined lists, '-' when empty. The
// lemma field may carry the reflexive marker "[si]". Lines starting with
// '#' are comments. Gloss trees live in the sibling parse file keyed by
// gloss-ref.

Lexicon load_lexicon(const std::string& path);

/// Loads the lexicon and attaches gloss trees from the parse file. Every
/// attached tree is validated; violations raise input_error.
Lexicon load_lexicon(const std::string& lexicon_path, const std::string& parse_path);

void save_lexicon(const Lexicon& lex, std::ostream& out);

} // namespace glossnet

#endif
