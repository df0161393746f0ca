#ifndef GLOSSNET_GLOSS_HPP
#define GLOSSNET_GLOSS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "glossnet/types.hpp"

namespace glossnet {

// ---------------------------------------------------------------------------
// Dependency labels
// ---------------------------------------------------------------------------

enum class DepLabel : std::uint8_t {
    Root,
    Subj,
    Obj,
    Mod,
    Pmod,
    Prep,
    Rel,
    Coord,
    Conj,
    Det,
    Advmod,
    Comp,
    Trace,
};

std::string to_string(DepLabel l);
DepLabel dep_label_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Nodes and trees
// ---------------------------------------------------------------------------

/// One token of a parsed gloss. `head == 0` marks the root. Features are
/// free-form key/value pairs; a key without '=' stores an empty value.
/// Conventions used by the shipped parse files:
///   refl        reflexive clitic folded into the lemma ("muoversi")
///   inf         infinitive mood
///   part        participle
///   pass        passive voice
///   neg         the node is negated (or see an ADVMOD "non" child)
///   ant=N       trace antecedent index; N = 0 binds the use-site head
///   role=X      trace role: subj, obj or place (default by voice)
///   base=L      adjective base of a derived adverb ("velocemente" -> veloce)
struct DependencyNode {
    int index = 0; // 1-based
    std::string surface;
    std::string lemma;
    WordCategory category = WordCategory::Other;
    int head = 0; // 0 = root
    DepLabel dep = DepLabel::Root;
    std::map<std::string, std::string> features;

    bool has_feature(const std::string& key) const;
    std::string feature(const std::string& key) const; // "" when absent
};

struct TreeViolation {
    int node_index = 0; // 0 when the violation is tree-global
    std::string message;
};

/// Validation reports violations as data; an empty report means the tree
/// satisfies all structural invariants.
using ValidationReport = std::vector<TreeViolation>;

struct DependencyTree {
    std::vector<DependencyNode> nodes; // in index order, index == position+1

    bool empty() const { return nodes.empty(); }
    const DependencyNode& node(int index) const; // 1-based, throws on bad index
    const DependencyNode* find(int index) const; // nullptr on bad index

    /// Children of `index` in index order (0 = children of the virtual root).
    std::vector<const DependencyNode*> children(int index) const;
};

ValidationReport validate_tree(const DependencyTree& t);

/// The unique head = 0 node. Requires a valid tree.
const DependencyNode& gloss_head(const DependencyTree& t);

// ---------------------------------------------------------------------------
// Parse file I/O
// ---------------------------------------------------------------------------
//
// One tree per record, keyed by meaning id:
//
//   @ 41551.0
//   1<TAB>Grande<TAB>grande<TAB>ADJ<TAB>2<TAB>MOD<TAB>-
//   ...
//   (blank line or next '@' ends the record)
//
// Node fields: index, surface, lemma, category, head, dep_label, features.
// Features are comma-joined key[=value] pairs, '-' when empty. Lines
// starting with '#' are comments.

std::map<MeaningId, DependencyTree> load_parse_file(const std::string& path);
void save_parse_file(const std::map<MeaningId, DependencyTree>& trees,
                     std::ostream& out);

} // namespace glossnet

#endif
