#ifndef GLOSSNET_NET_HPP
#define GLOSSNET_NET_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "glossnet/frame.hpp"

namespace glossnet {

/// A derived triple together with the frame whose content licensed it.
struct DerivedEntry {
    MeaningId source;
    RelationTriple triple;
};

/// Frames linked together plus derivation output. Frames are immutable
/// once added; derivation passes only append to the derived set. Derived
/// triples never duplicate frame triples (set semantics over
/// subject/relation/object).
class SemanticNet {
public:
    void add_frame(SemanticFrame f); // throws on duplicate meaning id

    const SemanticFrame* frame(MeaningId id) const;
    std::vector<const SemanticFrame*> frames() const; // id order
    std::vector<const SemanticFrame*> frames_for(const std::string& lemma) const;
    bool has_lemma(const std::string& lemma) const;
    std::size_t frame_count() const { return frames_.size(); }

    const std::vector<DerivedEntry>& derived() const { return derived_; }
    /// Appends unless the triple already exists anywhere in the net.
    bool add_derived(RelationTriple t, MeaningId source);
    bool contains(const RelationTriple& t) const;

    /// Every triple in the net: frame triples first (frames in id order),
    /// then derived entries in insertion order.
    void for_each_triple(
        const std::function<void(const RelationTriple&, MeaningId)>& fn) const;

private:
    std::map<MeaningId, SemanticFrame> frames_;
    std::map<std::string, std::set<MeaningId>> lemma_index_;
    std::vector<DerivedEntry> derived_;
    std::set<std::string> triple_index_; // rendered triples, for set semantics
};

SemanticNet build_net(std::vector<SemanticFrame> frames);

// ---------------------------------------------------------------------------
// Derivation passes
// ---------------------------------------------------------------------------

/// Breadth-first transitive closure of TOKEN_OF from `start`, one visit
/// per lemma, cycles truncated. Output triples carry DERIVED_TAXONOMY.
/// The walk follows lexical word links only.
std::vector<RelationTriple> hypernym_chain(const SemanticNet& net,
                                           const std::string& start,
                                           int depth_limit);

/// Adds the paired inverse of every invertible triple (DERIVED_INVERSE);
/// NEG and the other modifiers carry over. Returns the number added.
int invert_relations(SemanticNet& net);

/// Taxonomy closure for every lemma plus downward attribute inheritance:
/// for each TOKEN_OF(x, y) the non-taxonomic triples with subject y are
/// copied to subject x (DERIVED_TAXONOMY), to fixpoint. Nothing flows
/// token -> type. Returns the number added.
int inherit_attributes(SemanticNet& net, int depth_limit = 16);

/// Cross-frame agent inference: AGNT_OF(n; v1) & HAS_OBJ(v1; o) &
/// TOKEN_OF(v2; v1) & HAS_OBJ(v2; o) adds AGNT_OF(n; v2)
/// (DERIVED_INFERENCE); the new agent then propagates down TOKEN_OF onto
/// the agent's tokens (DERIVED_ROLE), and PERSON-tagged agents stamp the
/// verb with a derived HAS_TAG. Runs to fixpoint; returns the number added.
int infer_roles(SemanticNet& net);

// ---------------------------------------------------------------------------
// Query and persistence
// ---------------------------------------------------------------------------

struct TriplePattern {
    std::string subject = "*";  // "*", lemma, or full unit rendering
    std::string relation = "*"; // "*", relation name, or candidate set
    std::string object = "*";

    bool matches(const RelationTriple& t) const;
};

struct QueryResult {
    MeaningId source;
    RelationTriple triple;
};

std::vector<QueryResult> query(const SemanticNet& net, const TriplePattern& pattern);

/// Line format: meaning-id.sub TAB subject TAB relation TAB object TAB
/// provenance; frames sorted by id with '@ id lemma category' headers,
/// derived entries after a '@ derived' header. Deterministic: equal nets
/// serialize byte-identically.
void save_net(const SemanticNet& net, std::ostream& out);
SemanticNet load_net(const std::string& path);

/// Graph export for external viewers: units become nodes, relations
/// labeled edges (derived ones dashed).
void export_graph(const SemanticNet& net, std::ostream& out);

} // namespace glossnet

#endif
