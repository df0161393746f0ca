#ifndef GLOSSNET_PIPELINE_HPP
#define GLOSSNET_PIPELINE_HPP

#include <map>
#include <string>
#include <vector>

#include "glossnet/functors.hpp"
#include "glossnet/lexicon.hpp"
#include "glossnet/net.hpp"
#include "glossnet/primitives.hpp"
#include "glossnet/rules.hpp"
#include "glossnet/translate.hpp"

namespace glossnet {

struct PipelineConfig {
    std::string lexicon_path;
    std::string parse_path;
    std::string rules_path;
    std::string output_dir;
    long threshold = 200;
    int depth_limit = 16;
    int primitive_rounds = 2;
    std::vector<std::string> passes = {"invert", "inherit", "infer", "invert"};

    void validate() const; // throws std::invalid_argument
};

struct PipelineDiagnostics {
    std::vector<std::string> warnings;
    int ambiguous_relations = 0;
    int skipped_edges = 0;
    int low_confidence_classes = 0;
    std::map<std::string, int> pass_additions; // "1:invert" -> count

    std::string report() const;
};

/// Translate + functor rewrite + relative-value marking + hypernym raising
/// for every entry. Frames come out in id order.
std::vector<SemanticFrame> build_frames(const Lexicon& lex, const RuleSet& rules,
                                        const PrimitiveInventory& inv,
                                        PipelineDiagnostics* diag = nullptr);

/// Runs the configured derivation passes in order.
void run_passes(SemanticNet& net, const std::vector<std::string>& passes,
                int depth_limit, PipelineDiagnostics* diag = nullptr);

struct PipelineResult {
    Lexicon lexicon;
    RuleSet rules;
    PrimitiveInventory inventory;
    SemanticNet net;
    HeadFrequencyTable stats;
    HeadCountReport stats_report;
    PipelineDiagnostics diagnostics;
};

/// The whole batch: load, tag, translate, rewrite, build, derive. The
/// primitive inventory is refined over `primitive_rounds` net builds
/// (frequency + stop-status admission) before the final derivation.
PipelineResult run_pipeline(const PipelineConfig& cfg);

/// run_pipeline plus artifact files under cfg.output_dir: net.txt,
/// diagnostics.txt, stats.txt and stats.tsv. Identical inputs produce
/// byte-identical outputs.
PipelineResult run_pipeline_to_files(const PipelineConfig& cfg);

/// Frame plus functor-rewrite trace for one entry, for the trace command.
struct EntryTrace {
    SemanticFrame before;
    SemanticFrame after;
    RewriteTrace trace;
};

EntryTrace trace_entry(const Lexicon& lex, const RuleSet& rules,
                       const PrimitiveInventory& inv, MeaningId id);

/// Aligned frequency table (lemma, count), descending count then lemma,
/// plus the causative split line for "fare".
std::string render_stats_text(const HeadFrequencyTable& table,
                              const HeadCountReport& report);
std::string render_stats_tsv(const HeadFrequencyTable& table);

} // namespace glossnet

#endif
