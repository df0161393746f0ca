#include "glossnet/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "glossnet/tagger.hpp"

namespace glossnet {

void PipelineConfig::validate() const {
    if (lexicon_path.empty() || parse_path.empty() || rules_path.empty())
        throw std::invalid_argument("lexicon, parses and rules paths are required");
    if (threshold < 1) throw std::invalid_argument("threshold must be >= 1");
    if (depth_limit < 1) throw std::invalid_argument("depth limit must be >= 1");
    if (primitive_rounds < 1) throw std::invalid_argument("rounds must be >= 1");
    for (const std::string& p : passes)
        if (p != "invert" && p != "inherit" && p != "infer")
            throw std::invalid_argument("unknown pass '" + p + "'");
}

std::string PipelineDiagnostics::report() const {
    std::ostringstream out;
    out << "ambiguous-relations\t" << ambiguous_relations << '\n';
    out << "skipped-edges\t" << skipped_edges << '\n';
    out << "low-confidence-classes\t" << low_confidence_classes << '\n';
    for (const auto& [pass, n] : pass_additions)
        out << "pass-" << pass << "\t" << n << '\n';
    std::vector<std::string> sorted = warnings;
    std::sort(sorted.begin(), sorted.end());
    for (const std::string& w : sorted) out << "warning\t" << w << '\n';
    return out.str();
}

std::vector<SemanticFrame> build_frames(const Lexicon& lex, const RuleSet& rules,
                                        const PrimitiveInventory& inv,
                                        PipelineDiagnostics* diag) {
    TranslateContext ctx;
    ctx.rules = &rules;
    ctx.inventory = &inv;
    ctx.lexicon = &lex;

    std::vector<SemanticFrame> frames;
    frames.reserve(lex.size());
    for (const MeaningEntry* e : lex.entries()) {
        TranslateDiagnostics td;
        SemanticFrame frame = translate(*e, ctx, &td);

        const std::vector<AttributionChain> chains = detect_functors(frame, rules);
        if (!chains.empty()) {
            RewriteTrace trace = raise_and_delete(frame, chains, rules);
            for (const ChainTrace& ct : trace.chains)
                if (ct.aborted && diag)
                    diag->warnings.push_back("entry " + e->id.str() +
                                             ": functor chain aborted: " + ct.diagnostic);
        }
        mark_relative_value(frame, rules, diag ? &diag->warnings : nullptr);

        if (diag) {
            diag->ambiguous_relations += td.ambiguous_relations;
            diag->skipped_edges += td.skipped_edges;
            if (td.low_confidence_class) ++diag->low_confidence_classes;
            for (std::string& w : td.warnings) diag->warnings.push_back(std::move(w));
        }
        frames.push_back(std::move(frame));
    }

    // Hypernym attribute raising, frames as the tag source for each other.
    std::map<std::string, const SemanticFrame*> first_frame_for;
    for (const SemanticFrame& f : frames)
        if (!first_frame_for.count(f.lemma)) first_frame_for[f.lemma] = &f;

    for (SemanticFrame& frame : frames) {
        std::vector<std::string> hypernyms;
        for (const RelationTriple& t : frame.triples) {
            if (t.relation.is_ambiguous() || t.relation.kind.attribution) continue;
            const RelationName n = t.relation.kind.name;
            if (n != RelationName::TokenOf && n != RelationName::RefersTo) continue;
            if (t.subject_node != 0 || !t.object.is_word()) continue;
            if (std::find(hypernyms.begin(), hypernyms.end(), t.object.lemma) ==
                hypernyms.end())
                hypernyms.push_back(t.object.lemma);
        }
        for (const std::string& lemma : hypernyms) {
            auto it = first_frame_for.find(lemma);
            const SemanticFrame* hyper =
                (it != first_frame_for.end() && it->second != &frame) ? it->second
                                                                      : nullptr;
            raise_hypernym_attributes(frame, hyper, inv,
                                      diag ? &diag->warnings : nullptr, lemma);
        }
    }
    return frames;
}

void run_passes(SemanticNet& net, const std::vector<std::string>& passes,
                int depth_limit, PipelineDiagnostics* diag) {
    int step = 0;
    for (const std::string& pass : passes) {
        ++step;
        int added = 0;
        if (pass == "invert")
            added = invert_relations(net);
        else if (pass == "inherit")
            added = inherit_attributes(net, depth_limit);
        else if (pass == "infer")
            added = infer_roles(net);
        else
            throw std::invalid_argument("unknown pass '" + pass + "'");
        if (diag)
            diag->pass_additions[std::to_string(step) + ":" + pass] = added;
    }
}

PipelineResult run_pipeline(const PipelineConfig& cfg) {
    cfg.validate();

    PipelineResult result;
    result.rules = load_rules(cfg.rules_path);
    result.lexicon = load_lexicon(cfg.lexicon_path, cfg.parse_path);
    result.inventory = inventory_from_rules(result.rules);

    result.stats = count_heads(result.lexicon, &result.stats_report);
    result.stats.threshold = cfg.threshold;

    // Primitive discovery: rebuild the net with the refined inventory a
    // bounded number of rounds; criterion ii needs a linked net.
    for (int round = 0; round < cfg.primitive_rounds; ++round) {
        PipelineDiagnostics scratch;
        std::vector<SemanticFrame> frames =
            build_frames(result.lexicon, result.rules, result.inventory, &scratch);
        SemanticNet net = build_net(std::move(frames));
        PrimitiveInventory refined = build_inventory(
            result.stats, result.inventory, [&](const std::string& lemma) {
                return net.has_lemma(lemma)
                           ? stop_status(net, lemma, cfg.depth_limit)
                           : true; // no frame: nothing contradicts stop status
            });
        const bool stable = refined.entries == result.inventory.entries &&
                            refined.pending == result.inventory.pending;
        result.inventory = std::move(refined);
        if (stable) break;
    }

    std::vector<SemanticFrame> frames = build_frames(
        result.lexicon, result.rules, result.inventory, &result.diagnostics);
    result.net = build_net(std::move(frames));
    run_passes(result.net, cfg.passes, cfg.depth_limit, &result.diagnostics);
    return result;
}

PipelineResult run_pipeline_to_files(const PipelineConfig& cfg) {
    PipelineResult result = run_pipeline(cfg);
    if (cfg.output_dir.empty())
        throw std::invalid_argument("output directory is required");
    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path dir(cfg.output_dir);

    {
        std::ofstream out(dir / "net.txt", std::ios::binary);
        save_net(result.net, out);
    }
    {
        std::ofstream out(dir / "diagnostics.txt", std::ios::binary);
        out << result.diagnostics.report();
    }
    {
        std::ofstream out(dir / "stats.txt", std::ios::binary);
        out << render_stats_text(result.stats, result.stats_report);
    }
    {
        std::ofstream out(dir / "stats.tsv", std::ios::binary);
        out << render_stats_tsv(result.stats);
    }
    return result;
}

EntryTrace trace_entry(const Lexicon& lex, const RuleSet& rules,
                       const PrimitiveInventory& inv, MeaningId id) {
    const MeaningEntry& e = lex.at(id);
    TranslateContext ctx;
    ctx.rules = &rules;
    ctx.inventory = &inv;
    ctx.lexicon = &lex;

    EntryTrace out;
    out.before = translate(e, ctx);
    out.after = out.before;
    const std::vector<AttributionChain> chains = detect_functors(out.before, rules);
    out.trace = raise_and_delete(out.after, chains, rules);
    mark_relative_value(out.after, rules);
    return out;
}

std::string render_stats_text(const HeadFrequencyTable& table,
                              const HeadCountReport& report) {
    // column width in code points, not bytes (accented lemmas)
    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };

    std::vector<std::pair<long, std::string>> rows;
    rows.reserve(table.rows.size());
    std::size_t width = 5;
    for (const auto& [lemma, n] : table.rows) {
        rows.emplace_back(-n, lemma);
        width = std::max(width, display_width(lemma));
    }
    std::sort(rows.begin(), rows.end());

    std::ostringstream out;
    out << "gloss-head frequency (threshold " << table.threshold << ")\n";
    for (const auto& [negn, lemma] : rows) {
        out << lemma;
        for (std::size_t i = display_width(lemma); i < width + 2; ++i) out << ' ';
        out << -negn << '\n';
    }
    out << "total " << table.total() << '\n';
    if (table.count("fare") > 0)
        out << "fare: " << table.count("fare") << " head occurrences, "
            << report.causative_fare << " causative (infinitive object)\n";
    return out.str();
}

std::string render_stats_tsv(const HeadFrequencyTable& table) {
    std::vector<std::pair<long, std::string>> rows;
    rows.reserve(table.rows.size());
    for (const auto& [lemma, n] : table.rows) rows.emplace_back(-n, lemma);
    std::sort(rows.begin(), rows.end());
    std::ostringstream out;
    for (const auto& [negn, lemma] : rows) out << lemma << '\t' << -negn << '\n';
    return out.str();
}

} // namespace glossnet
