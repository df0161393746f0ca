// glossnet: compile dependency-parsed dictionary glosses into a semantic
// network and enrich it with derivation passes.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "glossnet/golden.hpp"
#include "glossnet/pipeline.hpp"
#include "glossnet/tagger.hpp"

using namespace glossnet;

namespace {

struct CommonOpts {
    std::string lexicon;
    std::string parses;
    std::string rules;
    std::string out = "out";
    std::string net;
    long threshold = 200;
    int depth_limit = 16;
    int rounds = 2;
    std::vector<std::string> passes = {"invert", "inherit", "infer", "invert"};
    std::string format = "lines";
};

void add_input_options(CLI::App* cmd, CommonOpts& opts, bool need_rules = true) {
    cmd->add_option("--lexicon", opts.lexicon, "lexicon file")
        ->envname("GLOSSNET_LEXICON")
        ->required();
    cmd->add_option("--parses", opts.parses, "gloss parse file")
        ->envname("GLOSSNET_PARSES")
        ->required();
    auto* rules = cmd->add_option("--rules", opts.rules, "rule file")
                      ->envname("GLOSSNET_RULES");
    if (need_rules) rules->required();
}

void add_pipeline_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "output directory")
        ->envname("GLOSSNET_OUT");
    cmd->add_option("--threshold", opts.threshold, "primitive admission threshold")
        ->envname("GLOSSNET_THRESHOLD")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--depth-limit", opts.depth_limit, "hypernym chain depth limit")
        ->envname("GLOSSNET_DEPTH_LIMIT")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rounds", opts.rounds, "primitive discovery rounds")
        ->envname("GLOSSNET_ROUNDS")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--passes", opts.passes, "derivation passes, in order")
        ->envname("GLOSSNET_PASSES")
        ->delimiter(',');
}

PipelineConfig to_config(const CommonOpts& opts) {
    PipelineConfig cfg;
    cfg.lexicon_path = opts.lexicon;
    cfg.parse_path = opts.parses;
    cfg.rules_path = opts.rules;
    cfg.output_dir = opts.out;
    cfg.threshold = opts.threshold;
    cfg.depth_limit = opts.depth_limit;
    cfg.primitive_rounds = opts.rounds;
    cfg.passes = opts.passes;
    return cfg;
}

int fail(const std::string& code, const std::string& message) {
    nlohmann::json record = {{"error", code}, {"message", message}};
    std::cerr << record.dump() << '\n';
    std::cerr << "error: " << message << '\n';
    return 1;
}

void print_frame(std::ostream& out, const SemanticFrame& frame) {
    out << "LEMMA: \"" << (frame.reflexive ? frame.lemma + "[si]" : frame.lemma)
        << "\" MNG: " << frame.meaning.entry << " CAT: " << to_string(frame.category)
        << '\n';
    for (const RelationTriple& t : frame.triples) {
        out << frame.meaning.entry << '.' << t.subject_node << '\t' << t.subject.str()
            << '\t' << t.relation.str() << '\t' << t.object.str() << '\t'
            << to_string(t.provenance) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rule-based compiler from parsed dictionary glosses to a "
                 "semantic network"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("GLOSSNET_CONFIG");

    CommonOpts opts;
    std::string meaning_id;
    std::vector<std::string> pattern;
    std::string lemma_filter;

    CLI::App* ingest = app.add_subcommand(
        "ingest", "load and validate the lexicon, re-emit it canonically");
    add_input_options(ingest, opts, /*need_rules=*/false);
    ingest->add_option("--out", opts.out, "output directory");

    CLI::App* tag = app.add_subcommand("tag", "print tag sequence and gloss class");
    add_input_options(tag, opts);
    tag->add_option("--lemma", lemma_filter, "restrict to one lemma");

    CLI::App* frame_cmd = app.add_subcommand("frame", "print a single frame");
    add_input_options(frame_cmd, opts);
    frame_cmd->add_option("id", meaning_id, "meaning id (entry.sub)")->required();

    CLI::App* trace_cmd =
        app.add_subcommand("trace", "print the functor rewrite trace");
    add_input_options(trace_cmd, opts);
    trace_cmd->add_option("id", meaning_id, "meaning id (entry.sub)")->required();

    CLI::App* build = app.add_subcommand(
        "build", "translate all entries and write the frame net (no derivation)");
    add_input_options(build, opts);
    add_pipeline_options(build, opts);

    CLI::App* derive = app.add_subcommand(
        "derive", "full pipeline: build plus derivation passes and reports");
    add_input_options(derive, opts);
    add_pipeline_options(derive, opts);

    CLI::App* query_cmd =
        app.add_subcommand("query", "match triples in a persisted net");
    query_cmd->add_option("--net", opts.net, "net file")
        ->envname("GLOSSNET_NET")
        ->required();
    query_cmd
        ->add_option("pattern", pattern,
                     "subject relation object, '*' as wildcard")
        ->expected(3);

    CLI::App* export_cmd =
        app.add_subcommand("export", "export a persisted net for viewers");
    export_cmd->add_option("--net", opts.net, "net file")
        ->envname("GLOSSNET_NET")
        ->required();
    export_cmd->add_option("--format", opts.format, "lines or graph")
        ->check(CLI::IsMember({"lines", "graph"}));
    bool graph_flag = false;
    export_cmd->add_flag("--graph", graph_flag, "shorthand for --format graph");

    CLI::App* stats = app.add_subcommand(
        "stats", "gloss-head frequency table over the corpus");
    add_input_options(stats, opts, /*need_rules=*/false);
    stats->add_option("--format", opts.format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}));
    stats->add_option("--threshold", opts.threshold, "table threshold")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ingest) {
            const Lexicon lex = load_lexicon(opts.lexicon, opts.parses);
            std::filesystem::create_directories(opts.out);
            {
                std::ofstream out(std::filesystem::path(opts.out) / "lexicon.tsv",
                                  std::ios::binary);
                save_lexicon(lex, out);
            }
            {
                std::map<MeaningId, DependencyTree> trees;
                for (const MeaningEntry* e : lex.entries())
                    trees.emplace(e->gloss_ref, e->gloss);
                std::ofstream out(std::filesystem::path(opts.out) / "parses.tsv",
                                  std::ios::binary);
                save_parse_file(trees, out);
            }
            std::cout << "ingested " << lex.size() << " entries\n";
            return 0;
        }

        if (*tag) {
            const RuleSet rules = load_rules(opts.rules);
            const PrimitiveInventory inv = inventory_from_rules(rules);
            const Lexicon lex = load_lexicon(opts.lexicon, opts.parses);
            for (const MeaningEntry* e : lex.entries()) {
                if (!lemma_filter.empty() && e->lemma != lemma_filter) continue;
                const TagSequence tags = tag_entry(*e, inv, rules);
                const GlossClass cls = classify_gloss(e->gloss, e->category, rules);
                std::cout << e->id.str() << '\t' << e->display_lemma() << '\t'
                          << to_string(e->category) << '\t' << cls.str() << '\t'
                          << tags.str() << '\n';
            }
            return 0;
        }

        if (*frame_cmd || *trace_cmd) {
            const RuleSet rules = load_rules(opts.rules);
            const PrimitiveInventory inv = inventory_from_rules(rules);
            const Lexicon lex = load_lexicon(opts.lexicon, opts.parses);
            const MeaningId id = MeaningId::parse(meaning_id);
            const EntryTrace entry_trace = trace_entry(lex, rules, inv, id);
            if (*frame_cmd) {
                print_frame(std::cout, entry_trace.after);
            } else {
                if (entry_trace.trace.chains.empty())
                    std::cout << "(no attributive functors)\n";
                else
                    std::cout << entry_trace.trace.str();
            }
            return 0;
        }

        if (*build) {
            PipelineConfig cfg = to_config(opts);
            cfg.passes.clear();
            run_pipeline_to_files(cfg);
            std::cout << "net written to " << opts.out << "/net.txt\n";
            return 0;
        }

        if (*derive) {
            const PipelineConfig cfg = to_config(opts);
            const PipelineResult result = run_pipeline_to_files(cfg);
            std::cout << "frames " << result.net.frame_count() << ", derived "
                      << result.net.derived().size() << ", artifacts in " << opts.out
                      << '\n';
            return 0;
        }

        if (*query_cmd) {
            const SemanticNet net = load_net(opts.net);
            TriplePattern p;
            p.subject = pattern[0];
            p.relation = pattern[1];
            p.object = pattern[2];
            for (const QueryResult& r : query(net, p)) {
                std::cout << r.source.str() << '\t' << r.triple.subject.str() << '\t'
                          << r.triple.relation.str() << '\t' << r.triple.object.str()
                          << '\t' << to_string(r.triple.provenance) << '\n';
            }
            return 0;
        }

        if (*export_cmd) {
            const SemanticNet net = load_net(opts.net);
            if (graph_flag) opts.format = "graph";
            if (opts.format == "graph")
                export_graph(net, std::cout);
            else
                save_net(net, std::cout);
            return 0;
        }

        if (*stats) {
            const Lexicon lex = load_lexicon(opts.lexicon, opts.parses);
            HeadCountReport report;
            HeadFrequencyTable table = count_heads(lex, &report);
            table.threshold = opts.threshold;
            if (opts.format == "tsv")
                std::cout << render_stats_tsv(table);
            else
                std::cout << render_stats_text(table, report);
            return 0;
        }
    } catch (const input_error& e) {
        return fail("input", e.what());
    } catch (const lookup_error& e) {
        return fail("lookup", e.what());
    } catch (const std::invalid_argument& e) {
        return fail("config", e.what());
    } catch (const std::exception& e) {
        return fail("internal", e.what());
    }
    return 0;
}
