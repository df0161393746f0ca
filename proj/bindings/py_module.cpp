#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "glossnet/golden.hpp"
#include "glossnet/pipeline.hpp"
#include "glossnet/tagger.hpp"

namespace py = pybind11;
using namespace glossnet;

namespace {

py::dict triple_dict(const RelationTriple& t, const std::string& source) {
    py::dict d;
    d["subject"] = t.subject.str();
    d["relation"] = t.relation.str();
    d["object"] = t.object.str();
    d["provenance"] = to_string(t.provenance);
    d["relative_value"] = t.relative_value;
    if (!source.empty()) d["source"] = source;
    return d;
}

/// Thin handle bundling the loaded inputs with the derived net so the
/// python side can run queries without re-reading files.
struct PyPipeline {
    PipelineConfig config;
    PipelineResult result;

    explicit PyPipeline(const std::string& lexicon, const std::string& parses,
                        const std::string& rules, long threshold, int depth_limit,
                        int rounds, const std::vector<std::string>& passes) {
        config.lexicon_path = lexicon;
        config.parse_path = parses;
        config.rules_path = rules;
        config.threshold = threshold;
        config.depth_limit = depth_limit;
        config.primitive_rounds = rounds;
        config.passes = passes;
        result = run_pipeline(config);
    }

    std::size_t frame_count() const { return result.net.frame_count(); }
    std::size_t derived_count() const { return result.net.derived().size(); }

    std::vector<py::dict> frame(const std::string& id) const {
        const SemanticFrame* f = result.net.frame(MeaningId::parse(id));
        if (!f) throw py::key_error("no frame for meaning id " + id);
        std::vector<py::dict> out;
        for (const RelationTriple& t : f->triples) out.push_back(triple_dict(t, ""));
        return out;
    }

    std::vector<py::dict> query(const std::string& subject,
                                const std::string& relation,
                                const std::string& object) const {
        TriplePattern p;
        p.subject = subject;
        p.relation = relation;
        p.object = object;
        std::vector<py::dict> out;
        for (const QueryResult& r : glossnet::query(result.net, p))
            out.push_back(triple_dict(r.triple, r.source.str()));
        return out;
    }

    std::vector<py::dict> hypernym_chain(const std::string& lemma,
                                         int depth_limit) const {
        std::vector<py::dict> out;
        for (const RelationTriple& t :
             glossnet::hypernym_chain(result.net, lemma, depth_limit))
            out.push_back(triple_dict(t, ""));
        return out;
    }

    py::dict tag(const std::string& id) const {
        const MeaningEntry& e = result.lexicon.at(MeaningId::parse(id));
        py::dict d;
        d["lemma"] = e.display_lemma();
        d["category"] = to_string(e.category);
        d["tags"] = tag_entry(e, result.inventory, result.rules).str();
        d["gloss_class"] =
            classify_gloss(e.gloss, e.category, result.rules).str();
        return d;
    }

    std::string trace(const std::string& id) const {
        const EntryTrace t = trace_entry(result.lexicon, result.rules,
                                         result.inventory, MeaningId::parse(id));
        return t.trace.chains.empty() ? std::string("(no attributive functors)")
                                      : t.trace.str();
    }

    std::string stats_text() const {
        return render_stats_text(result.stats, result.stats_report);
    }

    std::string net_text() const {
        std::ostringstream out;
        save_net(result.net, out);
        return out.str();
    }

    std::string graph_text() const {
        std::ostringstream out;
        export_graph(result.net, out);
        return out.str();
    }

    bool stop_status_of(const std::string& lemma, int depth_limit) const {
        return stop_status(result.net, lemma, depth_limit);
    }

    std::vector<std::string> lookup(const std::string& lemma) const {
        std::vector<std::string> out;
        for (const MeaningEntry* e : result.lexicon.lookup_lemma(lemma))
            out.push_back(e->id.str());
        return out;
    }
};

} // namespace

PYBIND11_MODULE(_glossnet, m) {
    m.doc() = "rule-based compiler from parsed dictionary glosses to a "
              "semantic network";

    py::register_exception<input_error>(m, "InputError");
    py::register_exception<lookup_error>(m, "LookupError");

    py::class_<PyPipeline>(m, "Pipeline")
        .def(py::init<const std::string&, const std::string&, const std::string&,
                      long, int, int, const std::vector<std::string>&>(),
             py::arg("lexicon"), py::arg("parses"), py::arg("rules"),
             py::arg("threshold") = 200, py::arg("depth_limit") = 16,
             py::arg("rounds") = 2,
             py::arg("passes") =
                 std::vector<std::string>{"invert", "inherit", "infer", "invert"})
        .def_property_readonly("frame_count", &PyPipeline::frame_count)
        .def_property_readonly("derived_count", &PyPipeline::derived_count)
        .def("frame", &PyPipeline::frame, py::arg("id"),
             "triples of one frame as dicts")
        .def("query", &PyPipeline::query, py::arg("subject") = "*",
             py::arg("relation") = "*", py::arg("object") = "*",
             "match triples; '*' is a wildcard, lemmas match word links")
        .def("hypernym_chain", &PyPipeline::hypernym_chain, py::arg("lemma"),
             py::arg("depth_limit") = 16)
        .def("tag", &PyPipeline::tag, py::arg("id"),
             "tag sequence and gloss class of one entry")
        .def("trace", &PyPipeline::trace, py::arg("id"),
             "functor rewrite trace in the level-by-level layout")
        .def("stop_status", &PyPipeline::stop_status_of, py::arg("lemma"),
             py::arg("depth_limit") = 16)
        .def("lookup_lemma", &PyPipeline::lookup, py::arg("lemma"))
        .def("stats_text", &PyPipeline::stats_text)
        .def("net_text", &PyPipeline::net_text)
        .def("graph_text", &PyPipeline::graph_text);

    m.def(
        "run_to_files",
        [](const std::string& lexicon, const std::string& parses,
           const std::string& rules, const std::string& out_dir) {
            PipelineConfig cfg;
            cfg.lexicon_path = lexicon;
            cfg.parse_path = parses;
            cfg.rules_path = rules;
            cfg.output_dir = out_dir;
            const PipelineResult r = run_pipeline_to_files(cfg);
            py::dict d;
            d["frames"] = r.net.frame_count();
            d["derived"] = r.net.derived().size();
            return d;
        },
        py::arg("lexicon"), py::arg("parses"), py::arg("rules"), py::arg("out_dir"),
        "full pipeline run writing net.txt, diagnostics.txt and the stats files");

    m.def(
        "verify_goldens",
        [](const std::string& lexicon, const std::string& parses,
           const std::string& rules, const std::string& goldens) {
            PipelineConfig cfg;
            cfg.lexicon_path = lexicon;
            cfg.parse_path = parses;
            cfg.rules_path = rules;
            const PipelineResult r = run_pipeline(cfg);
            const GoldenReport report =
                verify_golden(r.net, load_goldens(goldens));
            py::dict d;
            d["all_passed"] = report.all_passed;
            d["report"] = report.str();
            return d;
        },
        py::arg("lexicon"), py::arg("parses"), py::arg("rules"),
        py::arg("goldens"), "run the pipeline and check the golden frames");
}
