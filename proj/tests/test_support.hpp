#ifndef GLOSSNET_TEST_SUPPORT_HPP
#define GLOSSNET_TEST_SUPPORT_HPP

#include <string>

#include "glossnet/lexicon.hpp"
#include "glossnet/pipeline.hpp"

#ifndef GLOSSNET_DATA_DIR
#error "GLOSSNET_DATA_DIR must point at the repository data directory"
#endif

namespace gtest_support {

inline std::string data_dir() { return GLOSSNET_DATA_DIR; }
inline std::string lexicon_path() { return data_dir() + "/fixtures/lexicon.tsv"; }
inline std::string parses_path() { return data_dir() + "/fixtures/parses.tsv"; }
inline std::string rules_path() { return data_dir() + "/rules/core.rules"; }
inline std::string goldens_path() { return data_dir() + "/fixtures/goldens.txt"; }
inline std::string table1_path() {
    return data_dir() + "/fixtures/table1_reference.tsv";
}

inline glossnet::PipelineConfig fixture_config() {
    glossnet::PipelineConfig cfg;
    cfg.lexicon_path = lexicon_path();
    cfg.parse_path = parses_path();
    cfg.rules_path = rules_path();
    return cfg;
}

/// In-memory entry builder for op-level tests. Node spec:
/// {index, surface, lemma, category, head, dep, features}.
struct NodeSpec {
    int index;
    const char* lemma;
    glossnet::WordCategory category;
    int head;
    glossnet::DepLabel dep;
    const char* features = "";
};

inline glossnet::DependencyTree make_tree(std::initializer_list<NodeSpec> specs) {
    glossnet::DependencyTree t;
    for (const NodeSpec& s : specs) {
        glossnet::DependencyNode n;
        n.index = s.index;
        n.surface = s.lemma;
        n.lemma = s.lemma;
        n.category = s.category;
        n.head = s.head;
        n.dep = s.dep;
        std::string feats(s.features);
        std::size_t pos = 0;
        while (pos < feats.size()) {
            std::size_t next = feats.find(',', pos);
            if (next == std::string::npos) next = feats.size();
            std::string item = feats.substr(pos, next - pos);
            if (!item.empty()) {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                    n.features[item] = "";
                else
                    n.features[item.substr(0, eq)] = item.substr(eq + 1);
            }
            pos = next + 1;
        }
        t.nodes.push_back(std::move(n));
    }
    return t;
}

inline glossnet::MeaningEntry make_entry(std::uint64_t id, const std::string& lemma,
                                         glossnet::WordCategory category,
                                         glossnet::DependencyTree gloss) {
    glossnet::MeaningEntry e;
    e.id = glossnet::MeaningId(id, 0);
    e.lemma = lemma;
    e.category = category;
    e.gloss_ref = e.id;
    e.gloss = std::move(gloss);
    return e;
}

} // namespace gtest_support

#endif
