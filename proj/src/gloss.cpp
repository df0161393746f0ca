#include "glossnet/gloss.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>

namespace glossnet {

namespace {

struct LabelName {
    DepLabel label;
    const char* name;
};

constexpr std::array<LabelName, 13> kLabelNames = {{
    {DepLabel::Root, "ROOT"},
    {DepLabel::Subj, "SUBJ"},
    {DepLabel::Obj, "OBJ"},
    {DepLabel::Mod, "MOD"},
    {DepLabel::Pmod, "PMOD"},
    {DepLabel::Prep, "PREP"},
    {DepLabel::Rel, "REL"},
    {DepLabel::Coord, "COORD"},
    {DepLabel::Conj, "CONJ"},
    {DepLabel::Det, "DET"},
    {DepLabel::Advmod, "ADVMOD"},
    {DepLabel::Comp, "COMP"},
    {DepLabel::Trace, "TRACE"},
}};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

} // namespace

std::string to_string(DepLabel l) {
    for (const auto& n : kLabelNames)
        if (n.label == l) return n.name;
    return "ROOT";
}

DepLabel dep_label_from_string(const std::string& s) {
    for (const auto& n : kLabelNames)
        if (s == n.name) return n.label;
    throw std::invalid_argument("unknown dependency label: '" + s + "'");
}

bool DependencyNode::has_feature(const std::string& key) const {
    return features.count(key) != 0;
}

std::string DependencyNode::feature(const std::string& key) const {
    auto it = features.find(key);
    return it == features.end() ? std::string() : it->second;
}

const DependencyNode& DependencyTree::node(int index) const {
    const DependencyNode* n = find(index);
    if (!n) throw lookup_error("node index out of range: " + std::to_string(index));
    return *n;
}

const DependencyNode* DependencyTree::find(int index) const {
    if (index < 1 || index > static_cast<int>(nodes.size())) return nullptr;
    const DependencyNode& n = nodes[static_cast<std::size_t>(index - 1)];
    return n.index == index ? &n : nullptr;
}

std::vector<const DependencyNode*> DependencyTree::children(int index) const {
    std::vector<const DependencyNode*> out;
    for (const auto& n : nodes)
        if (n.head == index) out.push_back(&n);
    return out;
}

ValidationReport validate_tree(const DependencyTree& t) {
    ValidationReport report;
    if (t.nodes.empty()) {
        report.push_back({0, "empty tree"});
        return report;
    }

    int roots = 0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const DependencyNode& n = t.nodes[i];
        if (n.index != static_cast<int>(i) + 1)
            report.push_back({n.index, "node index does not match position"});
        if (n.head == n.index)
            report.push_back({n.index, "self-loop head link"});
        if (n.head < 0 || n.head > static_cast<int>(t.nodes.size()))
            report.push_back({n.index, "head index out of range"});
        if (n.head == 0) ++roots;
        if (n.dep == DepLabel::Trace && !n.has_feature("ant"))
            report.push_back({n.index, "trace node without antecedent feature"});
    }
    if (roots == 0) report.push_back({0, "no root node"});
    if (roots > 1) report.push_back({0, "multiple roots"});
    if (!report.empty()) return report;

    // Reachability doubles as the acyclicity check: every node must reach
    // the root in at most |nodes| steps.
    for (const auto& n : t.nodes) {
        int cur = n.index;
        std::size_t steps = 0;
        while (cur != 0 && steps <= t.nodes.size()) {
            cur = t.node(cur).head;
            ++steps;
        }
        if (cur != 0)
            report.push_back({n.index, "head links form a cycle"});
    }
    return report;
}

const DependencyNode& gloss_head(const DependencyTree& t) {
    ValidationReport report = validate_tree(t);
    if (!report.empty())
        throw lookup_error("gloss_head on invalid tree: " + report.front().message);
    for (const auto& n : t.nodes)
        if (n.head == 0) return n;
    throw lookup_error("gloss_head: no root"); // unreachable after validation
}

// ---------------------------------------------------------------------------
// Parse file I/O
// ---------------------------------------------------------------------------

namespace {

std::map<std::string, std::string> parse_features(const std::string& field,
                                                  const std::string& path,
                                                  long line) {
    std::map<std::string, std::string> out;
    if (field == "-" || field.empty()) return out;
    for (const std::string& item : split(field, ',')) {
        if (item.empty())
            throw input_error(path, line, "empty feature item");
        auto eq = item.find('=');
        if (eq == std::string::npos)
            out[item] = "";
        else
            out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::string render_features(const DependencyNode& n) {
    if (n.features.empty()) return "-";
    std::string out;
    for (const auto& [k, v] : n.features) {
        if (!out.empty()) out += ',';
        out += k;
        if (!v.empty()) out += "=" + v;
    }
    return out;
}

} // namespace

std::map<MeaningId, DependencyTree> load_parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, 0, "cannot open parse file");

    std::map<MeaningId, DependencyTree> trees;
    std::optional<MeaningId> current;
    DependencyTree tree;
    long lineno = 0;

    auto flush = [&](long at) {
        if (!current) return;
        if (tree.empty())
            throw input_error(path, at, "record " + current->str() + " has no nodes");
        if (!trees.emplace(*current, std::move(tree)).second)
            throw input_error(path, at, "duplicate parse record for id " + current->str());
        tree = DependencyTree{};
        current.reset();
    };

    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) {
            flush(lineno);
            continue;
        }
        if (line[0] == '#') continue;
        if (line[0] == '@') {
            flush(lineno);
            std::string idtext = line.substr(1);
            const auto start = idtext.find_first_not_of(" \t");
            if (start == std::string::npos)
                throw input_error(path, lineno, "record header without id");
            idtext = idtext.substr(start);
            auto id = MeaningId::try_parse(idtext);
            if (!id) throw input_error(path, lineno, "malformed record id '" + idtext + "'");
            current = *id;
            continue;
        }
        if (!current)
            throw input_error(path, lineno, "node line outside a record");

        const std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 7)
            throw input_error(path, lineno,
                              "expected 7 tab-separated node fields, got " +
                                  std::to_string(fields.size()));
        DependencyNode n;
        try {
            n.index = std::stoi(fields[0]);
            n.surface = fields[1];
            n.lemma = fields[2];
            n.category = category_from_string(fields[3]);
            n.head = std::stoi(fields[4]);
            n.dep = dep_label_from_string(fields[5]);
            n.features = parse_features(fields[6], path, lineno);
        } catch (const input_error&) {
            throw;
        } catch (const std::exception& e) {
            throw input_error(path, lineno, e.what());
        }
        tree.nodes.push_back(std::move(n));
    }
    flush(lineno);
    return trees;
}

void save_parse_file(const std::map<MeaningId, DependencyTree>& trees,
                     std::ostream& out) {
    bool first = true;
    for (const auto& [id, tree] : trees) {
        if (!first) out << '\n';
        first = false;
        out << "@ " << id.str() << '\n';
        for (const auto& n : tree.nodes) {
            out << n.index << '\t' << n.surface << '\t' << n.lemma << '\t'
                << to_string(n.category) << '\t' << n.head << '\t'
                << to_string(n.dep) << '\t' << render_features(n) << '\n';
        }
    }
}

} // namespace glossnet
