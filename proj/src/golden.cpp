#include "glossnet/golden.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace glossnet {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string match_key(const RelationTriple& t) {
    return t.subject.str() + " " + t.relation.str() + " " + t.object.str();
}

} // namespace

std::vector<GoldenFrame> load_goldens(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, 0, "cannot open golden file");

    std::vector<GoldenFrame> out;
    std::optional<GoldenFrame> current;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        if (line.rfind("golden ", 0) == 0) {
            if (current)
                throw input_error(path, lineno, "golden record without 'end'");
            std::stringstream header(line);
            std::string record, name, id, mode, scope;
            header >> record >> name >> id >> mode >> scope;
            std::string source;
            std::getline(header, source);
            const auto first = source.find_first_not_of(" \t");
            source = first == std::string::npos ? "" : source.substr(first);

            GoldenFrame g;
            g.name = name;
            g.meaning = MeaningId::parse(id);
            if (mode == "exact")
                g.exact = true;
            else if (mode == "contains")
                g.exact = false;
            else
                throw input_error(path, lineno, "mode must be exact or contains");
            if (scope == "direct")
                g.scope = GoldenFrame::Scope::Direct;
            else if (scope == "direct+raised")
                g.scope = GoldenFrame::Scope::DirectRaised;
            else if (scope == "any")
                g.scope = GoldenFrame::Scope::Any;
            else
                throw input_error(path, lineno, "scope must be direct, direct+raised or any");
            g.source = source;
            current = std::move(g);
            continue;
        }
        if (line == "end") {
            if (!current) throw input_error(path, lineno, "'end' without a record");
            out.push_back(std::move(*current));
            current.reset();
            continue;
        }
        if (!current) throw input_error(path, lineno, "triple line outside a record");
        const std::vector<std::string> fields = split(line, '\t');
        if (fields.size() != 3)
            throw input_error(path, lineno, "expected subject TAB relation TAB object");
        try {
            RelationTriple t;
            t.subject = SemanticUnit::parse(fields[0]);
            t.relation = RelationSlot::parse(fields[1]);
            t.object = SemanticUnit::parse(fields[2]);
            current->expected.push_back(std::move(t));
        } catch (const std::exception& e) {
            throw input_error(path, lineno, e.what());
        }
    }
    if (current) throw input_error(path, lineno, "unterminated golden record");
    return out;
}

GoldenReport verify_golden(const SemanticNet& net,
                           const std::vector<GoldenFrame>& goldens) {
    GoldenReport report;
    for (const GoldenFrame& g : goldens) {
        GoldenItemReport item;
        item.name = g.name;

        const SemanticFrame* frame = net.frame(g.meaning);
        if (!frame) {
            item.passed = false;
            item.message = "meaning " + g.meaning.str() + " absent from the net";
            report.items.push_back(std::move(item));
            report.all_passed = false;
            continue;
        }

        std::set<std::string> actual;
        for (const RelationTriple& t : frame->triples) {
            const bool in_scope =
                g.scope == GoldenFrame::Scope::Any ||
                (g.scope == GoldenFrame::Scope::Direct &&
                 t.provenance == Provenance::Direct) ||
                (g.scope == GoldenFrame::Scope::DirectRaised &&
                 (t.provenance == Provenance::Direct ||
                  t.provenance == Provenance::Raised));
            if (in_scope) actual.insert(match_key(t));
        }

        std::set<std::string> expected;
        for (const RelationTriple& t : g.expected) expected.insert(match_key(t));

        for (const std::string& e : expected)
            if (!actual.count(e)) item.diff.missing.push_back(e);
        if (g.exact)
            for (const std::string& a : actual)
                if (!expected.count(a)) item.diff.unexpected.push_back(a);

        item.passed = item.diff.missing.empty() && item.diff.unexpected.empty();
        if (!item.passed) {
            std::ostringstream msg;
            msg << item.diff.missing.size() << " missing, "
                << item.diff.unexpected.size() << " unexpected";
            item.message = msg.str();
            report.all_passed = false;
        }
        report.items.push_back(std::move(item));
    }
    return report;
}

std::string GoldenReport::str() const {
    std::ostringstream out;
    for (const GoldenItemReport& item : items) {
        out << (item.passed ? "pass" : "FAIL") << "  " << item.name;
        if (!item.message.empty()) out << "  (" << item.message << ")";
        out << '\n';
        for (const std::string& m : item.diff.missing) out << "    missing     " << m << '\n';
        for (const std::string& u : item.diff.unexpected)
            out << "    unexpected  " << u << '\n';
    }
    return out.str();
}

} // namespace glossnet
