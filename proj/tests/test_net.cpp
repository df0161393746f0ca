#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "glossnet/golden.hpp"
#include "glossnet/net.hpp"
#include "glossnet/pipeline.hpp"
#include "test_support.hpp"

using namespace glossnet;
using namespace gtest_support;

namespace {

SemanticNet fixture_net(bool derive = true) {
    PipelineConfig cfg = fixture_config();
    if (!derive) cfg.passes.clear();
    return run_pipeline(cfg).net;
}

RelationTriple make(const std::string& s, const std::string& rel,
                    const std::string& o,
                    Provenance prov = Provenance::Direct) {
    RelationTriple t;
    t.subject = SemanticUnit::parse(s);
    t.relation = RelationSlot::parse(rel);
    t.object = SemanticUnit::parse(o);
    t.provenance = prov;
    return t;
}

SemanticFrame make_frame(std::uint64_t id, const std::string& lemma,
                         WordCategory cat,
                         std::initializer_list<RelationTriple> triples) {
    SemanticFrame f;
    f.meaning = MeaningId(id, 0);
    f.lemma = lemma;
    f.category = cat;
    for (RelationTriple t : triples) f.add(std::move(t));
    return f;
}

std::set<std::string> derived_keys(const SemanticNet& net) {
    std::set<std::string> out;
    for (const DerivedEntry& d : net.derived()) out.insert(d.triple.str());
    return out;
}

} // namespace

TEST_CASE("build_net indexes one frame per fixture record") {
    PipelineConfig cfg = fixture_config();
    const PipelineResult result = run_pipeline(cfg);

    std::ifstream in(lexicon_path());
    std::size_t records = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++records;
    CHECK(result.net.frame_count() == records);
}

TEST_CASE("duplicate meaning ids are rejected when building the net") {
    std::vector<SemanticFrame> frames;
    frames.push_back(make_frame(1, "a", WordCategory::Noun, {}));
    frames.push_back(make_frame(1, "b", WordCategory::Noun, {}));
    CHECK_THROWS_AS(build_net(std::move(frames)), std::invalid_argument);
}

TEST_CASE("empty net") {
    const SemanticNet net = build_net({});
    CHECK(net.frame_count() == 0);
    CHECK(invert_relations(const_cast<SemanticNet&>(net)) == 0);
}

TEST_CASE("orango chain: exactly the six printed hypernyms") {
    const SemanticNet net = fixture_net(false);
    const std::vector<RelationTriple> chain = hypernym_chain(net, "orango", 10);
    std::set<std::string> targets;
    for (const RelationTriple& t : chain) {
        CHECK(t.provenance == Provenance::DerivedTaxonomy);
        CHECK(t.subject.lemma == "orango");
        targets.insert(t.object.lemma);
    }
    CHECK(targets == std::set<std::string>{"scimmia", "mammifero", "vertebrato",
                                           "animale", "organismo", "bestia"});
    CHECK(chain.size() == 6);
}

TEST_CASE("chain handles the bestia/animale cycle by visiting once") {
    const SemanticNet net = fixture_net(false);
    const std::vector<RelationTriple> from_bestia = hypernym_chain(net, "bestia", 10);
    std::set<std::string> targets;
    for (const RelationTriple& t : from_bestia) targets.insert(t.object.lemma);
    // animale links back to bestia; the start is already visited, so the
    // cycle closes without a self triple.
    CHECK(targets == std::set<std::string>{"animale", "organismo"});
}

TEST_CASE("synthetic three-cycle truncates against the brute-force closure") {
    std::vector<SemanticFrame> frames;
    frames.push_back(make_frame(1, "a", WordCategory::Noun,
                                {make("a(NOUN)", "TOKEN_OF", "b(NOUN)")}));
    frames.push_back(make_frame(2, "b", WordCategory::Noun,
                                {make("b(NOUN)", "TOKEN_OF", "c(NOUN)")}));
    frames.push_back(make_frame(3, "c", WordCategory::Noun,
                                {make("c(NOUN)", "TOKEN_OF", "a(NOUN)")}));
    const SemanticNet net = build_net(std::move(frames));
    const std::vector<RelationTriple> chain = hypernym_chain(net, "a", 10);

    // Brute-force closure with a visited set.
    std::set<std::string> expected;
    std::map<std::string, std::string> edge{{"a", "b"}, {"b", "c"}, {"c", "a"}};
    std::string cur = "a";
    std::set<std::string> visited{"a"};
    while (true) {
        cur = edge[cur];
        if (!visited.insert(cur).second) break;
        expected.insert(cur);
    }
    std::set<std::string> actual;
    for (const RelationTriple& t : chain) actual.insert(t.object.lemma);
    CHECK(actual == expected);
    CHECK(actual == std::set<std::string>{"b", "c"});
}

TEST_CASE("chain on an absent lemma raises a lookup error") {
    const SemanticNet net = fixture_net(false);
    CHECK_THROWS_AS(hypernym_chain(net, "zzz-absent", 10), lookup_error);
}

TEST_CASE("stop status") {
    const SemanticNet net = fixture_net(false);
    SUBCASE("cosa has no outgoing lexical TOKEN_OF") {
        CHECK(stop_status(net, "cosa", 16));
    }
    SUBCASE("orango continues to scimmia") {
        CHECK_FALSE(stop_status(net, "orango", 16));
    }
    SUBCASE("self-loop terminates at itself") {
        std::vector<SemanticFrame> frames;
        frames.push_back(make_frame(1, "eco", WordCategory::Noun,
                                    {make("eco(NOUN)", "TOKEN_OF", "eco(NOUN)")}));
        const SemanticNet loop = build_net(std::move(frames));
        CHECK(stop_status(loop, "eco", 16));
    }
    SUBCASE("absent lemma raises") {
        CHECK_THROWS_AS(stop_status(net, "zzz-absent", 16), lookup_error);
    }
}

TEST_CASE("inversion adds the paired inverse with carried modifiers") {
    const SemanticNet net = [] {
        SemanticNet n = fixture_net(false);
        invert_relations(n);
        return n;
    }();
    const std::set<std::string> d = derived_keys(net);

    SUBCASE("acquirente's agent link is inverted") {
        CHECK(d.count("acquistare(VERB) HAS_AGNT acquirente(NOUN)"));
        CHECK(d.count("comprare(VERB) HAS_AGNT acquirente(NOUN)"));
        CHECK(d.count("comprare(VERB) HAS_AGNT compratore(NOUN)"));
    }
    SUBCASE("vendere collects its printed participants") {
        CHECK(d.count("vendere(VERB) HAS_AGNT venditore(NOUN)"));
        CHECK(d.count("vendere(VERB) HAS_OBJ venduto(NOUN)"));
        CHECK(d.count("vendere(VERB) HAS_PLACE negozio(NOUN)"));
    }
    SUBCASE("NEG carries over: white stays not-colored") {
        CHECK(d.count("colorato(ADJ) NEG,QUALITY_OF bianco(ADJ)"));
    }
    SUBCASE("every white quality inverts, fixture tally") {
        std::size_t count = 0;
        for (const DerivedEntry& e : net.derived()) {
            const RelationTriple& t = e.triple;
            if (t.relation.is_ambiguous()) continue;
            if (t.relation.kind.name != RelationName::QualityOf) continue;
            if (t.subject.is_word() && t.subject.lemma == "bianco" &&
                !t.relation.kind.has(RelMod::Neg))
                ++count;
        }
        // Independent tally of HAS_QUALITY(x; bianco) in the frames.
        std::size_t direct = 0;
        for (const SemanticFrame* f : net.frames())
            for (const RelationTriple& t : f->triples)
                if (!t.relation.is_ambiguous() &&
                    t.relation.kind.name == RelationName::HasQuality &&
                    !t.relation.kind.has(RelMod::Neg) && t.object.is_word() &&
                    t.object.lemma == "bianco")
                    ++direct;
        CHECK(count == direct);
        CHECK(count == 2); // neve, latte
    }
}

TEST_CASE("inversion is involutive") {
    SemanticNet net = fixture_net(false);
    invert_relations(net);
    const std::size_t after_first = net.derived().size();
    CHECK(invert_relations(net) == 0);
    CHECK(net.derived().size() == after_first);
}

TEST_CASE("inheritance copies type content downward only") {
    SemanticNet net = fixture_net(false);
    invert_relations(net);
    inherit_attributes(net, 16);
    const std::set<std::string> d = derived_keys(net);

    SUBCASE("commerciare inherits the printed participant links") {
        CHECK(d.count("commerciare(VERB) HAS_AGNT venditore(NOUN)"));
        CHECK(d.count("commerciare(VERB) HAS_AGNT acquirente(NOUN)"));
        CHECK(d.count("commerciare(VERB) HAS_AGNT compratore(NOUN)"));
        CHECK(d.count("commerciare(VERB) HAS_OBJ venduto(NOUN)"));
        CHECK(d.count("commerciare(VERB) HAS_PLACE negozio(NOUN)"));
    }
    SUBCASE("orango inherits down the whole chain") {
        CHECK(d.count("orango(NOUN) HAS_PART scheletro(NOUN)"));
        CHECK(d.count("orango(NOUN) HAS_PART mammella(NOUN)"));
    }
    SUBCASE("nothing flows token to type") {
        CHECK_FALSE(d.count("comprare(VERB) HAS_SPEC prodotto(NOUN)"));
        CHECK_FALSE(d.count("vendere(VERB) HAS_SPEC prodotto(NOUN)"));
        for (const std::string& k : d)
            CHECK(k.find("comprare(VERB) HAS_OBJ prodotto") == std::string::npos);
    }
    SUBCASE("re-running reaches a fixpoint") {
        CHECK(inherit_attributes(net, 16) == 0);
    }
    SUBCASE("a type with an empty frame adds nothing new") {
        std::vector<SemanticFrame> frames;
        frames.push_back(make_frame(1, "x", WordCategory::Noun,
                                    {make("x(NOUN)", "TOKEN_OF", "y(NOUN)")}));
        frames.push_back(make_frame(2, "y", WordCategory::Noun, {}));
        SemanticNet small = build_net(std::move(frames));
        CHECK(inherit_attributes(small, 16) == 0);
    }
}

TEST_CASE("role inference reproduces the commerciante derivation") {
    SemanticNet net = fixture_net(false);
    invert_relations(net);
    inherit_attributes(net, 16);
    infer_roles(net);
    invert_relations(net);

    bool inferred = false;
    bool mercante = false;
    bool negoziante = false;
    for (const DerivedEntry& e : net.derived()) {
        const std::string k = e.triple.str();
        if (k == "commerciante(NOUN) AGNT_OF commerciare(VERB)") {
            inferred = true;
            CHECK(e.triple.provenance == Provenance::DerivedInference);
        }
        if (k == "mercante(NOUN) AGNT_OF commerciare(VERB)") mercante = true;
        if (k == "negoziante(NOUN) AGNT_OF commerciare(VERB)") negoziante = true;
    }
    CHECK(inferred);
    CHECK(mercante);
    CHECK(negoziante);

    SUBCASE("the second inversion exposes the inferred agent both ways") {
        CHECK(derived_keys(net).count(
            "commerciare(VERB) HAS_AGNT commerciante(NOUN)"));
    }
    SUBCASE("PERSON-tagged agents stamp the activity") {
        CHECK(derived_keys(net).count("commerciare(VERB) HAS_TAG [PERSON]"));
    }
}

TEST_CASE("inference on a net without matching premises adds nothing") {
    std::vector<SemanticFrame> frames;
    frames.push_back(make_frame(1, "n", WordCategory::Noun,
                                {make("n(NOUN)", "AGNT_OF", "v(VERB)")}));
    SemanticNet net = build_net(std::move(frames));
    CHECK(infer_roles(net) == 0);
}

TEST_CASE("two independent inference instances both fire") {
    std::vector<SemanticFrame> frames;
    frames.push_back(make_frame(1, "n1", WordCategory::Noun,
                                {make("n1(NOUN)", "AGNT_OF", "v1(VERB)"),
                                 make("v1(VERB)", "HAS_OBJ", "o1(NOUN)")}));
    frames.push_back(make_frame(2, "w1", WordCategory::Verb,
                                {make("w1(VERB)", "TOKEN_OF", "v1(VERB)"),
                                 make("w1(VERB)", "HAS_OBJ", "o1(NOUN)")}));
    frames.push_back(make_frame(3, "n2", WordCategory::Noun,
                                {make("n2(NOUN)", "AGNT_OF", "v2(VERB)"),
                                 make("v2(VERB)", "HAS_OBJ", "o2(NOUN)")}));
    frames.push_back(make_frame(4, "w2", WordCategory::Verb,
                                {make("w2(VERB)", "TOKEN_OF", "v2(VERB)"),
                                 make("w2(VERB)", "HAS_OBJ", "o2(NOUN)")}));
    SemanticNet net = build_net(std::move(frames));
    infer_roles(net);
    const std::set<std::string> d = derived_keys(net);

    // Exhaustive enumeration over all triple pairs, as an oracle.
    CHECK(d.count("n1(NOUN) AGNT_OF w1(VERB)"));
    CHECK(d.count("n2(NOUN) AGNT_OF w2(VERB)"));
    CHECK_FALSE(d.count("n1(NOUN) AGNT_OF w2(VERB)"));
    CHECK_FALSE(d.count("n2(NOUN) AGNT_OF w1(VERB)"));
}

TEST_CASE("derivation passes only add; frame content never changes") {
    SemanticNet net = fixture_net(false);
    std::map<std::string, std::vector<std::string>> before;
    for (const SemanticFrame* f : net.frames())
        for (const RelationTriple& t : f->triples)
            before[f->meaning.str()].push_back(t.str());

    invert_relations(net);
    inherit_attributes(net, 16);
    infer_roles(net);
    invert_relations(net);

    std::map<std::string, std::vector<std::string>> after;
    for (const SemanticFrame* f : net.frames())
        for (const RelationTriple& t : f->triples)
            after[f->meaning.str()].push_back(t.str());
    CHECK(before == after);

    for (const DerivedEntry& d : net.derived()) {
        CHECK(d.triple.provenance != Provenance::Direct);
        CHECK(d.triple.provenance != Provenance::Raised);
    }
}

TEST_CASE("query matches lemmas, relations and wildcards") {
    const SemanticNet net = fixture_net(true);

    SUBCASE("orango TOKEN_OF * yields the six chain targets") {
        TriplePattern p;
        p.subject = "orango";
        p.relation = "TOKEN_OF";
        std::set<std::string> targets;
        for (const QueryResult& r : query(net, p))
            if (r.triple.object.is_word()) targets.insert(r.triple.object.lemma);
        CHECK(targets == std::set<std::string>{"scimmia", "mammifero", "vertebrato",
                                               "animale", "organismo", "bestia"});
    }
    SUBCASE("* QUALITY_OF * includes the bianco inversions") {
        TriplePattern p;
        p.relation = "QUALITY_OF";
        bool bianco = false;
        for (const QueryResult& r : query(net, p))
            if (r.triple.subject.is_word() && r.triple.subject.lemma == "bianco")
                bianco = true;
        CHECK(bianco);
    }
    SUBCASE("patterns matching nothing return empty") {
        TriplePattern p;
        p.subject = "zzz-absent";
        CHECK(query(net, p).empty());
    }
}

TEST_CASE("net persistence round-trips and loads back queryable") {
    const SemanticNet net = fixture_net(true);
    std::ostringstream first;
    save_net(net, first);

    const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                              : "/tmp") +
                            "/glossnet_net_rt.txt";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << first.str();
    }
    const SemanticNet again = load_net(tmp);
    CHECK(again.frame_count() == net.frame_count());
    CHECK(again.derived().size() == net.derived().size());
    std::ostringstream second;
    save_net(again, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("goldens verify against the derived fixture net") {
    const SemanticNet net = fixture_net(true);
    const std::vector<GoldenFrame> goldens = load_goldens(goldens_path());
    REQUIRE(goldens.size() >= 20);
    const GoldenReport report = verify_golden(net, goldens);
    INFO(report.str());
    CHECK(report.all_passed);

    SUBCASE("a golden for an absent meaning fails alone") {
        std::vector<GoldenFrame> broken = goldens;
        GoldenFrame ghost;
        ghost.name = "ghost";
        ghost.meaning = MeaningId(999999, 0);
        broken.push_back(ghost);
        const GoldenReport r2 = verify_golden(net, broken);
        CHECK_FALSE(r2.all_passed);
        std::size_t failures = 0;
        for (const auto& item : r2.items)
            if (!item.passed) ++failures;
        CHECK(failures == 1);
    }
    SUBCASE("an extra expected triple is named in the diff") {
        GoldenFrame extra;
        extra.name = "gorilla-extra";
        extra.meaning = MeaningId(41551, 0);
        extra.expected.push_back(make("gorilla(NOUN)", "HAS_PART", "coda(NOUN)"));
        const GoldenReport r3 = verify_golden(net, {extra});
        REQUIRE(r3.items.size() == 1);
        CHECK_FALSE(r3.items[0].passed);
        REQUIRE(r3.items[0].diff.missing.size() == 1);
        CHECK(r3.items[0].diff.missing[0] ==
              "gorilla(NOUN) HAS_PART coda(NOUN)");
    }
}

TEST_CASE("primitive rounds converge at fixture scale") {
    // The default threshold excludes every fixture count, so extra rounds
    // must not change the result.
    PipelineConfig one = fixture_config();
    one.primitive_rounds = 1;
    PipelineConfig three = fixture_config();
    three.primitive_rounds = 3;
    std::ostringstream a, b;
    save_net(run_pipeline(one).net, a);
    save_net(run_pipeline(three).net, b);
    CHECK(a.str() == b.str());
}

TEST_CASE("count_heads matches an independent tally and sums to processed") {
    const Lexicon lex = load_lexicon(lexicon_path(), parses_path());
    HeadCountReport report;
    const HeadFrequencyTable table = count_heads(lex, &report);

    // One-pass oracle over the parse file: root lemma per record.
    std::map<std::string, long> oracle;
    const auto trees = load_parse_file(parses_path());
    for (const auto& [id, tree] : trees) {
        for (const DependencyNode& n : tree.nodes)
            if (n.head == 0) ++oracle[n.lemma];
    }
    CHECK(table.rows == oracle);
    CHECK(table.total() == report.processed);
    CHECK(report.errors.empty());
}

TEST_CASE("count_heads reports invalid trees and skips them") {
    Lexicon lex;
    MeaningEntry good;
    good.id = MeaningId(1, 0);
    good.lemma = "uno";
    good.category = WordCategory::Noun;
    good.gloss_ref = good.id;
    DependencyNode root;
    root.index = 1;
    root.lemma = root.surface = "cosa";
    root.category = WordCategory::Noun;
    root.head = 0;
    good.gloss.nodes.push_back(root);
    lex.add(good);

    MeaningEntry bad = good;
    bad.id = MeaningId(2, 0);
    bad.lemma = "due";
    bad.gloss.nodes.push_back(root); // duplicate index, two roots
    lex.add(bad);

    HeadCountReport report;
    const HeadFrequencyTable table = count_heads(lex, &report);
    CHECK(table.total() == 1);
    CHECK(report.processed == 1);
    REQUIRE(report.errors.size() == 1);
    CHECK(report.errors.front().find("2.0") != std::string::npos);
}

TEST_CASE("empty lexicon counts to an empty table") {
    const Lexicon lex;
    HeadCountReport report;
    const HeadFrequencyTable table = count_heads(lex, &report);
    CHECK(table.rows.empty());
    CHECK(table.total() == 0);
}

TEST_CASE("inventory construction") {
    const RuleSet rules = load_rules(rules_path());
    const PrimitiveInventory seeds = inventory_from_rules(rules);

    SUBCASE("variant-group counts are summed before thresholding") {
        HeadFrequencyTable table;
        table.threshold = 200;
        table.rows = {{"cosa", 310}, {"oggetto", 174}, {"elemento", 416}};
        long sum = 0;
        for (const auto& [lemma, n] : table.rows) sum += n;
        CHECK(sum == 900);
        const PrimitiveInventory inv = build_inventory(
            table, seeds, [](const std::string&) { return true; });
        CHECK(inv.contains("cosa"));
        CHECK(inv.contains("oggetto"));
        CHECK(inv.contains("elemento"));
        CHECK(*inv.lookup("oggetto") == TagSequence{Tag::Thing});
    }
    SUBCASE("empty table keeps the seeds") {
        const HeadFrequencyTable table;
        const PrimitiveInventory inv = build_inventory(
            table, seeds, [](const std::string&) { return true; });
        CHECK(inv.entries == seeds.entries);
    }
    SUBCASE("a threshold above every count admits nothing new") {
        const Lexicon lex = load_lexicon(lexicon_path(), parses_path());
        HeadFrequencyTable table = count_heads(lex);
        table.threshold = 1000000;
        const PrimitiveInventory inv = build_inventory(
            table, seeds, [](const std::string&) { return true; });
        CHECK(inv.entries == seeds.entries);
    }
    SUBCASE("lowering the threshold never removes entries") {
        const Lexicon lex = load_lexicon(lexicon_path(), parses_path());
        HeadFrequencyTable high = count_heads(lex);
        high.threshold = 3;
        HeadFrequencyTable low = high;
        low.threshold = 1;
        const auto stop = [](const std::string&) { return true; };
        const PrimitiveInventory a = build_inventory(high, seeds, stop);
        const PrimitiveInventory b = build_inventory(low, seeds, stop);
        for (const auto& [lemma, tags] : a.entries) CHECK(b.contains(lemma));
    }
}
