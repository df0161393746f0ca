#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "glossnet/pipeline.hpp"
#include "glossnet/rules.hpp"
#include "test_support.hpp"

using namespace glossnet;
using namespace gtest_support;

namespace {

std::string write_rules(const std::string& body) {
    const std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                              : "/tmp") +
                            "/glossnet_rules_case.rules";
    std::ofstream out(tmp);
    out << body;
    return tmp;
}

} // namespace

TEST_CASE("the shipped rule file loads and is internally consistent") {
    const RuleSet rules = load_rules(rules_path());
    CHECK_FALSE(rules.seeds.empty());
    CHECK_FALSE(rules.tag_rules.empty());
    CHECK_FALSE(rules.functor_families.empty());
    CHECK(rules.prep_role("con") == PrepRole::Con);
    CHECK(rules.prep_role("with") == PrepRole::Con);
    CHECK(rules.is_functor_word("caratterizzato"));
    CHECK_FALSE(rules.is_functor_word("scimmia"));

    SUBCASE("every variant group carries one shared tag sequence") {
        for (const VariantGroup& g : rules.groups) {
            CHECK_FALSE(g.tags.empty());
            for (const std::string& lemma : g.lemmas)
                CHECK(*rules.seed_tags(lemma) == g.tags);
        }
    }
    SUBCASE("rule match keys resolve their classes") {
        for (const EntityTagRule& r : rules.tag_rules) {
            if (r.head_match.size() > 1 && r.head_match[0] == '@')
                CHECK(rules.wordclasses.count(r.head_match.substr(1)));
        }
    }
}

TEST_CASE("a lemma in two variant groups is rejected") {
    const std::string path = write_rules(
        "group a-words cosa oggetto : THING\n"
        "group b-words oggetto roba : THING\n");
    CHECK_THROWS_AS(load_rules(path), input_error);
}

TEST_CASE("equal match key and priority is a validation error naming the rule") {
    const std::string path = write_rules(
        "rule 50 VERB muovere ACTION,CHANGE,PLACE\n"
        "rule 50 VERB muovere ACTION,CHANGE\n");
    try {
        load_rules(path);
        FAIL("expected a duplicate-rule error");
    } catch (const input_error& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("distinct priorities on one match key are allowed") {
    const std::string path = write_rules(
        "rule 50 VERB muovere ACTION,CHANGE,PLACE\n"
        "rule 60 VERB muovere ACTION,CHANGE\n");
    const RuleSet rules = load_rules(path);
    CHECK(rules.tag_rules.size() == 2);
}

TEST_CASE("a functor pattern may not belong to two families") {
    const std::string path = write_rules(
        "functor one TOKEN_OF tipo+di\n"
        "functor two HAS_PART tipo+di\n");
    CHECK_THROWS_AS(load_rules(path), input_error);
}

TEST_CASE("unknown record kinds and malformed yields are named") {
    CHECK_THROWS_AS(load_rules(write_rules("frobnicate x y\n")), input_error);
    CHECK_THROWS_AS(load_rules(write_rules("functor f NOT_A_RELATION tipo+di\n")),
                    input_error);
    CHECK_THROWS_AS(load_rules(write_rules("seed cosa NOT_A_TAG\n")), input_error);
    CHECK_THROWS_AS(load_rules(write_rules("prep con sopra\n")), input_error);
}

TEST_CASE("pipeline configuration is validated") {
    PipelineConfig cfg = fixture_config();
    SUBCASE("unknown pass") {
        cfg.passes = {"invert", "frobnicate"};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("threshold below one") {
        cfg.threshold = 0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("depth limit below one") {
        cfg.depth_limit = 0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("missing paths") {
        cfg.rules_path.clear();
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
    SUBCASE("the fixture configuration is valid") {
        CHECK_NOTHROW(fixture_config().validate());
    }
}

TEST_CASE("functor pattern grammar round-trips") {
    for (const char* text : {"caratterizzato+da", "in:modo", "in:grado+di", "uso+di",
                             "included"}) {
        const FunctorPattern p = FunctorPattern::parse(text);
        CHECK(p.str() == text);
    }
    CHECK_THROWS_AS(FunctorPattern::parse("in:+di"), std::invalid_argument);
}
