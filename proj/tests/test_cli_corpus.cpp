#include <gtest/gtest.h>

#include <set>

#include "jsyz/errors.hpp"
#include "jsyz/report_json.hpp"

using namespace jsyz;

namespace {

std::vector<CorpusEntry> corpus() { return parse_corpus(embedded_corpus_text()); }

std::size_t count_filtered(const std::vector<CorpusEntry>& entries, const std::string& needle) {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.name.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST(Corpus, EmbeddedCorpusIsWellFormed) {
  const auto entries = corpus();
  EXPECT_GE(entries.size(), 30u);
  std::set<std::string> names, polys;
  for (const auto& e : entries) {
    EXPECT_TRUE(names.insert(e.name).second) << "duplicate name " << e.name;
    EXPECT_FALSE(e.source.empty()) << e.name;
    if (e.polynomial) {
      EXPECT_TRUE(polys.insert(parse_poly(*e.polynomial).primitive().to_string()).second) << e.name;
    }
  }
  EXPECT_EQ(count_filtered(entries, "exA8"), 8u);
  EXPECT_EQ(count_filtered(entries, "thmSym"), 3u);
  EXPECT_EQ(count_filtered(entries, "thmAd"), 4u);
  EXPECT_EQ(count_filtered(entries, "rkSym"), 6u);
}

TEST(Corpus, MalformedInputIsAnInputError) {
  EXPECT_THROW(parse_corpus("{"), InputError);
  EXPECT_THROW(parse_corpus("{}"), InputError);
  EXPECT_THROW(parse_corpus(R"([{"name":"a"}])"), InputError);
  EXPECT_THROW(parse_corpus(R"([{"name":"a","polynomial":"x^3","lines":["x"]}])"), InputError);
  const auto one = parse_corpus(R"([{"name":"a","source":"s","polynomial":"x^3+y^3+z^3","expected":{"tau":0}}])");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].expected.tau, 0);
}

TEST(Corpus, FailingExpectationIsReportedWithItsSource) {
  const auto entries =
      parse_corpus(R"([{"name":"wrong","source":"made up","polynomial":"x^3+y^3+z^3","expected":{"tau":5}},
                       {"name":"bad","source":"made up","polynomial":"x^2*y"}])");
  const auto results = run_corpus(entries, RunConfig{});
  ASSERT_EQ(results.size(), 2u);
  EXPECT_FALSE(results[0].pass());
  EXPECT_FALSE(results[1].pass());
  EXPECT_FALSE(results[1].error.empty());
  EXPECT_EQ(corpus_exit_code(results), 2);
  const auto table = render_table(results);
  EXPECT_NE(table.find("made up"), std::string::npos);
  EXPECT_NE(table.find("expected_tau: expected 5, computed 0"), std::string::npos);
}

TEST(Corpus, ResultsAreInCorpusOrderForAnyWidth) {
  const auto entries = corpus();
  RunConfig one, four;
  one.filter = four.filter = "exd";
  four.jobs = 4;
  const auto a = run_corpus(entries, one);
  const auto b = run_corpus(entries, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(to_json(a[i], false).dump(), to_json(b[i], false).dump());
    EXPECT_TRUE(a[i].pass()) << a[i].name;
  }
}

TEST(Json, ReportSchemaHasTheStableKeys) {
  const auto r = analyze(parse_poly("x*y*(x^4+y^4-z^4)"), {}, "exABC(i)");
  const auto j = to_json(r, false);
  for (const char* key : {"name", "degree", "exponents", "epsilons", "relation_degrees", "regularity", "tau", "nu",
                          "n_table", "type", "subtype", "checks"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("timings_ms"));
  EXPECT_TRUE(to_json(r, true).contains("timings_ms"));
  EXPECT_EQ(j["exponents"], Json({4, 4, 5}));
  EXPECT_EQ(j["tau"], 9);
  EXPECT_EQ(j["nu"], 10);
  EXPECT_EQ(j["subtype"], "3A");
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("expected"));
    EXPECT_TRUE(c.contains("actual"));
    EXPECT_TRUE(c["pass"].get<bool>());
  }
  // Byte-deterministic.
  EXPECT_EQ(j.dump(), to_json(analyze(parse_poly("x*y*(x^4+y^4-z^4)"), {}, "exABC(i)"), false).dump());
}

TEST(Json, SeededBuilderEntriesAreByteDeterministic) {
  const auto entries = corpus();
  RunConfig cfg;
  cfg.filter = "thmAd(2,3)";
  const auto a = run_corpus(entries, cfg);
  const auto b = run_corpus(entries, cfg);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(to_json(a[0], false).dump(), to_json(b[0], false).dump());
  cfg.seed = 2;
  const auto c = run_corpus(entries, cfg);
  EXPECT_TRUE(c[0].pass());
}

TEST(Search, DeterministicAndIndependentOfWidth) {
  SearchParams p;
  p.d = 4;
  p.target = {3, 3, 3};
  p.samples = 60;
  p.seed = 11;
  const auto a = run_search(p);
  p.jobs = 4;
  const auto b = run_search(p);
  EXPECT_EQ(to_json(a, p).dump(), to_json(b, p).dump());
  EXPECT_EQ(a.samples, 60);
  int total = a.skipped;
  for (const auto& [e, k] : a.histogram) total += k;
  EXPECT_EQ(total, 60);
  EXPECT_EQ(search_sample(p, 5), search_sample(p, 5));
}

TEST(Search, FindsSmoothAndThreeNodalQuartics) {
  SearchParams p;
  p.d = 4;
  p.samples = 300;
  p.seed = 7;
  p.target = {3, 3, 3, 3, 3};
  const auto r = run_search(p);
  EXPECT_FALSE(r.hits.empty());
  for (const auto& h : r.hits) EXPECT_EQ(h.tau, 3);
  p.target = {3, 3, 3};
  p.min_terms = 6;
  p.max_terms = 15;
  const auto s = run_search(p);
  EXPECT_FALSE(s.hits.empty());
  for (const auto& h : s.hits) EXPECT_EQ(h.tau, 0);
}

TEST(Search, EmptyFindingsArePhrasedAsAbsenceOfWitness) {
  SearchParams p;
  p.d = 4;
  p.target = {9, 9, 9};
  p.samples = 10;
  const auto r = run_search(p);
  EXPECT_TRUE(r.hits.empty());
  EXPECT_EQ(to_json(r, p)["note"], "no witness found under these bounds");
  EXPECT_NE(render_table(r, p).find("no witness found under these bounds"), std::string::npos);
  p.d = 2;
  EXPECT_THROW(run_search(p), InputError);
}
