#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "climakg/ca/mapping.hpp"
#include "climakg/errors.hpp"
#include "climakg/sparql/evaluator.hpp"
#include "climakg/sparql/parser.hpp"
#include "climakg/store/serialization.hpp"
#include "oracles.hpp"

using namespace climakg;
namespace ct = climakg::testing;
using rdf::Literal;
using rdf::Term;
using sparql::Evaluate;
using sparql::ParseQuery;

namespace {

store::Graph Load(const std::string& nt) {
  store::Graph g;
  store::LoadNTriples(g, nt);
  g.Freeze();
  return g;
}

const char* kPeople =
    "<http://x/alice> <http://x/age> \"31\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
    "<http://x/bob> <http://x/age> \"25\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
    "<http://x/carol> <http://x/age> \"40\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
    "<http://x/alice> <http://x/knows> <http://x/bob> .\n"
    "<http://x/bob> <http://x/knows> <http://x/carol> .\n"
    "<http://x/alice> <http://x/mail> \"a@x\" .\n";

}  // namespace

TEST(Evaluate, EmptyGraph) {
  store::Graph g;
  g.Freeze();
  const auto r = Evaluate(ParseQuery("SELECT * WHERE { ?s ?p ?o }"), g);
  EXPECT_EQ(r.rows.size(), 0u);
  EXPECT_EQ(r.variables, (std::vector<std::string>{"s", "p", "o"}));
}

TEST(Evaluate, TavgQueryCountsRowsInRange) {
  ca::Vocabulary vocab;
  std::vector<ca::ObservationRecord> obs;
  std::vector<std::string> days = {"1979-12-30", "1979-12-31", "1980-01-01", "1980-01-02",
                                   "1995-06-15", "2000-02-29", "2010-07-01", "2019-12-31",
                                   "2020-01-01", "2005-05-05", "1999-09-09", "2001-01-01"};
  for (std::size_t i = 0; i < days.size(); ++i) {
    obs.push_back(ca::MakeObservation("GHCND:EI000003969", *ParseIsoDate(days[i]), "TAVG",
                                      static_cast<double>(i)));
    obs.push_back(ca::MakeObservation("GHCND:EI000003969", *ParseIsoDate(days[i]), "TMAX", 20.0));
  }
  store::Graph g;
  ca::MapDataset(vocab, {{"GHCND:EI000003969", "DUBLIN", 53.4, -6.2}}, obs, g);
  g.Freeze();

  std::size_t expected = 0;
  for (const auto& o : obs) {
    if (o.code == ca::DatatypeCode::kTavg && YearOf(o.date) >= 1980 && YearOf(o.date) <= 2019) ++expected;
  }
  ASSERT_EQ(expected, 9u);
  const auto q = ParseQuery(ct::ReadFile(ct::SourcePath("queries/dublin_tavg.rq")));
  const auto r = Evaluate(q, g);
  EXPECT_EQ(r.rows.size(), expected);
  // ORDER BY ?date
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_LT(*r.rows[i - 1][0]->literal().date_value(), *r.rows[i][0]->literal().date_value());
  }
}

TEST(Evaluate, OptionalNeverMatchingKeepsRows) {
  const auto g = Load(kPeople);
  const auto r = Evaluate(
      ParseQuery("SELECT ?s ?z WHERE { ?s <http://x/age> ?a OPTIONAL { ?s <http://x/none> ?z } }"), g);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_FALSE(row[1].has_value());
}

TEST(Evaluate, OptionalLeftJoinAndFilterOnOptionalVariable) {
  const auto g = Load(kPeople);
  auto q = ParseQuery(
      "SELECT ?s ?m WHERE { ?s <http://x/age> ?a OPTIONAL { ?s <http://x/mail> ?m } "
      "FILTER(!BOUND(?m)) } ORDER BY ?s");
  auto r = Evaluate(q, g);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0][0]->iri().str(), "http://x/bob");
  EXPECT_EQ(r.rows[1][0]->iri().str(), "http://x/carol");

  // A filter inside OPTIONAL only restricts the optional part.
  q = ParseQuery(
      "SELECT ?s ?f WHERE { ?s <http://x/age> ?a OPTIONAL { ?s <http://x/knows> ?f "
      "FILTER(?a > 30) } } ORDER BY ?s");
  r = Evaluate(q, g);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0][1]->iri().str(), "http://x/bob");  // alice, 31
  EXPECT_FALSE(r.rows[1][1].has_value());                // bob, 25
  EXPECT_FALSE(r.rows[2][1].has_value());                // carol knows nobody
}

TEST(Evaluate, FiltersCollapseErrorsToFalse) {
  sparql::Binding b;
  b.emplace("d", Term(Literal::DateValue(*ParseIsoDate("1951-06-01"))));
  b.emplace("s", Term(Literal::String("abc")));
  auto filter = [&](const std::string& text) {
    const auto q = ParseQuery("SELECT * WHERE { ?d <http://p> ?s FILTER(" + text + ") }");
    return sparql::EvalFilter(q.where.filters[0], b);
  };
  EXPECT_TRUE(filter("YEAR(\"1951-06-01\"^^<http://www.w3.org/2001/XMLSchema#date>) >= 1951"));
  EXPECT_TRUE(filter("YEAR(?d) = 1951 && MONTH(?d) = 6 && DAY(?d) = 1"));
  EXPECT_FALSE(filter("?x < 3"));
  EXPECT_FALSE(filter("\"abc\" < 5"));
  EXPECT_FALSE(filter("?s < 5"));
  EXPECT_FALSE(filter("YEAR(?s) = 1951"));
  EXPECT_TRUE(filter("STR(?s) = \"abc\""));
  EXPECT_TRUE(filter("\"01\"^^<http://www.w3.org/2001/XMLSchema#integer> = 1"));
  EXPECT_TRUE(filter("<http://a> != <http://b>"));
  EXPECT_TRUE(filter("BOUND(?d) && !BOUND(?x)"));
}

TEST(Evaluate, OrderByUnboundFirstAndDescending) {
  const auto g = Load(kPeople);
  auto r = Evaluate(ParseQuery("SELECT ?s ?m WHERE { ?s <http://x/age> ?a "
                               "OPTIONAL { ?s <http://x/mail> ?m } } ORDER BY ?m ?s"),
                    g);
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_FALSE(r.rows[0][1].has_value());
  EXPECT_FALSE(r.rows[1][1].has_value());
  EXPECT_TRUE(r.rows[2][1].has_value());

  r = Evaluate(ParseQuery("SELECT ?a WHERE { ?s <http://x/age> ?a } ORDER BY DESC(?a) LIMIT 2"), g);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0][0]->literal().lexical(), "40");
  EXPECT_EQ(r.rows[1][0]->literal().lexical(), "31");

  r = Evaluate(ParseQuery("SELECT ?o WHERE { ?s ?p ?o } ORDER BY ?o"), g);
  const auto again = Evaluate(ParseQuery("SELECT ?o WHERE { ?s ?p ?o } ORDER BY ?o"), g);
  EXPECT_EQ(ct::SortedRows(r), ct::SortedRows(again));
  for (std::size_t i = 0; i < r.rows.size(); ++i) EXPECT_EQ(r.rows[i], again.rows[i]);
}

TEST(Evaluate, Limits) {
  const auto g = Load(kPeople);
  const auto q = ParseQuery("SELECT * WHERE { ?a ?b ?c . ?d ?e ?f }");
  sparql::EvalLimits limits;
  limits.max_intermediate_rows = 10;
  EXPECT_THROW(Evaluate(q, g, limits), QueryLimitExceeded);
  limits = {};
  limits.max_rows = 5;
  EXPECT_THROW(Evaluate(q, g, limits), QueryLimitExceeded);
  limits = {};
  limits.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(Evaluate(q, g, limits), QueryLimitExceeded);
  std::atomic<bool> cancelled{true};
  limits = {};
  limits.cancelled = &cancelled;
  EXPECT_THROW(Evaluate(q, g, limits), QueryLimitExceeded);
  EXPECT_EQ(Evaluate(q, g).rows.size(), 36u);
}

TEST(EvaluateProperties, MatchesNaiveEnumerator) {
  std::mt19937_64 rng(41);
  const auto pool = ct::MakeTermPool(true);
  for (int round = 0; round < 40; ++round) {
    const auto triples = ct::RandomTriples(rng, pool, 120);
    const auto g = ct::BuildGraph(triples);
    for (int k = 0; k < 5; ++k) {
      const std::string text = ct::RandomQueryText(rng, pool);
      const auto q = ParseQuery(text);
      EXPECT_EQ(ct::SortedRows(Evaluate(q, g)), ct::NaiveEvaluate(q, triples)) << text;
    }
  }
}

TEST(EvaluateProperties, DistinctLimitOffset) {
  std::mt19937_64 rng(42);
  const auto pool = ct::MakeTermPool(false);
  for (int round = 0; round < 30; ++round) {
    const auto g = ct::BuildGraph(ct::RandomTriples(rng, pool, 200));
    const auto distinct = Evaluate(ParseQuery("SELECT DISTINCT ?p ?o WHERE { ?s ?p ?o }"), g);
    std::set<std::string> keys;
    for (const auto& row : distinct.rows) {
      EXPECT_TRUE(keys.insert(row[0]->ToNTriples() + " " + row[1]->ToNTriples()).second);
    }

    const std::string base = "SELECT ?s ?p ?o WHERE { ?s ?p ?o } ORDER BY ?o DESC(?s) ?p";
    const auto full = Evaluate(ParseQuery(base), g);
    for (int w = 0; w < 10; ++w) {
      const std::size_t limit = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
      const std::size_t offset = std::uniform_int_distribution<std::size_t>(0, 220)(rng);
      const auto win = Evaluate(
          ParseQuery(base + " LIMIT " + std::to_string(limit) + " OFFSET " + std::to_string(offset)), g);
      EXPECT_LE(win.rows.size(), limit);
      for (std::size_t i = 0; i < win.rows.size(); ++i) {
        ASSERT_LT(offset + i, full.rows.size());
        EXPECT_EQ(win.rows[i], full.rows[offset + i]);
      }
      const std::size_t expected =
          offset >= full.rows.size() ? 0 : std::min(limit, full.rows.size() - offset);
      EXPECT_EQ(win.rows.size(), expected);
    }
  }
}

TEST(EvaluateProperties, JoinOrderIndependence) {
  std::mt19937_64 rng(43);
  const auto pool = ct::MakeTermPool(true);
  for (int round = 0; round < 40; ++round) {
    const auto g = ct::BuildGraph(ct::RandomTriples(rng, pool, 200));
    auto q = ParseQuery(ct::RandomQueryText(rng, pool));
    const auto expected = ct::SortedRows(Evaluate(q, g));
    const auto original = q.where.triples;
    std::vector<std::size_t> order(original.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      q.where.triples.clear();
      for (std::size_t i : order) q.where.triples.push_back(original[i]);
      EXPECT_EQ(ct::SortedRows(Evaluate(q, g)), expected);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(EvaluateProperties, ConcurrentEvaluationOnFrozenGraph) {
  std::mt19937_64 rng(44);
  const auto pool = ct::MakeTermPool(true);
  const auto g = ct::BuildGraph(ct::RandomTriples(rng, pool, 200));
  const auto q = ParseQuery("SELECT * WHERE { ?a ?p ?b . ?b ?q ?c }");
  const auto expected = ct::SortedRows(Evaluate(q, g));
  std::vector<std::thread> threads;
  std::atomic<int> mismatches{0};
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 20; ++i) {
        if (ct::SortedRows(Evaluate(q, g)) != expected) ++mismatches;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(mismatches.load(), 0);
}
