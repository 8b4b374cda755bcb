#include <httplib.h>

#include <chrono>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "climakg/analytics/quantiles.hpp"
#include "climakg/analytics/temperature.hpp"
#include "climakg/analytics/weather.hpp"
#include "climakg/ca/mapping.hpp"
#include "climakg/cli/app.hpp"
#include "climakg/endpoint/server.hpp"
#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/noaa/csv.hpp"
#include "climakg/noaa/fetch.hpp"
#include "climakg/sparql/parser.hpp"
#include "climakg/sparql/results.hpp"
#include "climakg/store/serialization.hpp"
#include "oracles.hpp"

using namespace climakg;

namespace {

// Pinned tolerances and budgets.
constexpr double kQuantileTolerance = 1e-9;
constexpr double kMedianTolerance = 1e-6;
constexpr double kOracleBudgetSeconds = 60.0;
constexpr int kOracleGraphs = 100;
constexpr int kQueriesPerGraph = 20;
constexpr int kRoundTrips = 50;
constexpr int kFuzzQueries = 1000;
constexpr std::size_t kFuzzMaxRows = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void Report(int id, const std::string& name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << id << " " << name;
  if (!o.detail.empty()) std::cout << ": " << o.detail;
  std::cout << std::endl;
  if (!o.pass) ++failures;
}

template <typename F>
void Check(int id, const std::string& name, F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.Fail(std::string("exception: ") + e.what());
  }
  Report(id, name, o);
}

std::string Fixture(const std::string& rel) { return testing::SourcePath(rel).string(); }

nlohmann::json Manifest(const std::string& name) {
  return nlohmann::json::parse(testing::ReadFile(Fixture("fixtures/csv/" + name + ".manifest.json")));
}

std::shared_ptr<const store::Graph> MapCsv(const std::string& name) {
  auto g = std::make_shared<store::Graph>();
  const auto parsed = noaa::ParseCsv(testing::ReadFile(Fixture("fixtures/csv/" + name + ".csv")));
  ca::MapDataset(ca::Vocabulary(), parsed.stations, parsed.observations, *g);
  g->Freeze();
  return g;
}

std::string Str(std::size_t n) { return std::to_string(n); }

void EvaluatorMatchesOracle(Outcome& o) {
  std::mt19937_64 rng(20240601);
  const auto started = std::chrono::steady_clock::now();
  int compared = 0, nonempty = 0;
  for (int g = 0; g < kOracleGraphs; ++g) {
    const auto pool = testing::MakeTermPool(g % 2 == 1);
    const auto triples = testing::RandomTriples(rng, pool, 80);
    const auto graph = testing::BuildGraph(triples);
    for (int q = 0; q < kQueriesPerGraph; ++q) {
      const std::string text = testing::RandomQueryText(rng, pool);
      const auto query = sparql::ParseQuery(text);
      const auto expected = testing::NaiveEvaluate(query, triples);
      if (testing::SortedRows(sparql::Evaluate(query, graph)) != expected) {
        o.Fail("graph " + std::to_string(g) + " disagrees on: " + text);
        return;
      }
      ++compared;
      if (!expected.empty()) ++nonempty;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (seconds > kOracleBudgetSeconds) o.Fail("took " + std::to_string(seconds) + " s");
  o.detail = std::to_string(compared) + " queries (" + std::to_string(nonempty) + " non-empty) over " + std::to_string(kOracleGraphs) +
             " graphs in " + std::to_string(seconds) + " s";
}

void ClassifierTruthTable(Outcome& o) {
  using analytics::WeatherLabel;
  int cases = 0;
  for (unsigned flags = 0; flags < 16; ++flags) {
    for (double prcp : {0.0, 0.1}) {
      for (double temp : {-1.0, 0.0, 0.1}) {
        analytics::DayWeatherInput d;
        d.rain_flag = flags & 1;
        d.snow_flag = flags & 2;
        d.fog_flag = flags & 4;
        d.haze_flag = flags & 8;
        d.precipitation = prcp;
        d.temperature = temp;
        WeatherLabel expected = WeatherLabel::kSun;
        if (d.rain_flag && prcp > 0 && temp > 0) {
          expected = WeatherLabel::kRain;
        } else if (d.snow_flag && prcp > 0 && temp <= 0) {
          expected = WeatherLabel::kSnow;
        } else if (d.fog_flag) {
          expected = WeatherLabel::kFog;
        } else if (d.haze_flag) {
          expected = WeatherLabel::kDrizzle;
        }
        if (analytics::ClassifyDay(d) != expected) {
          o.Fail("flags=" + std::to_string(flags) + " prcp=" + std::to_string(prcp) +
                 " temp=" + std::to_string(temp));
        }
        ++cases;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
}

void QuartilesMatchOracle(Outcome& o) {
  const auto q = analytics::ComputeQuartiles({1, 2, 3, 4});
  if (std::abs(q.q1 - 1.75) > kQuantileTolerance || std::abs(q.median - 2.5) > kQuantileTolerance ||
      std::abs(q.q3 - 3.25) > kQuantileTolerance) {
    o.Fail("[1,2,3,4] quartiles wrong");
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> v(std::uniform_int_distribution<std::size_t>(1, 400)(rng));
    std::uniform_real_distribution<double> value(-30, 40);
    for (auto& x : v) x = value(rng);
    const auto r = analytics::ComputeQuartiles(v);
    const double want[3] = {testing::BruteQuantile(v, 0.25), testing::BruteQuantile(v, 0.5),
                            testing::BruteQuantile(v, 0.75)};
    const double got[3] = {r.q1, r.median, r.q3};
    for (int k = 0; k < 3; ++k) {
      if (std::abs(got[k] - want[k]) > kQuantileTolerance) o.Fail("vector " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = "51 vectors within 1e-9";
}

void CountLawAndIntegrity(Outcome& o) {
  const ca::Vocabulary vocab;
  const auto integrity =
      sparql::ParseQuery(testing::ReadFile(Fixture("queries/integrity.rq")));
  auto check = [&](const std::string& label, std::size_t s, std::size_t obs,
                   const store::Graph& graph) {
    if (graph.size() != 5 * s + 5 * obs) {
      o.Fail(label + ": " + Str(graph.size()) + " triples, expected " + Str(5 * s + 5 * obs));
    }
    const auto orphans = sparql::Evaluate(integrity, graph);
    if (!orphans.rows.empty()) o.Fail(label + ": " + Str(orphans.rows.size()) + " orphans");
  };
  for (const char* name : {"dublin", "manston", "sculthorpe"}) {
    const auto m = Manifest(name);
    const auto graph = MapCsv(name);
    check(name, m["stations"].get<std::size_t>(), m["observations"].get<std::size_t>(), *graph);
    if (graph->size() != m["triples"].get<std::size_t>()) o.Fail(std::string(name) + ": manifest triples");
  }
  noaa::FetchSpec spec;
  spec.fixture_dir = Fixture("fixtures/cdo/dublin_manston_1990");
  spec.station_ids = {"GHCND:EI000003969", "GHCND:UKM00003797"};
  spec.start = *ParseIsoDate("1990-01-01");
  spec.end = *ParseIsoDate("1990-12-31");
  const auto records = noaa::FetchAll(spec);
  const auto stations = noaa::FetchStations(spec);
  store::Graph graph;
  ca::MapDataset(vocab, stations, records, graph);
  graph.Freeze();
  if (records.size() != 3250) o.Fail("cdo: " + Str(records.size()) + " records");
  check("cdo", stations.size(), records.size(), graph);
  if (o.pass) o.detail = "3 CSV fixtures and 1 CDO fixture";
}

void QueryPathsAgree(Outcome& o) {
  testing::TempDir dir("acceptance");
  const std::string store = (dir / "dublin.nt").string();
  std::ostringstream out, err;
  if (cli::RunCli({"ingest", "--store", store, Fixture("fixtures/csv/dublin.csv")}, out, err) != 0) {
    o.Fail("ingest failed: " + err.str());
    return;
  }
  const std::string query_file = Fixture("queries/dublin_tavg.rq");
  std::ostringstream cli_out;
  if (cli::RunCli({"query", "--store", store, "--query", query_file}, cli_out, err) != 0) {
    o.Fail("query failed: " + err.str());
    return;
  }
  const auto via_cli = testing::SortedRows(sparql::ParseResultsJson(cli_out.str()));

  const auto graph = MapCsv("dublin");
  const std::string text = testing::ReadFile(query_file);
  const auto direct = testing::SortedRows(sparql::Evaluate(sparql::ParseQuery(text), *graph));

  endpoint::EndpointConfig config;
  config.port = 0;
  endpoint::SparqlEndpoint server(graph, config);
  server.Start();
  httplib::Client http("127.0.0.1", server.port());
  http.set_read_timeout(60, 0);
  const auto res = http.Post("/sparql", text, "application/sparql-query");
  if (!res || res->status != 200) {
    o.Fail("HTTP query failed");
    return;
  }
  const auto via_http = testing::SortedRows(sparql::ParseResultsJson(res->body));
  const std::size_t expected = Manifest("dublin")["tavg_in_range"].get<std::size_t>();
  if (direct.size() != expected) o.Fail("direct: " + Str(direct.size()) + " rows");
  if (via_cli != direct) o.Fail("CLI differs from direct evaluation");
  if (via_http != direct) o.Fail("HTTP differs from direct evaluation");
  if (o.pass) o.detail = Str(direct.size()) + " rows on every path";
}

void NTriplesRoundTrip(Outcome& o) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kRoundTrips; ++i) {
    const auto pool = testing::MakeTermPool(true);
    const auto graph = testing::BuildGraph(testing::RandomTriples(rng, pool, 60));
    const std::string text = store::SerializeNTriples(graph);
    store::Graph back;
    store::LoadNTriples(back, text);
    if (!(back == graph) || store::SerializeNTriples(back) != text) {
      o.Fail("graph " + std::to_string(i));
    }
  }
  if (o.pass) o.detail = std::to_string(kRoundTrips) + " graphs";
}

std::vector<std::string> SeedQueries() {
  std::vector<std::string> seeds;
  for (const char* f : {"dublin_tavg.rq", "manston_tavg.rq", "sculthorpe_weather.rq", "integrity.rq",
                        "stations.rq"}) {
    seeds.push_back(testing::ReadFile(Fixture(std::string("queries/") + f)));
  }
  seeds.push_back("SELECT ?s WHERE { ?s ?p ?o } LIMIT 5");
  seeds.push_back(
      "PREFIX ca: <http://example.org/climakg/ca#>\n"
      "SELECT DISTINCT ?d WHERE { ?o ca:observationDate ?d OPTIONAL { ?o ca:hasValue ?v } "
      "FILTER(!BOUND(?v) || ?v > 20) } ORDER BY DESC(?d) LIMIT 10 OFFSET 2");
  return seeds;
}

void ResultsJsonConforms(Outcome& o) {
  const auto graph = MapCsv("sculthorpe");
  endpoint::EndpointConfig config;
  config.port = 0;
  endpoint::SparqlEndpoint server(graph, config);
  server.Start();
  httplib::Client http("127.0.0.1", server.port());
  http.set_read_timeout(60, 0);
  std::vector<std::string> queries = SeedQueries();
  queries.push_back("SELECT ?s ?nothing WHERE { ?s a ?c OPTIONAL { ?s <http://x/none> ?nothing } } LIMIT 3");
  queries.push_back("SELECT * WHERE { ?s <http://x/none> ?o }");
  int checked = 0;
  for (const auto& q : queries) {
    const auto res = http.Post("/sparql", q, "application/sparql-query");
    if (!res || res->status != 200) {
      o.Fail("status for: " + q);
      continue;
    }
    if (res->get_header_value("Content-Type") != sparql::kResultsJsonMediaType) o.Fail("content type");
    const std::string problem = testing::CheckResultsJson(res->body);
    if (!problem.empty()) o.Fail(problem);
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " bodies";
}

void FuzzedQueriesGet200Or400(Outcome& o) {
  const auto graph = MapCsv("sculthorpe");
  endpoint::EndpointConfig config;
  config.port = 0;
  config.max_rows = kFuzzMaxRows;
  config.timeout = std::chrono::milliseconds(2000);
  endpoint::SparqlEndpoint server(graph, config);
  server.Start();
  httplib::Client http("127.0.0.1", server.port());
  http.set_read_timeout(30, 0);
  std::mt19937_64 rng(99);
  const auto seeds = SeedQueries();
  int ok = 0, rejected = 0;
  for (int i = 0; i < kFuzzQueries; ++i) {
    const std::string q = testing::FuzzQuery(rng, seeds);
    const auto get = http.Get("/sparql?query=" + httplib::detail::encode_query_param(q));
    const auto post = http.Post("/sparql", q, "application/sparql-query");
    for (const auto* res : {&get, &post}) {
      if (!*res) {
        o.Fail("no response for fuzz case " + std::to_string(i));
        return;
      }
      const int status = (*res)->status;
      if (status == 200) {
        ++ok;
        const std::string problem = testing::CheckResultsJson((*res)->body);
        if (!problem.empty()) o.Fail("case " + std::to_string(i) + ": " + problem);
      } else if (status == 400) {
        ++rejected;
      } else {
        o.Fail("case " + std::to_string(i) + " got " + std::to_string(status));
      }
    }
  }
  if (!server.running()) o.Fail("server stopped");
  if (o.pass) o.detail = std::to_string(ok) + " ok, " + std::to_string(rejected) + " rejected";
}

void JulyIsWarmest(Outcome& o) {
  for (const char* name : {"dublin", "manston"}) {
    const auto m = Manifest(name);
    const auto parsed = noaa::ParseCsv(testing::ReadFile(Fixture(std::string("fixtures/csv/") + name + ".csv")));
    const auto stats =
        analytics::MonthlyTemperatureStats(parsed.observations, m["station"].get<std::string>(), {1980, 2019});
    double july = NAN;
    for (const auto& s : stats) {
      if (s.month == 7) july = s.median;
      const double want = m["monthly_median"][std::to_string(s.month)].get<double>();
      if (std::abs(s.median - want) > kMedianTolerance) {
        o.Fail(std::string(name) + " month " + std::to_string(s.month));
      }
    }
    for (const auto& s : stats) {
      if (s.month != 7 && !(s.median < july)) o.Fail(std::string(name) + ": month " + std::to_string(s.month) + " >= July");
    }
    if (stats.size() != 12) o.Fail(std::string(name) + ": " + Str(stats.size()) + " months");
  }
}

}  // namespace

int main() {
  SetLogSink({});
  Check(1, "evaluator agrees with the naive oracle", EvaluatorMatchesOracle);
  Check(2, "weather classifier truth table", ClassifierTruthTable);
  Check(3, "quartiles agree with the brute-force quantile", QuartilesMatchOracle);
  Check(4, "count law and integrity query on every fixture", CountLawAndIntegrity);
  Check(5, "CLI, in-process and HTTP results agree", QueryPathsAgree);
  Check(6, "N-Triples round trip", NTriplesRoundTrip);
  Check(7, "HTTP results are conforming SPARQL JSON", ResultsJsonConforms);
  Check(8, "fuzzed queries only get 200 or 400", FuzzedQueriesGet200Or400);
  Check(9, "July has the highest monthly median", JulyIsWarmest);
  return failures == 0 ? 0 : 1;
}
