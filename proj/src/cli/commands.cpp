#include "climakg/cli/commands.hpp"

#include <atomic>
#include <csignal>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "climakg/analytics/emit.hpp"
#include "climakg/analytics/temperature.hpp"
#include "climakg/analytics/weather.hpp"
#include "climakg/ca/mapping.hpp"
#include "climakg/cli/query_templates.hpp"
#include "climakg/endpoint/client.hpp"
#include "climakg/endpoint/server.hpp"
#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/noaa/csv.hpp"
#include "climakg/noaa/fetch.hpp"
#include "climakg/noaa/units.hpp"
#include "climakg/sparql/parser.hpp"
#include "climakg/sparql/results.hpp"
#include "climakg/store/serialization.hpp"

namespace climakg::cli {

namespace {

namespace fs = std::filesystem;

std::atomic<bool> g_stop_serving{false};

extern "C" void HandleStopSignal(int) { g_stop_serving = true; }

fs::path Resolve(const CliConfig& config, const fs::path& p) {
  if (p.is_absolute() || config.data_dir.empty() || config.data_dir == ".") return p;
  return config.data_dir / p;
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("no such file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("error writing " + path.string());
}

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

// Runs analysis queries either in-process or against a remote endpoint.
class QueryRunner {
 public:
  QueryRunner(const AnalyzeOptions& opts, const CliConfig& config) {
    if (opts.endpoint) {
      client_.emplace(*opts.endpoint);
    } else if (opts.store) {
      graph_ = std::make_unique<store::Graph>(LoadStore(Resolve(config, *opts.store)));
    } else {
      throw UsageError("--store or --endpoint is required");
    }
  }

  sparql::SolutionSequence Run(const std::string& query) const {
    if (client_) return client_->Query(query);
    return sparql::Evaluate(sparql::ParseQuery(query), *graph_);
  }

  const store::Graph& graph() const {
    if (!graph_) throw UsageError("--direct needs --store");
    return *graph_;
  }

 private:
  std::optional<endpoint::SparqlClient> client_;
  std::unique_ptr<store::Graph> graph_;
};

std::vector<ca::ObservationRecord> GatherObservations(const QueryRunner& runner,
                                                      const AnalyzeOptions& opts,
                                                      const ca::Vocabulary& vocab,
                                                      const std::string& template_name,
                                                      const std::string& station_id,
                                                      const analytics::YearRange& span) {
  if (opts.direct) {
    std::vector<ca::ObservationRecord> out;
    for (auto& r : GraphObservations(runner.graph(), vocab)) {
      if (r.station_id == station_id && span.Contains(YearOf(r.date))) out.push_back(r);
    }
    return out;
  }
  const std::string query =
      InstantiateTemplate(template_name,
                          {{"STATION_IRI", vocab.StationIri(station_id).str()},
                           {"FIRST_YEAR", std::to_string(span.first)},
                           {"LAST_YEAR", std::to_string(span.last)}},
                          vocab);
  return RowsToObservations(runner.Run(query), station_id, vocab);
}

std::optional<rdf::Term> Cell(const sparql::SolutionSequence& rows, std::size_t row,
                              const std::string& var) {
  for (std::size_t j = 0; j < rows.variables.size(); ++j) {
    if (rows.variables[j] == var) return rows.rows[row][j];
  }
  return std::nullopt;
}

}  // namespace

store::Graph LoadStore(const fs::path& path) {
  const std::string text = ReadText(path);
  store::Graph graph;
  if (path.extension() == ".ttl") {
    store::LoadTurtle(graph, text);
  } else {
    store::LoadNTriples(graph, text);
  }
  graph.Freeze();
  return graph;
}

std::vector<ca::ObservationRecord> RowsToObservations(const sparql::SolutionSequence& rows,
                                                      const std::string& station_id,
                                                      const ca::Vocabulary& vocab,
                                                      std::optional<ca::DatatypeCode> fixed) {
  std::vector<ca::ObservationRecord> out;
  for (std::size_t i = 0; i < rows.rows.size(); ++i) {
    const auto date = Cell(rows, i, "date");
    const auto value = Cell(rows, i, "value");
    if (!date || !value || !date->is_literal() || !value->is_literal()) continue;
    const auto d = date->literal().date_value();
    if (!d) continue;

    std::optional<ca::DatatypeCode> code = fixed;
    if (!code) {
      const auto dt = Cell(rows, i, "datatype");
      if (!dt || !dt->is_iri()) continue;
      code = vocab.CodeOf(dt->iri());
      if (!code) continue;
    }
    const rdf::Literal& lit = value->literal();
    ca::ObservationValue v;
    if (ca::IsWeatherTypeFlag(*code)) {
      const auto b = lit.boolean_value();
      if (!b) continue;
      v = *b;
    } else {
      const auto n = lit.numeric_value();
      if (!n) continue;
      v = *n;
    }
    out.push_back(ca::ObservationRecord{station_id, *d, *code, v});
  }
  return out;
}

std::vector<ca::ObservationRecord> GraphObservations(const store::Graph& graph,
                                                     const ca::Vocabulary& vocab) {
  auto one = [&](const rdf::Term& s, const rdf::Iri& p) -> std::optional<rdf::Term> {
    std::optional<rdf::Term> found;
    graph.ForEachMatch(store::TriplePattern{s, rdf::Term(p), std::nullopt},
                       [&](const rdf::Term&, const rdf::Term&, const rdf::Term& o) {
                         found = o;
                         return false;
                       });
    return found;
  };
  std::vector<ca::ObservationRecord> out;
  for (const rdf::Triple& t : graph.Match(store::TriplePattern{
           std::nullopt, rdf::Term(vocab.rdf_type()), rdf::Term(vocab.observation_class())})) {
    const auto station = one(t.subject, vocab.generated_by());
    const auto date = one(t.subject, vocab.observation_date());
    const auto type = one(t.subject, vocab.with_data_type());
    const auto value = one(t.subject, vocab.has_value());
    if (!station || !date || !type || !value || !type->is_iri() || !date->is_literal() ||
        !value->is_literal()) {
      continue;
    }
    const auto id = one(*station, vocab.station_id());
    const auto code = vocab.CodeOf(type->iri());
    const auto d = date->literal().date_value();
    if (!id || !id->is_literal() || !code || !d) continue;
    ca::ObservationValue v;
    if (ca::IsWeatherTypeFlag(*code)) {
      const auto b = value->literal().boolean_value();
      if (!b) continue;
      v = *b;
    } else {
      const auto n = value->literal().numeric_value();
      if (!n) continue;
      v = *n;
    }
    out.push_back(ca::ObservationRecord{id->literal().lexical(), *d, *code, v});
  }
  return out;
}

int CmdIngest(const IngestOptions& opts, const CliConfig& config, std::ostream& out) {
  if (opts.csv_files.empty() && !opts.api) {
    throw UsageError("ingest needs CSV files or --api");
  }
  const ca::Vocabulary vocab(config.base_iri);
  std::vector<ca::StationRecord> stations;
  std::vector<ca::ObservationRecord> observations;

  for (const auto& file : opts.csv_files) {
    auto parsed = noaa::ParseCsv(ReadText(Resolve(config, file)));
    auto normalized = noaa::NormalizeUnits(std::move(parsed.observations), config.units);
    stations.insert(stations.end(), parsed.stations.begin(), parsed.stations.end());
    observations.insert(observations.end(), normalized.begin(), normalized.end());
  }

  if (opts.api) {
    if (opts.years.empty()) throw UsageError("--api needs --years");
    noaa::FetchSpec spec;
    spec.station_ids = opts.stations;
    spec.datatype_codes = opts.datatypes;
    spec.start = Date(std::chrono::year(opts.years.front()), std::chrono::January, std::chrono::day(1));
    spec.end = Date(std::chrono::year(opts.years.back()), std::chrono::December, std::chrono::day(31));
    spec.token = config.token;
    spec.fixture_dir = config.fixture_dir;
    spec.units = config.units;
    if (!spec.fixture_dir && spec.station_ids.empty()) {
      throw UsageError("--api needs --stations unless --fixtures is given");
    }
    auto fetched = noaa::FetchAll(spec);
    auto metadata = noaa::FetchStations(spec);
    stations.insert(stations.end(), metadata.begin(), metadata.end());
    observations.insert(observations.end(), fetched.begin(), fetched.end());
  }

  // First occurrence wins for both stations and observation keys.
  std::set<std::string> seen;
  std::vector<ca::StationRecord> unique_stations;
  for (auto& s : stations) {
    if (seen.insert(s.station_id).second) unique_stations.push_back(std::move(s));
  }
  noaa::DropDuplicateKeys(observations);
  for (const auto& o : observations) {
    if (seen.count(o.station_id) == 0) {
      throw InvalidRecord("no station metadata for " + o.station_id);
    }
  }

  const fs::path store_path = Resolve(config, opts.store);
  store::Graph graph;
  if (opts.append && fs::exists(store_path)) {
    store::LoadNTriples(graph, ReadText(store_path));
  }
  const auto counts = ca::MapDataset(vocab, unique_stations, observations, graph);
  WriteText(store_path, store::SerializeNTriples(graph));

  out << "stations: " << counts.stations << "\n"
      << "observations: " << counts.observations << "\n"
      << "triples: " << counts.triples_inserted << "\n"
      << "store: " << store_path.string() << "\n";
  return 0;
}

int CmdQuery(const QueryOptions& opts, const CliConfig& config, std::ostream& out) {
  std::string text = opts.query;
  std::error_code ec;
  if (fs::is_regular_file(Resolve(config, opts.query), ec)) {
    text = ReadText(Resolve(config, opts.query));
  }
  const sparql::Query query = sparql::ParseQuery(text);

  sparql::SolutionSequence solutions;
  if (opts.endpoint) {
    solutions = endpoint::SparqlClient(*opts.endpoint).Query(text);
  } else {
    if (!opts.store) throw UsageError("--store or --endpoint is required");
    const store::Graph graph = LoadStore(Resolve(config, *opts.store));
    solutions = sparql::Evaluate(query, graph);
  }
  if (opts.format == "csv") {
    out << sparql::SerializeResultsCsv(solutions);
  } else {
    out << sparql::SerializeResultsJson(solutions) << "\n";
  }
  return 0;
}

void RequestServeStop() { g_stop_serving = true; }

int CmdServe(const ServeOptions& opts, const CliConfig& config, std::ostream& out) {
  auto graph = std::make_shared<const store::Graph>(LoadStore(Resolve(config, opts.store)));
  endpoint::EndpointConfig ec;
  ec.host = opts.host;
  ec.port = opts.port;
  ec.max_rows = opts.max_rows;
  ec.timeout = std::chrono::seconds(opts.timeout_seconds);
  endpoint::SparqlEndpoint server(graph, ec);

  g_stop_serving = false;
  auto old_int = std::signal(SIGINT, HandleStopSignal);
  auto old_term = std::signal(SIGTERM, HandleStopSignal);
  server.Start();
  out << "serving " << graph->size() << " triples at http://" << ec.host << ":" << server.port()
      << "/sparql" << std::endl;
  while (!g_stop_serving) std::this_thread::sleep_for(std::chrono::milliseconds(100));
  server.Stop();
  std::signal(SIGINT, old_int);
  std::signal(SIGTERM, old_term);
  const auto m = server.metrics();
  out << "stopped after " << m.requests << " requests" << std::endl;
  return 0;
}

int CmdAnalyzeTemperature(const AnalyzeOptions& opts, const CliConfig& config,
                          std::ostream& out, std::ostream& err) {
  if (opts.stations.empty()) throw UsageError("--stations is required");
  if (opts.years.empty()) throw UsageError("--years is required");
  const ca::Vocabulary vocab(config.base_iri);
  const analytics::YearRange span = SpanOf(opts.years);
  const QueryRunner runner(opts, config);

  std::vector<analytics::StationBoxStats> results;
  std::vector<std::string> succeeded, failed;
  for (const auto& raw_id : opts.stations) {
    const std::string id = noaa::CanonicalStationId(raw_id);
    const auto obs = GatherObservations(runner, opts, vocab, "temperature.rq", id, span);
    try {
      results.push_back({id, analytics::MonthlyTemperatureStats(obs, id, span)});
      succeeded.push_back(id);
    } catch (const NoData& e) {
      err << "error: " << e.what() << "\n";
      failed.push_back(id);
    }
  }
  if (results.empty()) {
    err << "error: no station had temperature data\n";
    return 1;
  }
  const fs::path csv = config.output_dir / "temperature_box_stats.csv";
  const fs::path svg = config.output_dir / "temperature_box_plot.svg";
  WriteText(csv, analytics::EmitBoxStatsCsv(results));
  WriteText(svg, analytics::EmitBoxPlotSvg(
                     results, "Monthly temperature " + std::to_string(span.first) + "-" +
                                  std::to_string(span.last)));
  out << "wrote " << csv.string() << "\n" << "wrote " << svg.string() << "\n";
  out << "succeeded: " << Join(succeeded) << "\n";
  if (!failed.empty()) {
    out << "failed: " << Join(failed) << "\n";
    return 1;
  }
  return 0;
}

int CmdAnalyzeWeather(const AnalyzeOptions& opts, const CliConfig& config, std::ostream& out,
                      std::ostream& err) {
  if (opts.stations.size() != 1) throw UsageError("weather analysis takes exactly one station");
  if (opts.years.empty()) throw UsageError("--years is required");
  const ca::Vocabulary vocab(config.base_iri);
  const analytics::YearRange span = SpanOf(opts.years);
  const std::string id = noaa::CanonicalStationId(opts.stations.front());
  const QueryRunner runner(opts, config);

  const auto obs = GatherObservations(runner, opts, vocab, "weather.rq", id, span);
  const std::set<int> wanted(opts.years.begin(), opts.years.end());
  bool has_flags = false;
  for (const auto& r : obs) {
    if (ca::IsWeatherTypeFlag(r.code) && wanted.count(YearOf(r.date))) has_flags = true;
  }
  if (!has_flags) {
    err << "error: no weather-type data for " << id << " in the requested years\n";
    return 1;
  }
  analytics::ClassifierConfig classifier;
  classifier.snow_threshold = opts.snow_threshold;
  const auto series =
      analytics::WeatherDistribution(analytics::BuildDayInputs(obs, id), opts.years, classifier);

  const fs::path csv = config.output_dir / "weather_distribution.csv";
  const fs::path svg = config.output_dir / "weather_strip_plot.svg";
  WriteText(csv, analytics::EmitDistributionCsv(series));
  WriteText(svg, analytics::EmitStripPlotSvg(series, "Distribution of days by weather type, " + id));
  out << "wrote " << csv.string() << "\n" << "wrote " << svg.string() << "\n";
  for (const auto& s : series) {
    std::map<analytics::WeatherLabel, int> counts;
    for (const auto& e : s.entries) counts[e.label]++;
    out << s.year << ":";
    for (auto label : analytics::AllLabels()) {
      out << " " << analytics::LabelName(label) << "=" << counts[label];
    }
    out << "\n";
  }
  return 0;
}

}  // namespace climakg::cli
