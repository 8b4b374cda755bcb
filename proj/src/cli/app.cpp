#include "climakg/cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

#include "climakg/cli/commands.hpp"
#include "climakg/cli/config.hpp"
#include "climakg/errors.hpp"

namespace climakg::cli {

namespace {

struct Parsed {
  std::string config_file;
  std::string base_iri = std::string(ca::kDefaultBase);
  std::string units = "metric";
  std::string token;
  std::string fixtures;
  std::string output = ".";
  std::string data_dir = ".";

  IngestOptions ingest;
  std::string ingest_years;
  QueryOptions query;
  std::string query_store;
  std::string query_endpoint;
  ServeOptions serve;
  AnalyzeOptions analyze;
  std::string analyze_store;
  std::string analyze_endpoint;
  std::string analyze_years;
};

void AddAnalyzeOptions(CLI::App* cmd, Parsed& p) {
  cmd->add_option("--store", p.analyze_store, "N-Triples store file");
  cmd->add_option("--stations", p.analyze.stations, "Station ids, comma separated")
      ->delimiter(',');
  cmd->add_option("--years", p.analyze_years, "Years, e.g. 1980-2019 or 1951,1955");
  cmd->add_option("--endpoint", p.analyze_endpoint, "Query a running /sparql endpoint instead");
  cmd->add_flag("--direct", p.analyze.direct, "Read records from the store without SPARQL");
}

// Subcommand path named in args ("analyze temperature" -> {analyze, temperature}).
std::vector<CLI::App*> SelectedCommands(CLI::App& app) {
  std::vector<CLI::App*> chain{&app};
  CLI::App* cur = &app;
  while (true) {
    auto subs = cur->get_subcommands();
    if (subs.empty()) break;
    cur = subs.front();
    chain.push_back(cur);
  }
  return chain;
}

// Appends --key=value for config entries that name an option of the selected
// command chain and were not given on the command line.
std::vector<std::string> MergeConfig(CLI::App& app, const std::vector<std::string>& args,
                                     const std::map<std::string, std::string>& entries) {
  std::vector<std::string> merged = args;
  const auto chain = SelectedCommands(app);
  for (const auto& [key, value] : entries) {
    if (key == "config") continue;
    bool known = false;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const CLI::Option* opt = (*it)->get_option_no_throw("--" + key);
      if (opt == nullptr) continue;
      known = true;
      if (opt->count() == 0) merged.push_back("--" + key + "=" + value);
      break;
    }
    if (!known) throw UsageError("unknown config key '" + key + "'");
  }
  return merged;
}

void Parse(CLI::App& app, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  app.parse(args);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parsed p;
  CLI::App app{"Climate knowledge graph toolkit: NOAA ingest, SPARQL queries and analyses",
               "climakg"};
  app.require_subcommand(1);
  app.add_option("--config", p.config_file, "key=value file; explicit flags take precedence");
  app.add_option("--base-iri", p.base_iri, "Base IRI of the vocabulary");
  app.add_option("--units", p.units, "Unit regime of the input data")
      ->check(CLI::IsMember({"standard", "metric", "tenths"}));
  app.add_option("--token", p.token, "NOAA CDO token")->envname(kTokenEnvVar);
  app.add_option("--fixtures", p.fixtures, "Read CDO pages from this directory instead of the API");
  app.add_option("--output", p.output, "Directory for analysis output");
  app.add_option("--data-dir", p.data_dir, "Directory that relative store/input paths are under");

  auto* ingest = app.add_subcommand("ingest", "Parse NOAA data and write an N-Triples store");
  ingest->add_option("--store", p.ingest.store, "Output store file (.nt)");
  ingest->add_option("inputs", p.ingest.csv_files, "Daily-summaries CSV files");
  ingest->add_flag("--api", p.ingest.api, "Fetch from the CDO API (or --fixtures)");
  ingest->add_option("--stations", p.ingest.stations, "Station ids for --api")->delimiter(',');
  ingest->add_option("--datatypes", p.ingest.datatypes, "Datatype codes for --api")
      ->delimiter(',');
  ingest->add_option("--years", p.ingest_years, "Years for --api, e.g. 1980-2019");
  ingest->add_flag("--append", p.ingest.append, "Add to an existing store");

  auto* query = app.add_subcommand("query", "Run a SPARQL query");
  query->add_option("--store", p.query_store, "Store file");
  query->add_option("--query", p.query.query, "Query file or inline query text");
  query->add_option("--format", p.query.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  query->add_option("--endpoint", p.query_endpoint, "Remote /sparql URL");

  auto* serve = app.add_subcommand("serve", "Serve a store over the SPARQL protocol");
  serve->add_option("--store", p.serve.store, "Store file");
  serve->add_option("--host", p.serve.host, "Bind address");
  serve->add_option("--port", p.serve.port, "Port (0 picks a free one)")
      ->check(CLI::Range(0, 65535));
  serve->add_option("--max-rows", p.serve.max_rows, "Result row limit")
      ->check(CLI::PositiveNumber);
  serve->add_option("--timeout", p.serve.timeout_seconds, "Per-query timeout in seconds")
      ->check(CLI::PositiveNumber);

  auto* analyze = app.add_subcommand("analyze", "Monthly temperature or weather-type analysis");
  analyze->require_subcommand(1);
  auto* temperature = analyze->add_subcommand("temperature", "Monthly box statistics");
  auto* weather = analyze->add_subcommand("weather", "Weather-type distribution per day");
  AddAnalyzeOptions(temperature, p);
  AddAnalyzeOptions(weather, p);
  weather->add_option("--snow-threshold", p.analyze.snow_threshold,
                      "Snow needs temperature at or below this (degrees C)");

  for (auto* sub : {ingest, query, serve, analyze, temperature, weather}) sub->fallthrough();

  try {
    Parse(app, args);
    if (!p.config_file.empty()) {
      const auto entries = LoadConfigFile(p.config_file);
      Parse(app, MergeConfig(app, args, entries));
    }

    CliConfig config;
    config.base_iri = p.base_iri;
    config.units = noaa::ParseUnitRegime(p.units);
    config.token = p.token;
    if (!p.fixtures.empty()) config.fixture_dir = p.fixtures;
    config.output_dir = p.output;
    config.data_dir = p.data_dir;
    config.Validate();

    if (ingest->parsed()) {
      if (p.ingest.store.empty()) throw UsageError("--store is required");
      if (!p.ingest_years.empty()) p.ingest.years = ParseYears(p.ingest_years);
      return CmdIngest(p.ingest, config, out);
    }
    if (query->parsed()) {
      if (p.query.query.empty()) throw UsageError("--query is required");
      if (!p.query_store.empty()) p.query.store = p.query_store;
      if (!p.query_endpoint.empty()) p.query.endpoint = p.query_endpoint;
      return CmdQuery(p.query, config, out);
    }
    if (serve->parsed()) {
      if (p.serve.store.empty()) throw UsageError("--store is required");
      return CmdServe(p.serve, config, out);
    }

    if (!p.analyze_store.empty()) p.analyze.store = p.analyze_store;
    if (!p.analyze_endpoint.empty()) p.analyze.endpoint = p.analyze_endpoint;
    if (!p.analyze_years.empty()) p.analyze.years = ParseYears(p.analyze_years);
    if (temperature->parsed()) return CmdAnalyzeTemperature(p.analyze, config, out, err);
    return CmdAnalyzeWeather(p.analyze, config, out, err);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownRegime& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace climakg::cli
