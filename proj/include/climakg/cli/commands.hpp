#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "climakg/ca/records.hpp"
#include "climakg/cli/config.hpp"
#include "climakg/sparql/evaluator.hpp"
#include "climakg/store/graph.hpp"

namespace climakg::cli {

struct IngestOptions {
  std::filesystem::path store;
  std::vector<std::filesystem::path> csv_files;
  // Fetch through the CDO API (or from CliConfig::fixture_dir when set).
  bool api = false;
  std::vector<std::string> stations;
  std::vector<std::string> datatypes;
  std::vector<int> years;
  bool append = false;
};

struct QueryOptions {
  std::optional<std::filesystem::path> store;
  std::string query;  // path to a .rq file or inline text
  std::string format = "json";
  std::optional<std::string> endpoint;
};

struct ServeOptions {
  std::filesystem::path store;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_rows = 100000;
  int timeout_seconds = 10;
};

struct AnalyzeOptions {
  std::optional<std::filesystem::path> store;
  std::vector<std::string> stations;
  std::vector<int> years;
  std::optional<std::string> endpoint;
  bool direct = false;
  double snow_threshold = 0.0;
};

// Each command returns its exit code: 0 success, 1 runtime or data error.
// Usage and query-syntax errors propagate as exceptions so the caller can map
// them to exit code 2.
int CmdIngest(const IngestOptions& opts, const CliConfig& config, std::ostream& out);
int CmdQuery(const QueryOptions& opts, const CliConfig& config, std::ostream& out);
int CmdServe(const ServeOptions& opts, const CliConfig& config, std::ostream& out);
int CmdAnalyzeTemperature(const AnalyzeOptions& opts, const CliConfig& config,
                          std::ostream& out, std::ostream& err);
int CmdAnalyzeWeather(const AnalyzeOptions& opts, const CliConfig& config, std::ostream& out,
                      std::ostream& err);

// Asks a running CmdServe to shut down (also wired to SIGINT / SIGTERM).
void RequestServeStop();

// Loads a store file (.nt, or .ttl for Turtle) into a frozen graph. Throws
// Error("no such file ...") when missing.
store::Graph LoadStore(const std::filesystem::path& path);

// Observation records of one station from result rows with ?date, ?value and
// either ?datatype or a fixed code.
std::vector<ca::ObservationRecord> RowsToObservations(
    const sparql::SolutionSequence& rows, const std::string& station_id,
    const ca::Vocabulary& vocab, std::optional<ca::DatatypeCode> fixed_code = std::nullopt);

// Observation records straight from the graph, bypassing SPARQL (--direct).
std::vector<ca::ObservationRecord> GraphObservations(const store::Graph& graph,
                                                     const ca::Vocabulary& vocab);

}  // namespace climakg::cli
