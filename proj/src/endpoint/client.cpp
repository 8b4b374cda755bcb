#include "climakg/endpoint/client.hpp"

#include <httplib.h>

#include "climakg/errors.hpp"
#include "climakg/sparql/results.hpp"

namespace climakg::endpoint {

SparqlClient::SparqlClient(std::string url, std::chrono::seconds timeout) : timeout_(timeout) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError("endpoint URL must be absolute: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/sparql" : url.substr(path_start);
}

std::string SparqlClient::QueryRaw(const std::string& query) const {
  httplib::Client client(origin_);
  client.set_connection_timeout(std::chrono::seconds(10));
  client.set_read_timeout(timeout_);
  httplib::Headers headers{{"Accept", std::string(sparql::kResultsJsonMediaType)}};
  auto result = client.Post(path_, headers, query, "application/sparql-query");
  if (!result) {
    throw TransportError("cannot reach " + origin_ + ": " + httplib::to_string(result.error()));
  }
  if (result->status != 200) throw RemoteQueryError(result->status, result->body);
  return result->body;
}

sparql::SolutionSequence SparqlClient::Query(const std::string& query) const {
  return sparql::ParseResultsJson(QueryRaw(query));
}

}  // namespace climakg::endpoint
