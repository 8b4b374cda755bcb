#pragma once

#include <chrono>
#include <string>

#include "climakg/sparql/evaluator.hpp"

namespace climakg::endpoint {

// Runs queries against a remote /sparql endpoint, e.g.
// "http://127.0.0.1:8080/sparql".
class SparqlClient {
 public:
  explicit SparqlClient(std::string url,
                        std::chrono::seconds timeout = std::chrono::seconds(60));

  // POSTs the query as application/sparql-query. Throws TransportError when
  // the endpoint is unreachable, RemoteQueryError for non-200 answers and
  // JsonSyntaxError for malformed bodies.
  sparql::SolutionSequence Query(const std::string& query) const;

  // Raw response body, for callers that forward JSON unchanged.
  std::string QueryRaw(const std::string& query) const;

 private:
  std::string origin_;
  std::string path_;
  std::chrono::seconds timeout_;
};

}  // namespace climakg::endpoint
