#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>

#include "climakg/store/graph.hpp"

namespace httplib {
class Server;
}

namespace climakg::endpoint {

struct EndpointConfig {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::size_t max_query_length = 64 * 1024;
  std::chrono::milliseconds timeout{10000};
  std::size_t max_rows = 100000;

  // Throws std::invalid_argument when a limit is not positive.
  void Validate() const;
};

struct Metrics {
  std::uint64_t requests = 0;
  std::uint64_t queries_ok = 0;
  std::uint64_t queries_rejected = 0;  // 4xx answers to /sparql
  std::uint64_t limit_breaches = 0;
};

// Read-only SPARQL Protocol query service over a frozen graph:
//   GET  /sparql?query=...
//   POST /sparql  (application/sparql-query or application/x-www-form-urlencoded)
//   GET  /health
class SparqlEndpoint {
 public:
  SparqlEndpoint(std::shared_ptr<const store::Graph> graph, EndpointConfig config);
  ~SparqlEndpoint();

  SparqlEndpoint(const SparqlEndpoint&) = delete;
  SparqlEndpoint& operator=(const SparqlEndpoint&) = delete;

  // Binds and starts serving on a background thread; returns once the
  // listener accepts connections. Throws BindError.
  void Start();
  // Stops accepting, lets in-flight requests finish, joins the listener.
  void Stop();
  // Blocks until Stop() is called from elsewhere.
  void Wait();

  bool running() const { return running_.load(); }
  int port() const { return port_; }
  const EndpointConfig& config() const { return config_; }
  Metrics metrics() const;

 private:
  struct Counters {
    std::atomic<std::uint64_t> requests{0};
    std::atomic<std::uint64_t> queries_ok{0};
    std::atomic<std::uint64_t> queries_rejected{0};
    std::atomic<std::uint64_t> limit_breaches{0};
  };

  void InstallRoutes();

  std::shared_ptr<const store::Graph> graph_;
  EndpointConfig config_;
  std::unique_ptr<httplib::Server> server_;
  std::thread listener_;
  std::atomic<bool> running_{false};
  int port_ = 0;
  Counters counters_;
};

}  // namespace climakg::endpoint
