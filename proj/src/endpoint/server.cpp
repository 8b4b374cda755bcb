#include "climakg/endpoint/server.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/sparql/parser.hpp"
#include "climakg/sparql/results.hpp"

namespace climakg::endpoint {

namespace {

constexpr const char* kTextPlain = "text/plain; charset=utf-8";

std::string Lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Media type without parameters, lower-cased.
std::string BareMediaType(const std::string& value) {
  return Lower(Trim(value.substr(0, value.find(';'))));
}

// True when the Accept header admits a JSON results body. A missing header
// accepts anything.
bool AcceptsJson(const httplib::Request& req) {
  if (!req.has_header("Accept")) return true;
  std::stringstream ss(req.get_header_value("Accept"));
  std::string item;
  bool empty = true;
  while (std::getline(ss, item, ',')) {
    if (Trim(item).empty()) continue;
    empty = false;
    const std::string type = BareMediaType(item);
    bool zero_q = false;
    std::size_t pos = item.find(';');
    while (pos != std::string::npos) {
      const std::size_t next = item.find(';', pos + 1);
      std::string param = Lower(Trim(item.substr(pos + 1, next - pos - 1)));
      param.erase(std::remove(param.begin(), param.end(), ' '), param.end());
      if (param.rfind("q=", 0) == 0) {
        try {
          zero_q = std::stod(param.substr(2)) <= 0.0;
        } catch (const std::exception&) {
        }
      }
      pos = next;
    }
    if (zero_q) continue;
    if (type == sparql::kResultsJsonMediaType || type == "application/json" ||
        type == "application/*" || type == "*/*") {
      return true;
    }
  }
  return empty;
}

void Plain(httplib::Response& res, int status, const std::string& message) {
  res.status = status;
  res.set_content(message + "\n", kTextPlain);
}

}  // namespace

void EndpointConfig::Validate() const {
  if (port < 0 || port > 65535) throw std::invalid_argument("port out of range");
  if (max_query_length == 0) throw std::invalid_argument("max query length must be positive");
  if (timeout.count() <= 0) throw std::invalid_argument("timeout must be positive");
  if (max_rows == 0) throw std::invalid_argument("max rows must be positive");
}

SparqlEndpoint::SparqlEndpoint(std::shared_ptr<const store::Graph> graph, EndpointConfig config)
    : graph_(std::move(graph)), config_(std::move(config)) {
  config_.Validate();
  if (!graph_) throw std::invalid_argument("endpoint needs a graph");
  if (!graph_->frozen()) throw std::invalid_argument("endpoint graph must be frozen");
}

SparqlEndpoint::~SparqlEndpoint() { Stop(); }

void SparqlEndpoint::InstallRoutes() {
  auto answer = [this](const std::string& query, httplib::Response& res) {
    if (query.size() > config_.max_query_length) {
      counters_.queries_rejected++;
      counters_.limit_breaches++;
      Plain(res, 400,
            "query limit exceeded: query text longer than " +
                std::to_string(config_.max_query_length) + " bytes");
      return;
    }
    try {
      const sparql::Query parsed = sparql::ParseQuery(query);
      sparql::EvalLimits limits;
      limits.deadline = std::chrono::steady_clock::now() + config_.timeout;
      limits.max_rows = config_.max_rows;
      limits.max_intermediate_rows = config_.max_rows * 10;
      const auto solutions = sparql::Evaluate(parsed, *graph_, limits);
      res.status = 200;
      res.set_content(sparql::SerializeResultsJson(solutions),
                      std::string(sparql::kResultsJsonMediaType));
      counters_.queries_ok++;
    } catch (const QueryLimitExceeded& e) {
      counters_.queries_rejected++;
      counters_.limit_breaches++;
      Plain(res, 400, std::string("query limit exceeded: ") + e.what());
    } catch (const Error& e) {
      counters_.queries_rejected++;
      Plain(res, 400, std::string("query parse error: ") + e.what());
    }
  };

  server_->Get("/sparql", [this, answer](const httplib::Request& req, httplib::Response& res) {
    counters_.requests++;
    if (!AcceptsJson(req)) {
      counters_.queries_rejected++;
      Plain(res, 406, "only application/sparql-results+json is available");
      return;
    }
    if (!req.has_param("query")) {
      counters_.queries_rejected++;
      Plain(res, 400, "missing 'query' parameter");
      return;
    }
    answer(req.get_param_value("query"), res);
  });

  server_->Post("/sparql", [this, answer](const httplib::Request& req, httplib::Response& res) {
    counters_.requests++;
    const std::string type = BareMediaType(req.get_header_value("Content-Type"));
    std::string query;
    if (type == "application/sparql-query") {
      query = req.body;
    } else if (type == "application/x-www-form-urlencoded") {
      if (!req.has_param("query")) {
        counters_.queries_rejected++;
        Plain(res, 400, "missing 'query' form field");
        return;
      }
      query = req.get_param_value("query");
    } else {
      counters_.queries_rejected++;
      Plain(res, 415,
            "POST body must be application/sparql-query or application/x-www-form-urlencoded");
      return;
    }
    if (!AcceptsJson(req)) {
      counters_.queries_rejected++;
      Plain(res, 406, "only application/sparql-results+json is available");
      return;
    }
    answer(query, res);
  });

  auto not_allowed = [this](const httplib::Request&, httplib::Response& res) {
    counters_.requests++;
    res.set_header("Allow", "GET, POST");
    Plain(res, 405, "method not allowed");
  };
  server_->Put("/sparql", not_allowed);
  server_->Delete("/sparql", not_allowed);
  server_->Patch("/sparql", not_allowed);
  server_->Options("/sparql", not_allowed);

  server_->Get("/health", [this](const httplib::Request&, httplib::Response& res) {
    counters_.requests++;
    res.status = 200;
    res.set_content("ok", "text/plain");
  });
  auto health_not_allowed = [this](const httplib::Request&, httplib::Response& res) {
    counters_.requests++;
    res.set_header("Allow", "GET");
    Plain(res, 405, "method not allowed");
  };
  server_->Post("/health", health_not_allowed);
  server_->Put("/health", health_not_allowed);
  server_->Delete("/health", health_not_allowed);
  server_->Patch("/health", health_not_allowed);

  server_->set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    if (res.status == 404) {
      res.set_content("not found\n", kTextPlain);
    } else {
      res.set_content(std::string(httplib::status_message(res.status)) + "\n", kTextPlain);
    }
    return httplib::Server::HandlerResponse::Handled;
  });
  server_->set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "unknown";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        LogWarning("endpoint: internal error: " + what);
        Plain(res, 500, "internal error");
      });
}

void SparqlEndpoint::Start() {
  if (running_) return;
  server_ = std::make_unique<httplib::Server>();
  // Leave room for a form-encoded query of max_query_length.
  server_->set_payload_max_length(config_.max_query_length * 4 + 1024);
  // httplib's default also sets SO_REUSEPORT, which would let a second
  // server share an occupied port instead of failing.
  server_->set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  InstallRoutes();

  if (config_.port == 0) {
    port_ = server_->bind_to_any_port(config_.host);
    if (port_ < 0) throw BindError("cannot bind " + config_.host + " to a free port");
  } else {
    if (!server_->bind_to_port(config_.host, config_.port)) {
      throw BindError("cannot bind " + config_.host + ":" + std::to_string(config_.port) +
                      " (address in use?)");
    }
    port_ = config_.port;
  }
  running_ = true;
  listener_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  LogInfo("SPARQL endpoint listening on http://" + config_.host + ":" + std::to_string(port_) +
          "/sparql");
}

void SparqlEndpoint::Stop() {
  if (!server_) return;
  server_->stop();
  if (listener_.joinable()) listener_.join();
  running_ = false;
}

void SparqlEndpoint::Wait() {
  while (running_) std::this_thread::sleep_for(std::chrono::milliseconds(50));
}

Metrics SparqlEndpoint::metrics() const {
  return Metrics{counters_.requests.load(), counters_.queries_ok.load(),
                 counters_.queries_rejected.load(), counters_.limit_breaches.load()};
}

}  // namespace climakg::endpoint
