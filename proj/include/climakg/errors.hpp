#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace climakg {

// Root of every error thrown by the library. Each subsystem derives its own
// kinds so callers (CLI, endpoint) can map them onto exit codes and HTTP
// statuses without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---- rdf ----
class InvalidLexicalForm : public Error {
 public:
  using Error::Error;
};
class UnsupportedDatatype : public Error {
 public:
  using Error::Error;
};
class InvalidTerm : public Error {
 public:
  using Error::Error;
};

// ---- text formats (N-Triples, Turtle, SPARQL) ----
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};
class UnknownPrefix : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};
class UnknownFunction : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

// ---- store / engine ----
class FrozenGraphError : public Error {
 public:
  using Error::Error;
};
class QueryLimitExceeded : public Error {
 public:
  using Error::Error;
};

// ---- ca mapping ----
class InvalidRecord : public Error {
 public:
  using Error::Error;
};
class UnknownDatatypeCode : public Error {
 public:
  using Error::Error;
};

// ---- noaa ingest ----
class CsvSyntaxError : public Error {
 public:
  CsvSyntaxError(const std::string& message, std::size_t row)
      : Error("CSV row " + std::to_string(row) + ": " + message), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};
class MissingColumn : public Error {
 public:
  explicit MissingColumn(const std::string& column)
      : Error("missing column " + column), column_(column) {}
  const std::string& column() const { return column_; }

 private:
  std::string column_;
};
class JsonSyntaxError : public Error {
 public:
  using Error::Error;
};
class MissingField : public Error {
 public:
  explicit MissingField(const std::string& path)
      : Error("missing field " + path), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};
class UnknownRegime : public Error {
 public:
  using Error::Error;
};
class InvalidFetchSpec : public Error {
 public:
  using Error::Error;
};
class AuthError : public Error {
 public:
  using Error::Error;
};
class RateLimited : public Error {
 public:
  using Error::Error;
};
class TransportError : public Error {
 public:
  using Error::Error;
};
class FixtureMissing : public Error {
 public:
  using Error::Error;
};

// ---- analytics ----
class EmptyInput : public Error {
 public:
  using Error::Error;
};
class NoData : public Error {
 public:
  using Error::Error;
};

// ---- endpoint ----
class BindError : public Error {
 public:
  using Error::Error;
};
// A remote endpoint answered with a non-success status.
class RemoteQueryError : public Error {
 public:
  RemoteQueryError(int status, const std::string& body)
      : Error("endpoint returned HTTP " + std::to_string(status) + ": " + body),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// ---- cli ----
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace climakg
