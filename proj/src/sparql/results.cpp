#include "climakg/sparql/results.hpp"

#include <json.hpp>

#include "climakg/errors.hpp"

namespace climakg::sparql {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json TermToJson(const rdf::Term& term) {
  ordered_json out;
  switch (term.kind()) {
    case rdf::TermKind::kIri:
      out["type"] = "uri";
      out["value"] = term.iri().str();
      break;
    case rdf::TermKind::kBlankNode:
      out["type"] = "bnode";
      out["value"] = term.blank().label();
      break;
    case rdf::TermKind::kLiteral: {
      const rdf::Literal& lit = term.literal();
      out["type"] = "literal";
      out["value"] = lit.lexical();
      if (!lit.language().empty()) {
        out["xml:lang"] = lit.language();
      } else if (lit.type() != rdf::LiteralType::kString) {
        out["datatype"] = std::string(rdf::DatatypeIri(lit.type()));
      }
      break;
    }
  }
  return out;
}

rdf::Term TermFromJson(const nlohmann::json& value) {
  const std::string type = value.at("type").get<std::string>();
  const std::string lexical = value.at("value").get<std::string>();
  if (type == "uri") return rdf::Iri(lexical);
  if (type == "bnode") return rdf::BlankNode(lexical);
  if (type == "literal" || type == "typed-literal") {
    if (value.contains("xml:lang")) {
      return rdf::Literal::String(lexical, value.at("xml:lang").get<std::string>());
    }
    if (value.contains("datatype")) {
      return rdf::Literal::Make(lexical, rdf::Iri(value.at("datatype").get<std::string>()));
    }
    return rdf::Literal::String(lexical);
  }
  throw JsonSyntaxError("unknown binding type '" + type + "'");
}

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string SerializeResultsJson(const SolutionSequence& solutions) {
  ordered_json doc;
  doc["head"]["vars"] = ordered_json::array();
  for (const std::string& v : solutions.variables) doc["head"]["vars"].push_back(v);
  ordered_json bindings = ordered_json::array();
  for (const auto& row : solutions.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t j = 0; j < solutions.variables.size(); ++j) {
      if (row[j]) obj[solutions.variables[j]] = TermToJson(*row[j]);
    }
    bindings.push_back(std::move(obj));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump();
}

SolutionSequence ParseResultsJson(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonSyntaxError(std::string("invalid results document: ") + e.what());
  }
  SolutionSequence out;
  try {
    for (const auto& v : doc.at("head").at("vars")) out.variables.push_back(v.get<std::string>());
    for (const auto& row : doc.at("results").at("bindings")) {
      std::vector<std::optional<rdf::Term>> values(out.variables.size());
      for (std::size_t j = 0; j < out.variables.size(); ++j) {
        if (row.contains(out.variables[j])) values[j] = TermFromJson(row.at(out.variables[j]));
      }
      out.rows.push_back(std::move(values));
    }
  } catch (const nlohmann::json::exception& e) {
    throw JsonSyntaxError(std::string("malformed results document: ") + e.what());
  } catch (const Error& e) {
    throw JsonSyntaxError(std::string("malformed binding: ") + e.what());
  }
  return out;
}

std::string SerializeResultsCsv(const SolutionSequence& solutions) {
  std::string out;
  for (std::size_t j = 0; j < solutions.variables.size(); ++j) {
    if (j) out += ',';
    out += CsvField(solutions.variables[j]);
  }
  out += "\r\n";
  for (const auto& row : solutions.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      if (!row[j]) continue;
      const rdf::Term& t = *row[j];
      if (t.is_iri()) out += CsvField(t.iri().str());
      if (t.is_blank()) out += CsvField("_:" + t.blank().label());
      if (t.is_literal()) out += CsvField(t.literal().lexical());
    }
    out += "\r\n";
  }
  return out;
}

}  // namespace climakg::sparql
