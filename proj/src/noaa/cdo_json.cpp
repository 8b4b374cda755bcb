#include "climakg/noaa/cdo_json.hpp"

#include <json.hpp>

#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/noaa/csv.hpp"

namespace climakg::noaa {

namespace {

using nlohmann::json;

const json& Field(const json& object, const char* key, const std::string& path) {
  if (!object.is_object() || !object.contains(key)) throw MissingField(path);
  return object.at(key);
}

std::size_t Count(const json& object, const char* key, const std::string& path) {
  const json& v = Field(object, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw JsonSyntaxError(path + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

CdoPage ParseCdoJson(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw JsonSyntaxError(std::string("invalid CDO response: ") + e.what());
  }
  if (!doc.is_object()) throw JsonSyntaxError("CDO response is not a JSON object");

  CdoPage page;
  if (doc.empty()) return page;

  const json& resultset = Field(Field(doc, "metadata", "metadata"), "resultset",
                                "metadata.resultset");
  page.page.offset = Count(resultset, "offset", "metadata.resultset.offset");
  page.page.count = Count(resultset, "count", "metadata.resultset.count");
  page.page.limit = Count(resultset, "limit", "metadata.resultset.limit");

  const json& results = Field(doc, "results", "results");
  if (!results.is_array()) throw JsonSyntaxError("results must be an array");
  for (std::size_t i = 0; i < results.size(); ++i) {
    const json& entry = results[i];
    const std::string path = "results[" + std::to_string(i) + "]";
    const json& date_field = Field(entry, "date", path + ".date");
    const json& datatype_field = Field(entry, "datatype", path + ".datatype");
    const json& station_field = Field(entry, "station", path + ".station");
    const json& value_field = Field(entry, "value", path + ".value");
    if (!date_field.is_string() || !datatype_field.is_string() || !station_field.is_string() ||
        !value_field.is_number()) {
      throw JsonSyntaxError(path + " has fields of the wrong type");
    }

    const std::string datatype = datatype_field.get<std::string>();
    if (!ca::IsKnownDatatypeCode(datatype)) {
      ++page.skipped;
      continue;
    }
    const std::string date_text = date_field.get<std::string>();
    const auto date = ParseIsoDate(std::string_view(date_text).substr(0, 10));
    if (!date) throw JsonSyntaxError(path + ".date is not a valid date: " + date_text);

    const ca::DatatypeCode code = ca::ParseDatatypeCode(datatype);
    const double raw = value_field.get<double>();
    ca::ObservationValue value = raw;
    if (ca::IsWeatherTypeFlag(code)) value = raw != 0;
    ca::ObservationRecord record{CanonicalStationId(station_field.get<std::string>()), *date,
                                 code, value};
    try {
      record.Validate();
    } catch (const InvalidRecord& e) {
      throw JsonSyntaxError(path + ": " + e.what());
    }
    page.records.push_back(std::move(record));
  }
  if (page.skipped > 0) {
    LogWarning("CDO page: skipped " + std::to_string(page.skipped) +
               " results with unsupported datatypes");
  }
  if (page.page.limit > 0 && results.size() > page.page.limit) {
    throw JsonSyntaxError("page holds more results than its limit");
  }
  return page;
}

}  // namespace climakg::noaa
