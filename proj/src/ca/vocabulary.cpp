#include "climakg/ca/vocabulary.hpp"

#include <array>
#include <utility>

#include "climakg/errors.hpp"

namespace climakg::ca {

namespace {

constexpr std::array<std::pair<DatatypeCode, std::string_view>, 11> kCatalog{{
    {DatatypeCode::kTavg, "TAVG"},
    {DatatypeCode::kTmax, "TMAX"},
    {DatatypeCode::kTmin, "TMIN"},
    {DatatypeCode::kPrcp, "PRCP"},
    {DatatypeCode::kSnow, "SNOW"},
    {DatatypeCode::kWt01, "WT01"},
    {DatatypeCode::kWt02, "WT02"},
    {DatatypeCode::kWt08, "WT08"},
    {DatatypeCode::kWt14, "WT14"},
    {DatatypeCode::kWt16, "WT16"},
    {DatatypeCode::kWt18, "WT18"},
}};

}  // namespace

DatatypeCode ParseDatatypeCode(std::string_view name) {
  for (const auto& [code, code_name] : kCatalog) {
    if (code_name == name) return code;
  }
  throw UnknownDatatypeCode("unknown datatype code '" + std::string(name) + "'");
}

bool IsKnownDatatypeCode(std::string_view name) {
  for (const auto& entry : kCatalog) {
    if (entry.second == name) return true;
  }
  return false;
}

std::string_view CodeName(DatatypeCode code) {
  for (const auto& [c, name] : kCatalog) {
    if (c == code) return name;
  }
  return "";
}

const std::vector<DatatypeCode>& AllDatatypeCodes() {
  static const std::vector<DatatypeCode> codes = [] {
    std::vector<DatatypeCode> out;
    for (const auto& entry : kCatalog) out.push_back(entry.first);
    return out;
  }();
  return codes;
}

bool IsWeatherTypeFlag(DatatypeCode code) {
  switch (code) {
    case DatatypeCode::kWt01:
    case DatatypeCode::kWt02:
    case DatatypeCode::kWt08:
    case DatatypeCode::kWt14:
    case DatatypeCode::kWt16:
    case DatatypeCode::kWt18:
      return true;
    default:
      return false;
  }
}

bool IsTemperature(DatatypeCode code) {
  return code == DatatypeCode::kTavg || code == DatatypeCode::kTmax ||
         code == DatatypeCode::kTmin;
}

std::string SanitizeId(std::string_view id) {
  std::string out(id);
  for (char& c : out) {
    if (c == ':' || c == '/') c = '_';
  }
  return out;
}

Vocabulary::Vocabulary(std::string base) : base_(std::move(base)) {
  while (!base_.empty() && (base_.back() == '/' || base_.back() == '#')) base_.pop_back();
  // Validates the base as an IRI.
  rdf::Iri check(base_);
  (void)check;
  ca_ns_ = base_ + "/ca#";
  noaa_ns_ = base_ + "/noaa#";
  station_ns_ = base_ + "/station/";
  obs_ns_ = base_ + "/obs/";
}

rdf::Iri Vocabulary::rdf_type() const { return rdf::Iri(std::string(rdf::kRdfType)); }

rdf::Iri Vocabulary::Ca(std::string_view local) const {
  return rdf::Iri(ca_ns_ + std::string(local));
}

rdf::Iri Vocabulary::datatype(DatatypeCode code) const {
  return rdf::Iri(noaa_ns_ + std::string(CodeName(code)));
}

std::optional<DatatypeCode> Vocabulary::CodeOf(const rdf::Iri& iri) const {
  const std::string& s = iri.str();
  if (s.rfind(noaa_ns_, 0) != 0) return std::nullopt;
  const std::string_view local = std::string_view(s).substr(noaa_ns_.size());
  if (!IsKnownDatatypeCode(local)) return std::nullopt;
  return ParseDatatypeCode(local);
}

rdf::Iri Vocabulary::StationIri(std::string_view station_id) const {
  return rdf::Iri(station_ns_ + SanitizeId(station_id));
}

std::vector<rdf::Iri> Vocabulary::Properties() const {
  return {station_id(),       station_name(),   latitude(),       longitude(),
          generated_by(),     observation_date(), with_data_type(), has_value()};
}

}  // namespace climakg::ca
