#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "climakg/rdf/term.hpp"

namespace climakg::ca {

inline constexpr std::string_view kDefaultBase = "http://example.org/climakg";

// Datatype codes understood by ingestion and mapping.
enum class DatatypeCode {
  kTavg,
  kTmax,
  kTmin,
  kPrcp,
  kSnow,
  kWt01,  // fog
  kWt02,  // heavy fog
  kWt08,  // smoke or haze
  kWt14,  // drizzle
  kWt16,  // rain
  kWt18,  // snow, snow pellets, ice crystals
};

// Returns the code for a catalog name such as "TAVG"; throws
// UnknownDatatypeCode otherwise.
DatatypeCode ParseDatatypeCode(std::string_view name);
bool IsKnownDatatypeCode(std::string_view name);
std::string_view CodeName(DatatypeCode code);
const std::vector<DatatypeCode>& AllDatatypeCodes();

// WTxx codes carry boolean presence flags; the rest carry measurements.
bool IsWeatherTypeFlag(DatatypeCode code);
bool IsTemperature(DatatypeCode code);

// Concrete IRIs for the Station / Observation model. Everything hangs off one
// configurable base:
//   <base>/ca#Station ...         classes and properties
//   <base>/noaa#TAVG ...          datatype individuals
//   <base>/station/<id>           station nodes
//   <base>/obs/<id>/<date>/<code> observation nodes
class Vocabulary {
 public:
  explicit Vocabulary(std::string base = std::string(kDefaultBase));

  const std::string& base() const { return base_; }
  const std::string& ca_namespace() const { return ca_ns_; }
  const std::string& noaa_namespace() const { return noaa_ns_; }
  const std::string& station_namespace() const { return station_ns_; }
  const std::string& observation_namespace() const { return obs_ns_; }

  rdf::Iri rdf_type() const;
  rdf::Iri station_class() const { return Ca("Station"); }
  rdf::Iri observation_class() const { return Ca("Observation"); }
  rdf::Iri station_id() const { return Ca("stationId"); }
  rdf::Iri station_name() const { return Ca("stationName"); }
  rdf::Iri latitude() const { return Ca("latitude"); }
  rdf::Iri longitude() const { return Ca("longitude"); }
  rdf::Iri generated_by() const { return Ca("generatedBy"); }
  rdf::Iri observation_date() const { return Ca("observationDate"); }
  rdf::Iri with_data_type() const { return Ca("withDataType"); }
  rdf::Iri has_value() const { return Ca("hasValue"); }

  rdf::Iri datatype(DatatypeCode code) const;
  // Reverse lookup of a datatype IRI; nullopt for IRIs outside the catalog.
  std::optional<DatatypeCode> CodeOf(const rdf::Iri& iri) const;

  rdf::Iri StationIri(std::string_view station_id) const;

  // All property IRIs, for the distinctness invariant.
  std::vector<rdf::Iri> Properties() const;

 private:
  rdf::Iri Ca(std::string_view local) const;

  std::string base_;
  std::string ca_ns_;
  std::string noaa_ns_;
  std::string station_ns_;
  std::string obs_ns_;
};

// Replaces ':' and '/' with '_' so an id can be used as an IRI path segment.
std::string SanitizeId(std::string_view id);

}  // namespace climakg::ca
