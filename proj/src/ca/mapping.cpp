#include "climakg/ca/mapping.hpp"

#include <cmath>

#include "climakg/errors.hpp"

namespace climakg::ca {

void StationRecord::Validate() const {
  if (station_id.empty()) throw InvalidRecord("station id is empty");
  if (!(latitude >= -90 && latitude <= 90)) {
    throw InvalidRecord("latitude out of range for station " + station_id);
  }
  if (!(longitude >= -180 && longitude <= 180)) {
    throw InvalidRecord("longitude out of range for station " + station_id);
  }
}

void ObservationRecord::Validate() const {
  if (station_id.empty()) throw InvalidRecord("observation without station id");
  if (!date.ok()) throw InvalidRecord("invalid observation date");
  const bool is_flag = std::holds_alternative<bool>(value);
  if (IsWeatherTypeFlag(code) != is_flag) {
    throw InvalidRecord(std::string(CodeName(code)) +
                        (is_flag ? " expects a numeric value" : " expects a boolean flag"));
  }
  if (!is_flag && !std::isfinite(std::get<double>(value))) {
    throw InvalidRecord("non-finite value for " + std::string(CodeName(code)));
  }
}

ObservationRecord MakeObservation(std::string station_id, const Date& date,
                                  std::string_view code_name, ObservationValue value) {
  ObservationRecord record{std::move(station_id), date, ParseDatatypeCode(code_name), value};
  record.Validate();
  return record;
}

rdf::Iri MintObservationIri(const Vocabulary& vocab, std::string_view station_id,
                            const Date& date, DatatypeCode code) {
  return rdf::Iri(vocab.observation_namespace() + SanitizeId(station_id) + "/" +
                  FormatIsoDate(date) + "/" + std::string(CodeName(code)));
}

std::vector<rdf::Triple> StationToTriples(const Vocabulary& vocab,
                                          const StationRecord& station) {
  station.Validate();
  const rdf::Iri node = vocab.StationIri(station.station_id);
  return {
      {node, vocab.rdf_type(), vocab.station_class()},
      {node, vocab.station_id(), rdf::Literal::String(station.station_id)},
      {node, vocab.station_name(), rdf::Literal::String(station.name)},
      {node, vocab.latitude(), rdf::Literal::Double(station.latitude)},
      {node, vocab.longitude(), rdf::Literal::Double(station.longitude)},
  };
}

std::vector<rdf::Triple> ObservationToTriples(const Vocabulary& vocab,
                                              const ObservationRecord& observation) {
  observation.Validate();
  const rdf::Iri node =
      MintObservationIri(vocab, observation.station_id, observation.date, observation.code);
  const rdf::Literal value =
      std::holds_alternative<bool>(observation.value)
          ? rdf::Literal::Boolean(std::get<bool>(observation.value))
          : rdf::Literal::Double(std::get<double>(observation.value));
  return {
      {node, vocab.rdf_type(), vocab.observation_class()},
      {node, vocab.generated_by(), vocab.StationIri(observation.station_id)},
      {node, vocab.observation_date(), rdf::Literal::DateValue(observation.date)},
      {node, vocab.with_data_type(), vocab.datatype(observation.code)},
      {node, vocab.has_value(), value},
  };
}

MappingCounts MapDataset(const Vocabulary& vocab, const std::vector<StationRecord>& stations,
                         const std::vector<ObservationRecord>& observations,
                         store::Graph& graph) {
  MappingCounts counts;
  for (const StationRecord& s : stations) {
    for (const rdf::Triple& t : StationToTriples(vocab, s)) {
      if (graph.Insert(t)) ++counts.triples_inserted;
    }
    ++counts.stations;
  }
  for (const ObservationRecord& o : observations) {
    for (const rdf::Triple& t : ObservationToTriples(vocab, o)) {
      if (graph.Insert(t)) ++counts.triples_inserted;
    }
    ++counts.observations;
  }
  return counts;
}

}  // namespace climakg::ca
