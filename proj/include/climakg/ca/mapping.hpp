#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "climakg/ca/records.hpp"
#include "climakg/ca/vocabulary.hpp"
#include "climakg/rdf/term.hpp"
#include "climakg/store/graph.hpp"

namespace climakg::ca {

// Five triples: rdf:type ca:Station, stationId, stationName, latitude,
// longitude.
std::vector<rdf::Triple> StationToTriples(const Vocabulary& vocab, const StationRecord& station);

// Five triples: rdf:type ca:Observation, generatedBy, observationDate,
// withDataType, hasValue.
std::vector<rdf::Triple> ObservationToTriples(const Vocabulary& vocab,
                                              const ObservationRecord& observation);

// <base>/obs/<sanitized station id>/<YYYY-MM-DD>/<CODE>
rdf::Iri MintObservationIri(const Vocabulary& vocab, std::string_view station_id,
                            const Date& date, DatatypeCode code);

struct MappingCounts {
  std::size_t stations = 0;
  std::size_t observations = 0;
  std::size_t triples_inserted = 0;
};

// Maps a whole dataset into the graph. Stations and observations are expected
// to be de-duplicated already; the count law triples == 5S + 5O then holds.
MappingCounts MapDataset(const Vocabulary& vocab, const std::vector<StationRecord>& stations,
                         const std::vector<ObservationRecord>& observations,
                         store::Graph& graph);

}  // namespace climakg::ca
