#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "climakg/ca/vocabulary.hpp"
#include "climakg/date.hpp"

namespace climakg::ca {

// A site that generates observations, identified by id, name and position.
struct StationRecord {
  std::string station_id;
  std::string name;
  double latitude = 0;
  double longitude = 0;

  // Throws InvalidRecord for an empty id or out-of-range coordinates.
  void Validate() const;

  friend bool operator==(const StationRecord&, const StationRecord&) = default;
};

// Measurements are in canonical units (degrees Celsius, millimetres); WTxx
// codes carry a boolean flag.
using ObservationValue = std::variant<double, bool>;

struct ObservationRecord {
  std::string station_id;
  Date date;
  DatatypeCode code;
  ObservationValue value;

  // Throws InvalidRecord when the value kind does not fit the code or the
  // date is not a calendar date.
  void Validate() const;

  friend bool operator==(const ObservationRecord&, const ObservationRecord&) = default;
};

// Builds and validates a record from a catalog code name such as "TAVG".
// Throws UnknownDatatypeCode or InvalidRecord.
ObservationRecord MakeObservation(std::string station_id, const Date& date,
                                  std::string_view code_name, ObservationValue value);

}  // namespace climakg::ca
