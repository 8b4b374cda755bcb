#pragma once

#include <string_view>
#include <vector>

#include "climakg/ca/records.hpp"

namespace climakg::noaa {

// Unit conventions NOAA serves data in:
//   standard  degrees Fahrenheit, inches
//   metric    degrees Celsius, millimetres (canonical)
//   tenths    raw GHCN-Daily: tenths of degrees Celsius, tenths of mm for
//             precipitation, whole mm for snowfall
enum class UnitRegime { kStandard, kMetric, kTenths };

// Throws UnknownRegime for names other than standard / metric / tenths.
UnitRegime ParseUnitRegime(std::string_view name);
std::string_view RegimeName(UnitRegime regime);

// Converts a raw record into canonical degrees Celsius and millimetres.
// Weather-type flags pass through unchanged.
ca::ObservationRecord NormalizeUnits(ca::ObservationRecord raw, UnitRegime regime);
std::vector<ca::ObservationRecord> NormalizeUnits(std::vector<ca::ObservationRecord> raw,
                                                  UnitRegime regime);

}  // namespace climakg::noaa
