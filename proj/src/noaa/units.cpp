#include "climakg/noaa/units.hpp"

#include <string>

#include "climakg/errors.hpp"

namespace climakg::noaa {

UnitRegime ParseUnitRegime(std::string_view name) {
  if (name == "standard") return UnitRegime::kStandard;
  if (name == "metric") return UnitRegime::kMetric;
  if (name == "tenths") return UnitRegime::kTenths;
  throw UnknownRegime("unknown unit regime '" + std::string(name) +
                      "' (expected standard, metric or tenths)");
}

std::string_view RegimeName(UnitRegime regime) {
  switch (regime) {
    case UnitRegime::kStandard:
      return "standard";
    case UnitRegime::kMetric:
      return "metric";
    case UnitRegime::kTenths:
      return "tenths";
  }
  return "metric";
}

ca::ObservationRecord NormalizeUnits(ca::ObservationRecord raw, UnitRegime regime) {
  auto* value = std::get_if<double>(&raw.value);
  if (value == nullptr || regime == UnitRegime::kMetric) return raw;
  const bool temperature = ca::IsTemperature(raw.code);
  if (regime == UnitRegime::kStandard) {
    if (temperature) {
      *value = (*value - 32.0) * 5.0 / 9.0;
    } else {
      *value *= 25.4;
    }
  } else if (temperature || raw.code == ca::DatatypeCode::kPrcp) {
    *value /= 10.0;
  }
  return raw;
}

std::vector<ca::ObservationRecord> NormalizeUnits(std::vector<ca::ObservationRecord> raw,
                                                  UnitRegime regime) {
  for (auto& r : raw) r = NormalizeUnits(std::move(r), regime);
  return raw;
}

}  // namespace climakg::noaa
