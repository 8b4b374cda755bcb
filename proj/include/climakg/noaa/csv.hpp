#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "climakg/ca/records.hpp"
#include "climakg/date.hpp"

namespace climakg::noaa {

// Raw fields of one row of a CDO daily-summaries CSV export.
struct DailySummaryRow {
  std::size_t row_number = 0;  // 1-based, header is row 1
  std::string station;
  std::string name;
  Date date;
  std::optional<double> latitude;
  std::optional<double> longitude;
  // Non-missing cells of supported datatype columns, keyed by code.
  std::map<ca::DatatypeCode, ca::ObservationValue> values;
};

struct ParsedDataset {
  std::vector<ca::StationRecord> stations;
  std::vector<ca::ObservationRecord> observations;
};

// Splits RFC 4180 text into records. Throws CsvSyntaxError on unterminated or
// stray quotes.
std::vector<std::vector<std::string>> ReadCsvRecords(std::string_view text);

// Reads rows by column name. Missing cells are empty or "-9999"; WT columns
// hold "1" (true) or "0" (false). Throws MissingColumn for DATE or STATION and
// CsvSyntaxError for unparseable cells.
std::vector<DailySummaryRow> ReadDailySummaries(std::string_view text);

// One StationRecord per distinct station (first-seen order) and one
// ObservationRecord per non-missing supported cell. Values are as found in the
// file; apply NormalizeUnits afterwards.
ParsedDataset ParseCsv(std::string_view text);

// Station metadata table with STATION, NAME, LATITUDE and LONGITUDE columns
// (the CDO stations export). Throws MissingColumn or CsvSyntaxError.
std::vector<ca::StationRecord> ParseStationCsv(std::string_view text);

// CSV exports use bare GHCN ids ("EI000003969") while the API uses the
// composite form ("GHCND:EI000003969"); both normalise to the composite form.
std::string CanonicalStationId(std::string_view raw);

}  // namespace climakg::noaa
