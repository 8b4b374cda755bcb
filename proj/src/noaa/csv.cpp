#include "climakg/noaa/csv.hpp"

#include <charconv>
#include <cmath>
#include <unordered_map>

#include "climakg/errors.hpp"

namespace climakg::noaa {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<double> ParseNumber(std::string_view s) {
  s = Trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

constexpr double kMissingSentinel = -9999;

}  // namespace

std::vector<std::vector<std::string>> ReadCsvRecords(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool row_has_content = false;
  std::size_t i = 0;

  auto end_field = [&]() {
    row.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&]() {
    end_field();
    // A blank line yields a single empty field; skip it.
    if (row_has_content) rows.push_back(std::move(row));
    row.clear();
    row_has_content = false;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          throw CsvSyntaxError("unexpected quote inside field", rows.size() + 1);
        }
        in_quotes = true;
        field_was_quoted = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        if (field_was_quoted) {
          throw CsvSyntaxError("text after closing quote", rows.size() + 1);
        }
        field += c;
        row_has_content = true;
    }
    ++i;
  }
  if (in_quotes) throw CsvSyntaxError("unterminated quoted field", rows.size() + 1);
  if (row_has_content || !field.empty()) end_row();
  return rows;
}

std::string CanonicalStationId(std::string_view raw) {
  raw = Trim(raw);
  if (raw.empty() || raw.find(':') != std::string_view::npos) return std::string(raw);
  return "GHCND:" + std::string(raw);
}

std::vector<DailySummaryRow> ReadDailySummaries(std::string_view text) {
  const auto records = ReadCsvRecords(text);
  if (records.empty()) throw MissingColumn("STATION");

  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t j = 0; j < records[0].size(); ++j) {
    column.emplace(std::string(Trim(records[0][j])), j);
  }
  auto find_column = [&](const char* name) -> std::optional<std::size_t> {
    auto it = column.find(name);
    if (it == column.end()) return std::nullopt;
    return it->second;
  };
  const auto station_col = find_column("STATION");
  if (!station_col) throw MissingColumn("STATION");
  const auto date_col = find_column("DATE");
  if (!date_col) throw MissingColumn("DATE");
  const auto name_col = find_column("NAME");
  const auto lat_col = find_column("LATITUDE");
  const auto lon_col = find_column("LONGITUDE");

  std::vector<std::pair<ca::DatatypeCode, std::size_t>> value_cols;
  for (ca::DatatypeCode code : ca::AllDatatypeCodes()) {
    if (auto j = find_column(std::string(ca::CodeName(code)).c_str())) {
      value_cols.emplace_back(code, *j);
    }
  }

  std::vector<DailySummaryRow> out;
  out.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& cells = records[r];
    const std::size_t row_number = r + 1;
    if (cells.size() != records[0].size()) {
      throw CsvSyntaxError("expected " + std::to_string(records[0].size()) + " fields, found " +
                               std::to_string(cells.size()),
                           row_number);
    }
    DailySummaryRow row;
    row.row_number = row_number;
    row.station = CanonicalStationId(cells[*station_col]);
    if (row.station.empty()) throw CsvSyntaxError("empty STATION", row_number);
    if (name_col) row.name = std::string(Trim(cells[*name_col]));
    const auto date = ParseIsoDate(Trim(cells[*date_col]));
    if (!date) throw CsvSyntaxError("invalid DATE '" + cells[*date_col] + "'", row_number);
    row.date = *date;

    auto coordinate = [&](std::optional<std::size_t> col, const char* label) {
      std::optional<double> v;
      if (!col || Trim(cells[*col]).empty()) return v;
      v = ParseNumber(cells[*col]);
      if (!v) throw CsvSyntaxError(std::string("invalid ") + label, row_number);
      return v;
    };
    row.latitude = coordinate(lat_col, "LATITUDE");
    row.longitude = coordinate(lon_col, "LONGITUDE");

    for (const auto& [code, j] : value_cols) {
      const std::string_view cell = Trim(cells[j]);
      if (cell.empty()) continue;
      if (ca::IsWeatherTypeFlag(code)) {
        if (cell == "1") {
          row.values.emplace(code, true);
        } else if (cell == "0") {
          row.values.emplace(code, false);
        } else {
          throw CsvSyntaxError("invalid flag '" + std::string(cell) + "' in " +
                                   std::string(ca::CodeName(code)),
                               row_number);
        }
        continue;
      }
      const auto value = ParseNumber(cell);
      if (!value) {
        throw CsvSyntaxError("invalid number '" + std::string(cell) + "' in " +
                                 std::string(ca::CodeName(code)),
                             row_number);
      }
      if (*value == kMissingSentinel) continue;
      row.values.emplace(code, *value);
    }
    out.push_back(std::move(row));
  }
  return out;
}

ParsedDataset ParseCsv(std::string_view text) {
  const auto rows = ReadDailySummaries(text);
  ParsedDataset out;
  std::unordered_map<std::string, std::size_t> station_index;
  std::vector<std::size_t> first_row;
  for (const DailySummaryRow& row : rows) {
    auto [it, inserted] = station_index.try_emplace(row.station, out.stations.size());
    if (inserted) {
      out.stations.push_back(ca::StationRecord{row.station, row.name, NAN, NAN});
      first_row.push_back(row.row_number);
    }
    ca::StationRecord& station = out.stations[it->second];
    if (std::isnan(station.latitude) && row.latitude) station.latitude = *row.latitude;
    if (std::isnan(station.longitude) && row.longitude) station.longitude = *row.longitude;
    if (station.name.empty()) station.name = row.name;
    for (const auto& [code, value] : row.values) {
      out.observations.push_back(ca::ObservationRecord{row.station, row.date, code, value});
    }
  }
  for (std::size_t i = 0; i < out.stations.size(); ++i) {
    ca::StationRecord& s = out.stations[i];
    if (std::isnan(s.latitude) || std::isnan(s.longitude)) {
      throw CsvSyntaxError("no LATITUDE/LONGITUDE for station " + s.station_id, first_row[i]);
    }
    try {
      s.Validate();
    } catch (const InvalidRecord& e) {
      throw CsvSyntaxError(e.what(), first_row[i]);
    }
  }
  return out;
}

std::vector<ca::StationRecord> ParseStationCsv(std::string_view text) {
  const auto records = ReadCsvRecords(text);
  if (records.empty()) throw MissingColumn("STATION");
  std::unordered_map<std::string, std::size_t> column;
  for (std::size_t j = 0; j < records[0].size(); ++j) {
    column.emplace(std::string(Trim(records[0][j])), j);
  }
  auto require = [&](const char* name) {
    auto it = column.find(name);
    if (it == column.end()) throw MissingColumn(name);
    return it->second;
  };
  const std::size_t id_col = require("STATION");
  const std::size_t name_col = require("NAME");
  const std::size_t lat_col = require("LATITUDE");
  const std::size_t lon_col = require("LONGITUDE");

  std::vector<ca::StationRecord> out;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& cells = records[r];
    if (cells.size() != records[0].size()) {
      throw CsvSyntaxError("expected " + std::to_string(records[0].size()) + " fields", r + 1);
    }
    const auto lat = ParseNumber(cells[lat_col]);
    const auto lon = ParseNumber(cells[lon_col]);
    if (!lat || !lon) throw CsvSyntaxError("invalid LATITUDE/LONGITUDE", r + 1);
    ca::StationRecord s{CanonicalStationId(cells[id_col]), std::string(Trim(cells[name_col])),
                        *lat, *lon};
    try {
      s.Validate();
    } catch (const InvalidRecord& e) {
      throw CsvSyntaxError(e.what(), r + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace climakg::noaa
