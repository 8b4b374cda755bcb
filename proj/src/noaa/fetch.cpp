#include "climakg/noaa/fetch.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "climakg/errors.hpp"
#include "climakg/log.hpp"
#include "climakg/noaa/cdo_json.hpp"
#include "climakg/noaa/csv.hpp"

#include <json.hpp>

namespace climakg::noaa {

namespace {

namespace fs = std::filesystem;
using std::chrono::days;
using std::chrono::sys_days;

std::string PercentEncode(std::string_view s) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' || c == ':') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FixtureMissing("cannot read fixture " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<ca::ObservationRecord> ReadFixturePages(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw FixtureMissing("fixture directory not found: " + dir.string());
  }
  std::vector<fs::path> pages;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        !name.ends_with(".manifest.json")) {
      pages.push_back(entry.path());
    }
  }
  if (pages.empty()) throw FixtureMissing("no *.json pages in " + dir.string());
  std::sort(pages.begin(), pages.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<ca::ObservationRecord> out;
  for (const auto& page : pages) {
    auto parsed = ParseCdoJson(ReadFile(page));
    out.insert(out.end(), std::make_move_iterator(parsed.records.begin()),
               std::make_move_iterator(parsed.records.end()));
  }
  return out;
}

// CDO rejects GHCND requests spanning more than a year, so the range is cut
// into windows of at most one year.
std::vector<std::pair<Date, Date>> YearWindows(const Date& start, const Date& end) {
  std::vector<std::pair<Date, Date>> out;
  Date from = start;
  while (sys_days(from) <= sys_days(end)) {
    Date next = from + std::chrono::years(1);
    if (!next.ok()) {
      next = Date(std::chrono::year_month_day_last(next.year(),
                                                   std::chrono::month_day_last(next.month())));
    }
    Date to = Date(sys_days(next) - days(1));
    if (sys_days(to) > sys_days(end)) to = end;
    out.emplace_back(from, to);
    from = Date(sys_days(to) + days(1));
  }
  return out;
}

class Pager {
 public:
  Pager(const FetchSpec& spec, HttpTransport& transport) : spec_(spec), transport_(transport) {}

  std::string GetPage(const std::string& url) {
    const std::map<std::string, std::string> headers{{"token", spec_.token}};
    auto backoff = spec_.retry.initial_backoff;
    std::string last_failure;
    bool rate_limited = false;
    for (int attempt = 1; attempt <= std::max(1, spec_.retry.max_attempts); ++attempt) {
      if (attempt > 1) {
        Sleep(backoff);
        backoff = std::min(backoff * 2, spec_.retry.max_backoff);
      }
      HttpResponse response;
      try {
        response = transport_.Get(url, headers);
      } catch (const TransportError& e) {
        last_failure = e.what();
        rate_limited = false;
        LogWarning("request failed (attempt " + std::to_string(attempt) + "): " + last_failure);
        continue;
      }
      if (response.status == 200) return response.body;
      if (response.status == 401 || response.status == 403) {
        throw AuthError("NOAA CDO rejected the token (HTTP " + std::to_string(response.status) +
                        ")");
      }
      if (response.status == 429 || response.status >= 500) {
        rate_limited = response.status == 429;
        last_failure = "HTTP " + std::to_string(response.status);
        LogWarning(last_failure + " from NOAA CDO (attempt " + std::to_string(attempt) + ")");
        continue;
      }
      throw TransportError("HTTP " + std::to_string(response.status) + " for " + url + ": " +
                           response.body.substr(0, 200));
    }
    if (rate_limited) throw RateLimited("NOAA CDO rate limit persisted after retries");
    throw TransportError("giving up after retries: " + last_failure);
  }

 private:
  void Sleep(std::chrono::milliseconds d) {
    if (spec_.retry.sleep) {
      spec_.retry.sleep(d);
    } else {
      std::this_thread::sleep_for(d);
    }
  }

  const FetchSpec& spec_;
  HttpTransport& transport_;
};

}  // namespace

void FetchSpec::Validate() const {
  if (!start.ok() || !end.ok()) throw InvalidFetchSpec("start and end must be calendar dates");
  if (sys_days(start) > sys_days(end)) throw InvalidFetchSpec("start date is after end date");
  if (page_size < 1 || page_size > 1000) {
    throw InvalidFetchSpec("page size must be within [1, 1000]");
  }
  if (dataset_id.empty()) throw InvalidFetchSpec("dataset id is empty");
}

std::string BuildPageUrl(const FetchSpec& spec, const Date& start, const Date& end,
                         std::size_t offset) {
  std::string url = spec.base_url + "/data?datasetid=" + PercentEncode(spec.dataset_id);
  for (const auto& s : spec.station_ids) url += "&stationid=" + PercentEncode(s);
  for (const auto& d : spec.datatype_codes) url += "&datatypeid=" + PercentEncode(d);
  url += "&startdate=" + FormatIsoDate(start);
  url += "&enddate=" + FormatIsoDate(end);
  url += "&limit=" + std::to_string(spec.page_size);
  url += "&offset=" + std::to_string(offset);
  // Without a units parameter CDO serves raw GHCN values (tenths).
  if (spec.units != UnitRegime::kTenths) url += "&units=" + std::string(RegimeName(spec.units));
  return url;
}

std::vector<ca::StationRecord> FetchStations(const FetchSpec& spec, HttpTransport* transport) {
  std::vector<ca::StationRecord> out;
  if (spec.fixture_dir) {
    const fs::path path = *spec.fixture_dir / "stations.csv";
    std::error_code ec;
    if (!fs::exists(path, ec)) throw FixtureMissing("station metadata not found: " + path.string());
    const auto all = ParseStationCsv(ReadFile(path));
    if (spec.station_ids.empty()) return all;
    for (const auto& id : spec.station_ids) {
      const std::string wanted = CanonicalStationId(id);
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const ca::StationRecord& s) { return s.station_id == wanted; });
      if (it == all.end()) throw FixtureMissing("no metadata for station " + wanted);
      out.push_back(*it);
    }
    return out;
  }
  if (spec.token.empty()) throw AuthError("a NOAA CDO token is required for online fetches");
  std::unique_ptr<HttpTransport> owned;
  if (transport == nullptr) {
    owned = MakeHttpTransport();
    transport = owned.get();
  }
  Pager pager(spec, *transport);
  for (const auto& id : spec.station_ids) {
    const std::string wanted = CanonicalStationId(id);
    const std::string body = pager.GetPage(spec.base_url + "/stations/" + PercentEncode(wanted));
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw JsonSyntaxError(std::string("invalid station response: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("latitude") || !doc.contains("longitude") ||
        !doc["latitude"].is_number() || !doc["longitude"].is_number()) {
      throw MissingField("latitude/longitude for " + wanted);
    }
    ca::StationRecord s{wanted, doc.value("name", std::string()), doc["latitude"].get<double>(),
                        doc["longitude"].get<double>()};
    s.Validate();
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t DropDuplicateKeys(std::vector<ca::ObservationRecord>& records) {
  std::set<std::tuple<std::string, int, ca::DatatypeCode>> seen;
  std::size_t dropped = 0;
  std::vector<ca::ObservationRecord> kept;
  kept.reserve(records.size());
  for (auto& r : records) {
    const int day = static_cast<int>(sys_days(r.date).time_since_epoch().count());
    if (seen.emplace(r.station_id, day, r.code).second) {
      kept.push_back(std::move(r));
    } else {
      ++dropped;
    }
  }
  records = std::move(kept);
  if (dropped > 0) {
    LogWarning("dropped " + std::to_string(dropped) +
               " duplicate (station, date, datatype) records; first occurrence kept");
  }
  return dropped;
}

std::vector<ca::ObservationRecord> FetchAll(const FetchSpec& spec, HttpTransport* transport) {
  spec.Validate();
  std::vector<ca::ObservationRecord> raw;
  if (spec.fixture_dir) {
    raw = ReadFixturePages(*spec.fixture_dir);
  } else {
    if (spec.token.empty()) throw AuthError("a NOAA CDO token is required for online fetches");
    std::unique_ptr<HttpTransport> owned;
    if (transport == nullptr) {
      owned = MakeHttpTransport();
      transport = owned.get();
    }
    Pager pager(spec, *transport);
    for (const auto& [from, to] : YearWindows(spec.start, spec.end)) {
      std::size_t offset = 1;
      while (true) {
        CdoPage page = ParseCdoJson(pager.GetPage(BuildPageUrl(spec, from, to, offset)));
        raw.insert(raw.end(), std::make_move_iterator(page.records.begin()),
                   std::make_move_iterator(page.records.end()));
        // Offsets are 1-based: the page at offset o covers o .. o+limit-1.
        const std::size_t step = page.page.limit > 0 ? page.page.limit : spec.page_size;
        offset = (page.page.offset > 0 ? page.page.offset : offset) + step;
        if (page.page.count == 0 || offset > page.page.count) break;
      }
    }
  }
  auto normalized = NormalizeUnits(std::move(raw), spec.units);
  DropDuplicateKeys(normalized);
  return normalized;
}

}  // namespace climakg::noaa
