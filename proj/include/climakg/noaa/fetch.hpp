#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "climakg/ca/records.hpp"
#include "climakg/date.hpp"
#include "climakg/noaa/units.hpp"

namespace climakg::noaa {

inline constexpr const char* kCdoBaseUrl = "https://www.ncei.noaa.gov/cdo-web/api/v2";

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::milliseconds max_backoff{8000};
  // Tests swap this out to avoid real sleeping.
  std::function<void(std::chrono::milliseconds)> sleep;
};

struct FetchSpec {
  std::string dataset_id = "GHCND";
  std::vector<std::string> station_ids;
  std::vector<std::string> datatype_codes;
  Date start{};
  Date end{};
  std::size_t page_size = 1000;
  // CDO web-service token; required online, ignored offline.
  std::string token;
  // When set, pages are read from *.json files here instead of the network.
  std::optional<std::filesystem::path> fixture_dir;
  UnitRegime units = UnitRegime::kMetric;
  std::string base_url = kCdoBaseUrl;
  RetryPolicy retry;

  // Throws InvalidFetchSpec when start > end or page_size is outside [1,1000].
  void Validate() const;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

// Minimal GET interface so the pager can be tested without a network.
// Implementations throw TransportError when no response was obtained.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual HttpResponse Get(const std::string& url,
                           const std::map<std::string, std::string>& headers) = 0;
};

std::unique_ptr<HttpTransport> MakeHttpTransport();

// Query URL for one page; offset is 1-based as in the CDO API.
std::string BuildPageUrl(const FetchSpec& spec, const Date& start, const Date& end,
                         std::size_t offset);

// Fetches every page and returns normalized, de-duplicated records in page
// order. Offline mode reads spec.fixture_dir; online mode needs a token and
// uses `transport` (or the default HTTP transport when null). Throws
// AuthError, RateLimited, TransportError, FixtureMissing, InvalidFetchSpec.
std::vector<ca::ObservationRecord> FetchAll(const FetchSpec& spec,
                                            HttpTransport* transport = nullptr);

// Metadata for spec.station_ids. Offline it comes from stations.csv in the
// fixture directory (see ParseStationCsv); online from /stations/<id>.
// Throws FixtureMissing when a requested station has no metadata.
std::vector<ca::StationRecord> FetchStations(const FetchSpec& spec,
                                             HttpTransport* transport = nullptr);

// First-wins collapse of repeated (station, date, datatype) keys. Returns the
// number of records dropped.
std::size_t DropDuplicateKeys(std::vector<ca::ObservationRecord>& records);

}  // namespace climakg::noaa
