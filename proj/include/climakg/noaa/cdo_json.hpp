#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "climakg/ca/records.hpp"

namespace climakg::noaa {

// metadata.resultset of a CDO v2 response. CDO offsets are 1-based.
struct Pagination {
  std::size_t offset = 0;
  std::size_t count = 0;
  std::size_t limit = 0;
};

struct CdoPage {
  std::vector<ca::ObservationRecord> records;
  Pagination page;
  // Result entries whose datatype is outside the supported catalog.
  std::size_t skipped = 0;
};

// Parses a CDO v2 /data response:
//   {"metadata":{"resultset":{"offset":1,"count":N,"limit":L}},
//    "results":[{"date":"1980-01-01T00:00:00","datatype":"TAVG",
//                "station":"GHCND:EI000003969","value":4.5}, ...]}
// The API answers an empty query with "{}", which parses as an empty page.
// Values are as served; apply NormalizeUnits afterwards. Throws
// JsonSyntaxError or MissingField(path).
CdoPage ParseCdoJson(std::string_view document);

}  // namespace climakg::noaa
