#include <httplib.h>

#include "climakg/errors.hpp"
#include "climakg/noaa/fetch.hpp"

namespace climakg::noaa {

namespace {

class HttplibTransport : public HttpTransport {
 public:
  HttpResponse Get(const std::string& url,
                   const std::map<std::string, std::string>& headers) override {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw TransportError("not an absolute URL: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_connection_timeout(std::chrono::seconds(15));
    client.set_read_timeout(std::chrono::seconds(60));
    client.set_follow_location(true);
    httplib::Headers h;
    for (const auto& [k, v] : headers) h.emplace(k, v);
    auto result = client.Get(path, h);
    if (!result) {
      throw TransportError("GET " + origin + " failed: " + httplib::to_string(result.error()));
    }
    return HttpResponse{result->status, result->body};
  }
};

}  // namespace

std::unique_ptr<HttpTransport> MakeHttpTransport() {
  return std::make_unique<HttplibTransport>();
}

}  // namespace climakg::noaa
