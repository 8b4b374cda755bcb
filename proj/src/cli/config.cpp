#include "climakg/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "climakg/errors.hpp"

namespace climakg::cli {

namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int ParseYear(std::string_view s) {
  s = Trim(s);
  int year = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), year);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.size() != 4) {
    throw UsageError("invalid year '" + std::string(s) + "'");
  }
  return year;
}

}  // namespace

void CliConfig::Validate() const {
  if (base_iri.empty()) throw Error("base IRI is empty");
  ca::Vocabulary check(base_iri);
  (void)check;
}

std::map<std::string, std::string> ParseConfigText(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view l = Trim(line);
    if (l.empty() || l.front() == '#' || l.front() == ';') continue;
    if (l.front() == '[' && l.back() == ']') continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(Trim(l.substr(0, eq)));
    std::string_view value = Trim(l.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw Error("config line " + std::to_string(line_no) + ": empty key");
    out[key] = std::string(value);
  }
  return out;
}

std::map<std::string, std::string> LoadConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("no such file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseConfigText(buf.str());
}

std::vector<int> ParseYears(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view item = Trim(text.substr(pos, comma - pos));
    if (item.empty()) throw UsageError("empty year in '" + std::string(text) + "'");
    const auto dash = item.find('-', 1);
    if (dash == std::string_view::npos) {
      out.push_back(ParseYear(item));
    } else {
      const int first = ParseYear(item.substr(0, dash));
      const int last = ParseYear(item.substr(dash + 1));
      if (first > last) throw UsageError("year range '" + std::string(item) + "' is reversed");
      for (int y = first; y <= last; ++y) out.push_back(y);
    }
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

analytics::YearRange SpanOf(const std::vector<int>& years) {
  if (years.empty()) throw UsageError("no years given");
  return analytics::YearRange{years.front(), years.back()};
}

}  // namespace climakg::cli
