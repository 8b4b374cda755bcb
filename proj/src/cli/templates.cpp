#include "climakg/cli/query_templates.hpp"
#include "climakg/errors.hpp"

namespace climakg::cli {

std::string InstantiateTemplate(const std::string& name,
                                std::map<std::string, std::string> params,
                                const ca::Vocabulary& vocab) {
  const auto& templates = QueryTemplates();
  auto it = templates.find(name);
  if (it == templates.end()) throw Error("unknown query template " + name);
  params.try_emplace("CA_NS", vocab.ca_namespace());
  params.try_emplace("NOAA_NS", vocab.noaa_namespace());

  const std::string_view body = it->second;
  std::string out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t open = body.find("{{", pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = body.find("}}", open + 2);
    if (close == std::string_view::npos) throw Error("unterminated placeholder in " + name);
    const std::string key(body.substr(open + 2, close - open - 2));
    auto value = params.find(key);
    if (value == params.end()) throw Error("no value for {{" + key + "}} in " + name);
    out.append(body.substr(pos, open - pos));
    out += value->second;
    pos = close + 2;
  }
  out.append(body.substr(pos));
  return out;
}

}  // namespace climakg::cli
