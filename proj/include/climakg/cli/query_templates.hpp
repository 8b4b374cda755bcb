#pragma once

#include <map>
#include <string>
#include <string_view>

#include "climakg/ca/vocabulary.hpp"

namespace climakg::cli {

// Bodies of queries/templates/*.rq keyed by file name ("tavg.rq").
const std::map<std::string, std::string_view>& QueryTemplates();

// Replaces every {{KEY}} with params[KEY]. CA_NS and NOAA_NS default to the
// vocabulary namespaces. Throws Error for unknown templates or placeholders
// left without a value.
std::string InstantiateTemplate(const std::string& name,
                                std::map<std::string, std::string> params,
                                const ca::Vocabulary& vocab);

}  // namespace climakg::cli
