#pragma once

#include <functional>
#include <string_view>

namespace climakg {

enum class LogLevel { kInfo, kWarning };

using LogSink = std::function<void(LogLevel, std::string_view)>;

// Replaces the process-wide sink (stderr by default) and returns the previous
// one. Pass an empty function to silence logging.
LogSink SetLogSink(LogSink sink);

void LogInfo(std::string_view message);
void LogWarning(std::string_view message);

}  // namespace climakg
