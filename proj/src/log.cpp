#include "climakg/log.hpp"

#include <iostream>
#include <mutex>

namespace climakg {

namespace {

std::mutex& SinkMutex() {
  static std::mutex m;
  return m;
}

LogSink& Sink() {
  static LogSink sink = [](LogLevel level, std::string_view message) {
    std::cerr << (level == LogLevel::kWarning ? "warning: " : "") << message << '\n';
  };
  return sink;
}

void Emit(LogLevel level, std::string_view message) {
  std::lock_guard lock(SinkMutex());
  if (Sink()) Sink()(level, message);
}

}  // namespace

LogSink SetLogSink(LogSink sink) {
  std::lock_guard lock(SinkMutex());
  LogSink previous = std::move(Sink());
  Sink() = std::move(sink);
  return previous;
}

void LogInfo(std::string_view message) { Emit(LogLevel::kInfo, message); }
void LogWarning(std::string_view message) { Emit(LogLevel::kWarning, message); }

}  // namespace climakg
