#include "tal/log.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace tal {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("TAL_LOG");
    if (env && std::strcmp(env, "debug") == 0) return LogLevel::Debug;
    if (env && std::strcmp(env, "info") == 0) return LogLevel::Info;
    return LogLevel::Error;
  }();
  return level;
}

namespace {

void emit(LogLevel at, std::string_view tag, std::string_view msg) {
  if (static_cast<int>(at) > static_cast<int>(log_level())) return;
  static std::mutex m;
  std::lock_guard lock(m);
  std::cerr << "[tal " << tag << "] " << msg << '\n';
}

} // namespace

void log_error(std::string_view msg) { emit(LogLevel::Error, "error", msg); }
void log_info(std::string_view msg) { emit(LogLevel::Info, "info", msg); }
void log_debug(std::string_view msg) { emit(LogLevel::Debug, "debug", msg); }

} // namespace tal
