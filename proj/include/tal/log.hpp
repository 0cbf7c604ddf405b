#pragma once

#include <string_view>

namespace tal {

// Leveled stderr logging controlled by TAL_LOG=error|info|debug (default error).
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_error(std::string_view msg);
void log_info(std::string_view msg);
void log_debug(std::string_view msg);

} // namespace tal
