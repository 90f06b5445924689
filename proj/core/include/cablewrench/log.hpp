#pragma once

#include <string>

namespace cablewrench {

enum class LogLevel { off = 0, info = 1, debug = 2 };

/// Current level, read once from the CABLEWRENCH_LOG environment variable
/// ("off" | "info" | "debug", default off). Messages go to stderr so they
/// never pollute CSV/JSON written to stdout.
LogLevel log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace cablewrench
