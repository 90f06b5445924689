#include "cablewrench/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace cablewrench {

namespace {

LogLevel read_env_level() {
    const char* v = std::getenv("CABLEWRENCH_LOG");
    if (!v) return LogLevel::off;
    std::string s(v);
    if (s == "debug") return LogLevel::debug;
    if (s == "info") return LogLevel::info;
    return LogLevel::off;
}

std::mutex& log_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

LogLevel log_level() {
    static const LogLevel level = read_env_level();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) {
        std::lock_guard<std::mutex> lock(log_mutex());
        std::cerr << "[info] " << msg << "\n";
    }
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) {
        std::lock_guard<std::mutex> lock(log_mutex());
        std::cerr << "[debug] " << msg << "\n";
    }
}

} // namespace cablewrench
