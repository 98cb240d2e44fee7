#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace edgecast::log {

enum class Level { Quiet = 0, Info = 1, Debug = 2 };

/// Verbosity comes from EDGECAST_LOG: "quiet" (default), "info", "debug".
inline Level level() {
  static const Level lvl = [] {
    const char* env = std::getenv("EDGECAST_LOG");
    if (env == nullptr) return Level::Quiet;
    const std::string_view v(env);
    if (v == "debug") return Level::Debug;
    if (v == "info") return Level::Info;
    return Level::Quiet;
  }();
  return lvl;
}

inline void info(const std::string& msg) {
  if (level() >= Level::Info) std::cerr << "[edgecast] " << msg << "\n";
}

inline void debug(const std::string& msg) {
  if (level() >= Level::Debug) std::cerr << "[edgecast:debug] " << msg << "\n";
}

}  // namespace edgecast::log
