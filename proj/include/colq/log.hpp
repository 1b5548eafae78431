// Copyright 2026 The colq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef COLQ_LOG_HPP
#define COLQ_LOG_HPP

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>

namespace colq::log {

enum class Level { Debug = 0, Info = 1, Warn = 2, Error = 3, Off = 4 };

/// Level from COLQ_LOG (debug, info, warn, error, off); warn when unset.
inline Level level_from_env() {
  const char* raw = std::getenv("COLQ_LOG");
  if (raw == nullptr) return Level::Warn;
  const std::string_view v(raw);
  if (v == "debug") return Level::Debug;
  if (v == "info") return Level::Info;
  if (v == "error") return Level::Error;
  if (v == "off") return Level::Off;
  return Level::Warn;
}

inline Level& threshold() {
  static Level level = level_from_env();
  return level;
}

inline void write(Level lvl, std::string_view msg) {
  if (lvl < threshold()) return;
  static std::mutex mu;
  static constexpr std::string_view kNames[] = {"debug", "info", "warn", "error"};
  const std::lock_guard<std::mutex> lock(mu);
  std::cerr << "colq " << kNames[static_cast<int>(lvl)] << ": " << msg << '\n';
}

inline void debug(std::string_view msg) { write(Level::Debug, msg); }
inline void info(std::string_view msg) { write(Level::Info, msg); }
inline void warn(std::string_view msg) { write(Level::Warn, msg); }
inline void error(std::string_view msg) { write(Level::Error, msg); }

}  // namespace colq::log

#endif  // COLQ_LOG_HPP
