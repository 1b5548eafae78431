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

#ifndef COLQ_ERROR_HPP
#define COLQ_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace colq {

enum class ErrorKind {
  LoopArrow,
  ColourOutOfRange,
  MonochromaticityViolation,
  SkewConflict,
  VertexOutOfRange,
  BadSize,
  NotSimple,
  MissingArrow,
  NotACycle,
  Disconnected,
  CapExceeded,
  BudgetExceeded,
  SizeMismatch,
  IllDefinedMutation,
  Parse,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArrow: return "LoopArrow";
    case ErrorKind::ColourOutOfRange: return "ColourOutOfRange";
    case ErrorKind::MonochromaticityViolation: return "MonochromaticityViolation";
    case ErrorKind::SkewConflict: return "SkewConflict";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::MissingArrow: return "MissingArrow";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::IllDefinedMutation: return "IllDefinedMutation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every domain failure in colq is reported as a QuiverError carrying its kind.
class QuiverError : public std::runtime_error {
 public:
  QuiverError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace colq

#endif  // COLQ_ERROR_HPP
