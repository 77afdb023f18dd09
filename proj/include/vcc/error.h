// Copyright 2026 The vcc Authors
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

#ifndef VCC_ERROR_H_
#define VCC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcc {

enum class ErrorKind {
  kMalformedSyllable,
  kSymbolNotInAlphabet,
  kMalformedInput,
  kDuplicateGlyph,
  kDanglingRedirect,
  kPronunciationClash,
  kNoActiveRadical,
  kEmptyInventory,
  kFallbackDataMissing,
  kUnresolvableCollision,
  kFormatVersionMismatch,
  kIntegrityFailure,
  kUnknownCharacter,
  kUnknownToken,
  kMalformedToken,
  kMalformedScoreMatrix,
  kIo,
};

std::string_view error_kind_name(ErrorKind kind);

// Every recoverable failure in the library is reported as an Error. what()
// is "<KindName>: <detail>", which the CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace vcc

#endif  // VCC_ERROR_H_
