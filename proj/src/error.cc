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

#include "vcc/error.h"

namespace vcc {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedSyllable: return "MalformedSyllable";
    case ErrorKind::kSymbolNotInAlphabet: return "SymbolNotInAlphabet";
    case ErrorKind::kMalformedInput: return "MalformedInput";
    case ErrorKind::kDuplicateGlyph: return "DuplicateGlyph";
    case ErrorKind::kDanglingRedirect: return "DanglingRedirect";
    case ErrorKind::kPronunciationClash: return "PronunciationClash";
    case ErrorKind::kNoActiveRadical: return "NoActiveRadical";
    case ErrorKind::kEmptyInventory: return "EmptyInventory";
    case ErrorKind::kFallbackDataMissing: return "FallbackDataMissing";
    case ErrorKind::kUnresolvableCollision: return "UnresolvableCollision";
    case ErrorKind::kFormatVersionMismatch: return "FormatVersionMismatch";
    case ErrorKind::kIntegrityFailure: return "IntegrityFailure";
    case ErrorKind::kUnknownCharacter: return "UnknownCharacter";
    case ErrorKind::kUnknownToken: return "UnknownToken";
    case ErrorKind::kMalformedToken: return "MalformedToken";
    case ErrorKind::kMalformedScoreMatrix: return "MalformedScoreMatrix";
    case ErrorKind::kIo: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace vcc
