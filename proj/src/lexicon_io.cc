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

#include "vcc/lexicon_io.h"

#include <openssl/evp.h>

#include <iterator>

#include "vcc/error.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

constexpr std::string_view kChecksumPrefix = "sha256:";

Error integrity(const std::string& detail) {
  return Error(ErrorKind::kIntegrityFailure, detail);
}

// Splits off the next '\n'-terminated line. Returns false at end of input or
// when the remaining text has no terminator.
bool take_line(std::string_view* text, std::string_view* line) {
  const size_t nl = text->find('\n');
  if (nl == std::string_view::npos) return false;
  *line = text->substr(0, nl);
  text->remove_prefix(nl + 1);
  return true;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::kIo, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

std::string serialize_lexicon(const Lexicon& lexicon) {
  std::string body;
  for (const auto& [glyph, form] : lexicon.forward()) {
    body += glyph;
    body += '\t';
    body += form.rendered();
    body += '\n';
  }
  std::string out(Lexicon::kFormatVersion);
  out += '\n';
  out += kChecksumPrefix;
  out += sha256_hex(body);
  out += '\n';
  out += body;
  return out;
}

void save_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out << serialize_lexicon(lexicon);
  if (!out) throw Error(ErrorKind::kIo, "failed to write lexicon");
}

Lexicon parse_lexicon(std::string_view text) {
  std::string_view line;
  if (!take_line(&text, &line)) throw integrity("missing format header");
  if (line != Lexicon::kFormatVersion) {
    throw Error(ErrorKind::kFormatVersionMismatch,
                "expected \"" + std::string(Lexicon::kFormatVersion) +
                    "\", found \"" + std::string(line) + "\"");
  }
  if (!take_line(&text, &line)) throw integrity("missing checksum line");
  if (!line.starts_with(kChecksumPrefix)) {
    throw integrity("malformed checksum line");
  }
  const std::string_view expected = line.substr(kChecksumPrefix.size());
  const std::string actual = sha256_hex(text);
  if (expected != actual) {
    throw integrity("checksum mismatch (file says " + std::string(expected) +
                    ", content hashes to " + actual + ")");
  }

  Lexicon::Forward forward;
  size_t line_no = 2;
  std::string previous;
  while (!text.empty()) {
    ++line_no;
    if (!take_line(&text, &line)) {
      throw integrity("line " + std::to_string(line_no) + " is unterminated");
    }
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw integrity("line " + std::to_string(line_no) + " has no tab");
    }
    const std::string glyph(line.substr(0, tab));
    const std::string_view rendered = line.substr(tab + 1);
    try {
      if (glyph.empty() || utf8::length(glyph) != 1) {
        throw integrity("not a single character");
      }
    } catch (const Error& e) {
      throw integrity("line " + std::to_string(line_no) + ": bad glyph: " +
                      e.detail());
    }
    if (!forward.empty() && glyph <= previous) {
      throw integrity("line " + std::to_string(line_no) + ": glyph " + glyph +
                      (glyph == previous ? " repeated" : " out of order"));
    }
    std::optional<VirtualForm> form;
    try {
      form = VirtualForm::parse(rendered);
    } catch (const Error& e) {
      throw integrity("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (form->rendered() != rendered) {
      throw integrity("line " + std::to_string(line_no) + ": \"" +
                      std::string(rendered) + "\" is not canonical");
    }
    forward.emplace(glyph, std::move(*form));
    previous = glyph;
  }
  return Lexicon(std::move(forward));
}

Lexicon load_lexicon(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "failed to read lexicon");
  return parse_lexicon(text);
}

}  // namespace vcc
