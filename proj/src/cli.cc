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

#include "vcc/cli.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "vcc/codec.h"
#include "vcc/codepage.h"
#include "vcc/error.h"
#include "vcc/lexicon.h"
#include "vcc/lexicon_io.h"
#include "vcc/radicals.h"
#include "vcc/report.h"
#include "vcc/utf8.h"

namespace vcc {
namespace {

struct Config {
  std::string radicals_path;
  std::string chars_path;
  std::string words_path;
  std::string lexicon_path;
  std::string input_path;
  UnknownPolicy on_unknown = UnknownPolicy::kError;
  bool compress = false;
  bool bytes = false;
  bool json = false;
};

// Thrown for option combinations CLI11 cannot express.
struct UsageError {
  std::string message;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot open " + path);
  return f;
}

RadicalTable read_radicals(const Config& c, RadicalTable::Validation v) {
  std::ifstream f = open_input(c.radicals_path);
  return load_radical_table(f, c.radicals_path, v);
}

Lexicon compile_from(const Config& c, const RadicalTable& radicals) {
  std::ifstream f = open_input(c.chars_path);
  const std::vector<CharacterEntry> chars = load_character_table(f, c.chars_path);
  Lexicon lex = compile_lexicon(chars, radicals);
  return c.compress ? compress_lexicon(lex) : lex;
}

// A lexicon file when --lexicon is given, otherwise compiled from the tables.
Lexicon obtain_lexicon(const Config& c) {
  if (!c.lexicon_path.empty()) {
    std::ifstream f = open_input(c.lexicon_path);
    return load_lexicon(f);
  }
  if (c.radicals_path.empty() || c.chars_path.empty()) {
    throw UsageError{"need --lexicon, or both --radicals and --chars"};
  }
  return compile_from(c, read_radicals(c, RadicalTable::Validation::kStrict));
}

WordList obtain_words(const Config& c) {
  if (c.words_path.empty()) return {};
  std::ifstream f = open_input(c.words_path);
  return load_word_list(f, c.words_path);
}

std::string read_all(std::istream& in) {
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

void write_bytes(std::ostream& out, const std::string& text) {
  const std::vector<uint8_t> bytes = Alphabet::vcc8().encode_bytes(text);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

std::string with_line(const Error& e, size_t line) {
  return std::string(e.what()) + " (line " + std::to_string(line) + ")";
}

int cmd_compile(const Config& c, std::ostream& out, std::ostream& err) {
  if (c.radicals_path.empty() || c.chars_path.empty()) {
    throw UsageError{"compile needs --radicals and --chars"};
  }
  const Lexicon lex =
      compile_from(c, read_radicals(c, RadicalTable::Validation::kStrict));
  const LexiconAudit audit = audit_lexicon(lex);
  std::ostream* report = &out;
  if (c.lexicon_path.empty()) {
    save_lexicon(lex, out);
    report = &err;
  } else {
    std::ofstream f(c.lexicon_path, std::ios::binary);
    if (!f) throw Error(ErrorKind::kIo, "cannot write " + c.lexicon_path);
    save_lexicon(lex, f);
  }
  *report << "entries: " << lex.size() << "\n"
          << "bare: " << audit.bare << "\n"
          << "prefixed: " << audit.prefixed << "\n"
          << "fallback: " << audit.fallback << "\n"
          << "max-group-size: " << audit.max_group_size << "\n"
          << "passes: " << lex.report().passes << "\n"
          << "residual-collisions: " << audit.residual_collisions.size() << "\n"
          << "injectivity: " << (audit.injective() ? "PASS" : "FAIL") << "\n";
  return audit.injective() ? kExitOk : kExitData;
}

int cmd_encode(const Config& c, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const Lexicon lex = obtain_lexicon(c);
  const WordList words = obtain_words(c);
  size_t unknown = 0;
  std::string line;
  for (size_t n = 1; std::getline(in, line); ++n) {
    EncodeResult r;
    try {
      r = encode_text(line, lex, words, c.on_unknown);
    } catch (const Error& e) {
      err << "error: " << with_line(e, n) << "\n";
      return kExitData;
    }
    unknown += r.unknown;
    r.text += '\n';
    if (c.bytes) {
      write_bytes(out, r.text);
    } else {
      out << r.text;
    }
  }
  if (unknown > 0) err << "warning: " << unknown << " unknown characters marked\n";
  return kExitOk;
}

int cmd_decode(const Config& c, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const Lexicon lex = obtain_lexicon(c);
  std::istringstream from_bytes;
  std::istream* src = &in;
  if (c.bytes) {
    const std::string raw = read_all(in);
    from_bytes.str(Alphabet::vcc8().decode_bytes(std::span(
        reinterpret_cast<const uint8_t*>(raw.data()), raw.size())));
    src = &from_bytes;
  }
  std::string line;
  for (size_t n = 1; std::getline(*src, line); ++n) {
    try {
      out << decode_text(line, lex) << "\n";
    } catch (const Error& e) {
      err << "error: " << with_line(e, n) << "\n";
      return kExitData;
    }
  }
  return kExitOk;
}

int cmd_audit(const Config& c, std::ostream& out) {
  bool pass = true;
  if (!c.radicals_path.empty()) {
    const RadicalTable radicals =
        read_radicals(c, RadicalTable::Validation::kReportOnly);
    const RadicalAudit audit = audit_radicals(radicals);
    out << audit.to_text();
    pass = pass && audit.pass;
    if (!c.chars_path.empty() && audit.pass) {
      const LexiconAudit lex_audit = audit_lexicon(compile_from(c, radicals));
      out << lex_audit.to_text();
      pass = pass && lex_audit.injective();
    }
  } else if (!c.lexicon_path.empty()) {
    std::ifstream f = open_input(c.lexicon_path);
    const LexiconAudit audit = audit_lexicon(load_lexicon(f));
    out << audit.to_text();
    pass = audit.injective();
  } else {
    throw UsageError{"audit needs --radicals or --lexicon"};
  }
  return pass ? kExitOk : kExitData;
}

int cmd_stats(const Config& c, std::istream& in, std::ostream& out) {
  const Lexicon lex = obtain_lexicon(c);
  const WordList words = obtain_words(c);
  std::ifstream file;
  std::istream* src = &in;
  if (!c.input_path.empty()) {
    file = open_input(c.input_path);
    src = &file;
  }
  CorpusStats total;
  std::string line;
  bool first = true;
  while (std::getline(*src, line)) {
    if (!first) {
      CorpusStats newline;  // the line break passes through as one symbol
      newline.characters = newline.encoded_symbols = newline.encoded_bytes = 1;
      total += newline;
    }
    total += corpus_stats(line, lex, words);
    first = false;
  }
  out << (c.json ? total.to_json() : total.to_text());
  return kExitOk;
}

int cmd_score(const Config& c, std::istream& in, std::ostream& out) {
  ScoreMatrix m;
  if (c.input_path.empty()) {
    m = load_score_matrix(in, "stdin");
  } else {
    std::ifstream f = open_input(c.input_path);
    m = load_score_matrix(f, c.input_path);
  }
  for (const auto& [label, total] : total_scores(m)) {
    out << label << " " << total << "\n";
  }
  out << "best: " << best_scoring(m) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Chinese text to virtual character script", "vcc"};
  app.require_subcommand(1);
  Config c;

  auto add_tables = [&](CLI::App* sub) {
    sub->add_option("--radicals", c.radicals_path, "radical table (TSV)");
    sub->add_option("--chars", c.chars_path, "character table (TSV)");
    sub->add_flag("--compress", c.compress, "abbreviate finals and shorten radicals");
  };
  auto add_lexicon = [&](CLI::App* sub) {
    sub->add_option("--lexicon", c.lexicon_path, "compiled lexicon file");
  };
  const std::map<std::string, UnknownPolicy> policies = {
      {"error", UnknownPolicy::kError}, {"mark", UnknownPolicy::kMark}};

  CLI::App* compile = app.add_subcommand("compile", "compile a lexicon");
  add_tables(compile);
  compile->add_option("--lexicon", c.lexicon_path,
                      "output file (default: standard output)");

  CLI::App* encode = app.add_subcommand("encode", "Chinese text to virtual script");
  add_tables(encode);
  add_lexicon(encode);
  encode->add_option("--words", c.words_path, "word list (TSV)");
  encode->add_option("--on-unknown", c.on_unknown, "error or mark")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  encode->add_flag("--bytes", c.bytes, "write VCC-8 bytes");

  CLI::App* decode = app.add_subcommand("decode", "virtual script to Chinese text");
  add_tables(decode);
  add_lexicon(decode);
  decode->add_flag("--bytes", c.bytes, "read VCC-8 bytes");

  CLI::App* audit = app.add_subcommand("audit", "radical and lexicon audits");
  add_tables(audit);
  add_lexicon(audit);

  CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
  add_tables(stats);
  add_lexicon(stats);
  stats->add_option("--words", c.words_path, "word list (TSV)");
  stats->add_option("input", c.input_path, "text file (default: standard input)");
  stats->add_flag("--json", c.json, "print JSON");

  CLI::App* score = app.add_subcommand("score", "total a comparison score matrix");
  score->add_option("matrix", c.input_path, "score TSV (default: standard input)");

  CLI::App* codepage = app.add_subcommand("codepage", "print the VCC-8 table");

  std::vector<std::string> argv_store = {"vcc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile) return cmd_compile(c, out, err);
    if (*encode) return cmd_encode(c, in, out, err);
    if (*decode) return cmd_decode(c, in, out, err);
    if (*audit) return cmd_audit(c, out);
    if (*stats) return cmd_stats(c, in, out);
    if (*score) return cmd_score(c, in, out);
    if (*codepage) {
      out << Alphabet::vcc8().to_tsv();
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace vcc
