/*
 * Copyright 2026 The hypk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "hypk/hypk.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

struct StringDeleter {
  void operator()(char* s) const { hypk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct DiagramDeleter {
  void operator()(hypk_diagram* d) const { hypk_diagram_free(d); }
};
using OwnedDiagram = std::unique_ptr<hypk_diagram, DiagramDeleter>;

int report(hypk_status s) {
  std::cerr << "error: " << hypk_status_name(s) << ": " << hypk_last_error() << '\n';
  switch (s) {
    case HYPK_UNKNOWN_NAME:
    case HYPK_MALFORMED_NOTATION:
    case HYPK_ASYMMETRIC_MATRIX:
    case HYPK_UNKNOWN_TYPE:
    case HYPK_INVALID_ARGUMENT:
    case HYPK_IO:
      return kUsage;
    default:
      return kComputation;
  }
}

int print(hypk_status s, char* text) {
  OwnedString owned(text);
  if (s != HYPK_OK) return report(s);
  std::fputs(owned.get(), stdout);
  return kOk;
}

hypk_format parse_format(const std::string& f) {
  if (f == "json") return HYPK_FORMAT_JSON;
  if (f == "csv") return HYPK_FORMAT_CSV;
  return HYPK_FORMAT_TEXT;
}

struct Target {
  std::string name;
  std::string matrix;

  void attach(CLI::App* cmd) {
    cmd->add_option("name", name, "Group name, e.g. \"[5,3,5]\" or \"[(3,4,3,5)]\"");
    cmd->add_option("--matrix", matrix, "Read a raw Coxeter matrix file instead of a name");
  }

  // Returns an exit code on failure.
  int open(OwnedDiagram& out) const {
    if (name.empty() == matrix.empty()) {
      std::cerr << "error: give exactly one of a group name or --matrix <path>\n";
      return kUsage;
    }
    hypk_diagram* d = nullptr;
    const hypk_status s = matrix.empty() ? hypk_diagram_parse(name.c_str(), &d)
                                         : hypk_diagram_from_file(matrix.c_str(), &d);
    if (s != HYPK_OK) return report(s);
    out.reset(d);
    return -1;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower algebraic K-theory of hyperbolic 3-simplex reflection groups"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", hypk_version());

  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  Target compute_target;
  bool exact = false;
  auto* compute = app.add_subcommand("compute", "Print Wh, reduced K0, K-1 and K<=-2");
  compute_target.attach(compute);
  compute->add_option("--format", format, "Output format")->check(formats);
  auto* normalized_flag = compute->add_flag("--normalized", "Collapse symbol multiplicities (default)");
  compute->add_flag("--exact", exact, "Keep multiplicities of infZ2, Nil0, Nil1")->excludes(normalized_flag);

  Target stab_target;
  auto* stabilizers = app.add_subcommand("stabilizers", "List type I geodesic stabilizers and cusps");
  stab_target.attach(stabilizers);
  stabilizers->add_option("--format", format, "Output format")->check(formats);

  std::string type;
  auto* oracle = app.add_subcommand("oracle", "Rank data of a finite group as JSON");
  oracle->add_option("type", type, "Finite group, e.g. D5, C2xA5, S4")->required();

  bool all = false;
  int threads = 1;
  auto* verify = app.add_subcommand("verify", "Recompute the catalog and compare with the expected tables");
  verify->add_flag("--all", all, "Check every catalog group")->required();
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 64));

  int which = 0;
  bool recomputed = false;
  auto* tables = app.add_subcommand("tables", "Print one of tables 1 to 7");
  tables->add_option("--which", which, "Table number")->required()->check(CLI::Range(1, 7));
  tables->add_flag("--recomputed", recomputed, "Recompute instead of printing expected values");

  auto* list = app.add_subcommand("list", "List the catalog groups by number of ideal vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (compute->parsed()) {
    OwnedDiagram d;
    if (int rc = compute_target.open(d); rc >= 0) return rc;
    char* out = nullptr;
    const hypk_status s = hypk_compute(d.get(), parse_format(format), exact ? 0 : 1, &out);
    return print(s, out);
  }
  if (stabilizers->parsed()) {
    OwnedDiagram d;
    if (int rc = stab_target.open(d); rc >= 0) return rc;
    char* out = nullptr;
    const hypk_status s = hypk_stabilizers(d.get(), parse_format(format), &out);
    return print(s, out);
  }
  if (oracle->parsed()) {
    char* out = nullptr;
    const hypk_status s = hypk_oracle(type.c_str(), &out);
    return print(s, out);
  }
  if (verify->parsed()) {
    char* out = nullptr;
    int passed = 0, total = 0;
    const hypk_status s = hypk_verify_all(threads, &out, &passed, &total);
    if (int rc = print(s, out); rc != kOk) return rc;
    return passed == total ? kOk : kVerifyFailed;
  }
  if (tables->parsed()) {
    char* out = nullptr;
    const hypk_status s = hypk_table(which, recomputed ? 1 : 0, &out);
    return print(s, out);
  }
  if (list->parsed()) {
    char* out = nullptr;
    const hypk_status s = hypk_list(&out);
    return print(s, out);
  }
  return kUsage;
}
