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
#include "hypk/hypk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hypk/assembly.hpp"
#include "hypk/catalog.hpp"
#include "hypk/coxeter.hpp"
#include "hypk/error.hpp"
#include "hypk/report.hpp"

struct hypk_diagram {
  hypk::CoxeterDiagram diagram;
};

namespace {

thread_local std::string last_error;

hypk_status to_status(hypk::ErrorCode c) { return static_cast<hypk_status>(static_cast<int>(c)); }

template <typename Fn>
hypk_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return HYPK_OK;
  } catch (const hypk::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HYPK_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HYPK_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) hypk::fail(hypk::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

hypk::OutputFormat to_format(hypk_format f) {
  switch (f) {
    case HYPK_FORMAT_TEXT: return hypk::OutputFormat::Text;
    case HYPK_FORMAT_JSON: return hypk::OutputFormat::Json;
    case HYPK_FORMAT_CSV: return hypk::OutputFormat::Csv;
  }
  hypk::fail(hypk::ErrorCode::InvalidArgument, "unknown output format");
}

hypk_kvalue to_c(const hypk::KValue& v) {
  hypk_kvalue out{};
  out.free_rank = v.free_rank;
  for (auto d : v.torsion) {
    if (d == 2)
      ++out.z2_count;
    else if (d == 4)
      ++out.z4_count;
    else
      ++out.other_torsion;
  }
  out.inf_z2 = v.inf_z2;
  out.nil0 = v.nil0;
  out.nil1 = v.nil1;
  return out;
}

}  // namespace

extern "C" {

const char* hypk_version(void) { return "0.1.0"; }

const char* hypk_status_name(hypk_status status) {
  if (status == HYPK_OK) return "Ok";
  if (status < HYPK_UNKNOWN_NAME || status > HYPK_INTERNAL) return "Unknown";
  return hypk::error_name(static_cast<hypk::ErrorCode>(status)).data();
}

const char* hypk_last_error(void) { return last_error.c_str(); }

void hypk_string_free(char* s) { std::free(s); }

hypk_status hypk_diagram_parse(const char* text, hypk_diagram** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new hypk_diagram{hypk::parse_diagram(text)};
  });
}

hypk_status hypk_diagram_from_file(const char* path, hypk_diagram** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hypk_diagram{hypk::read_diagram_file(path)};
  });
}

void hypk_diagram_free(hypk_diagram* d) { delete d; }

hypk_status hypk_diagram_name(const hypk_diagram* d, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    *out = dup_string(hypk::display_name(d->diagram));
  });
}

hypk_status hypk_diagram_matrix(const hypk_diagram* d, int out[16]) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    const auto& e = d->diagram.matrix.entries();
    std::copy(e.begin(), e.end(), out);
  });
}

hypk_status hypk_diagram_ideal_vertices(const hypk_diagram* d, int* out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    *out = hypk::vertex_profile(d->diagram).ideal_count;
  });
}

hypk_status hypk_kgroups(const hypk_diagram* d, hypk_kvalue out[4]) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    hypk::KGroups k = hypk::assemble(d->diagram);
    out[HYPK_WH] = to_c(k[hypk::kDegreeWh]);
    out[HYPK_K0] = to_c(k[hypk::kDegreeK0]);
    out[HYPK_KM1] = to_c(k[hypk::kDegreeKm1]);
    out[HYPK_KBELOW] = to_c(k[hypk::kDegreeBelow]);
  });
}

hypk_status hypk_compute(const hypk_diagram* d, hypk_format fmt, int normalized, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    const auto f = to_format(fmt);
    *out = dup_string(hypk::format_kgroups(hypk::display_name(d->diagram), hypk::assemble(d->diagram), f,
                                           normalized != 0));
  });
}

hypk_status hypk_stabilizers(const hypk_diagram* d, hypk_format fmt, char** out) {
  return guarded([&] {
    require(d, "diagram");
    require(out, "out");
    *out = dup_string(hypk::format_stabilizers(d->diagram, to_format(fmt)));
  });
}

hypk_status hypk_oracle(const char* type, char** out) {
  return guarded([&] {
    require(type, "type");
    require(out, "out");
    *out = dup_string(hypk::format_oracle(hypk::FiniteGroupType::parse(type)));
  });
}

hypk_status hypk_verify_all(int threads, char** report, int* passed, int* total) {
  return guarded([&] {
    hypk::VerifyOptions opts;
    opts.threads = threads;
    const hypk::VerifyReport r = hypk::verify_all(opts);
    if (passed) *passed = r.passed;
    if (total) *total = r.total;
    if (report) *report = dup_string(hypk::format_verify(r));
  });
}

hypk_status hypk_table(int which, int recomputed, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(hypk::format_table(which, recomputed != 0));
  });
}

hypk_status hypk_list(char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup_string(hypk::format_list());
  });
}

}  // extern "C"
