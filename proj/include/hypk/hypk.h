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
/* C interface to the hypk library. All functions are thread-safe. Strings
 * returned through `char**` are owned by the caller and released with
 * hypk_string_free. On failure a description is available from
 * hypk_last_error() on the calling thread. */
#ifndef HYPK_H
#define HYPK_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(HYPK_BUILDING_LIBRARY)
#define HYPK_API __declspec(dllexport)
#else
#define HYPK_API __declspec(dllimport)
#endif
#else
#define HYPK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hypk_status {
  HYPK_OK = 0,
  HYPK_UNKNOWN_NAME = 1,
  HYPK_MALFORMED_NOTATION = 2,
  HYPK_ASYMMETRIC_MATRIX = 3,
  HYPK_UNCLASSIFIABLE_RANK3 = 4,
  HYPK_TOLERANCE_AMBIGUITY = 5,
  HYPK_NON_PRIME_P = 6,
  HYPK_UNKNOWN_TYPE = 7,
  HYPK_LOOP_DETECTED = 8,
  HYPK_UNSUPPORTED_STABILIZER = 9,
  HYPK_MISSING_INDUCED_MAP = 10,
  HYPK_NON_COLLAPSING_PAGE = 11,
  HYPK_UNKNOWN_TAG = 12,
  HYPK_IO = 13,
  HYPK_INVALID_ARGUMENT = 14,
  HYPK_INTERNAL = 15
} hypk_status;

typedef enum hypk_format { HYPK_FORMAT_TEXT = 0, HYPK_FORMAT_JSON = 1, HYPK_FORMAT_CSV = 2 } hypk_format;

/* Indices into the array filled by hypk_kgroups. */
enum { HYPK_WH = 0, HYPK_K0 = 1, HYPK_KM1 = 2, HYPK_KBELOW = 3 };

typedef struct hypk_kvalue {
  uint64_t free_rank;
  uint64_t z2_count;
  uint64_t z4_count;
  uint64_t other_torsion;
  uint64_t inf_z2;
  uint64_t nil0;
  uint64_t nil1;
} hypk_kvalue;

typedef struct hypk_diagram hypk_diagram;

HYPK_API const char* hypk_version(void);
/* Stable identifier such as "UnknownName"; "Ok" for HYPK_OK. */
HYPK_API const char* hypk_status_name(hypk_status status);
HYPK_API const char* hypk_last_error(void);
HYPK_API void hypk_string_free(char* s);

/* Registry name, chain "[p,q,r]", cycle "[(p,q,r,s)]" or raw matrix text. */
HYPK_API hypk_status hypk_diagram_parse(const char* text, hypk_diagram** out);
HYPK_API hypk_status hypk_diagram_from_file(const char* path, hypk_diagram** out);
HYPK_API void hypk_diagram_free(hypk_diagram* d);
HYPK_API hypk_status hypk_diagram_name(const hypk_diagram* d, char** out);
HYPK_API hypk_status hypk_diagram_matrix(const hypk_diagram* d, int out[16]);
HYPK_API hypk_status hypk_diagram_ideal_vertices(const hypk_diagram* d, int* out);

HYPK_API hypk_status hypk_kgroups(const hypk_diagram* d, hypk_kvalue out[4]);
HYPK_API hypk_status hypk_compute(const hypk_diagram* d, hypk_format fmt, int normalized, char** out);
HYPK_API hypk_status hypk_stabilizers(const hypk_diagram* d, hypk_format fmt, char** out);

/* Finite group rank data as JSON, e.g. for "D5", "C2xA5". */
HYPK_API hypk_status hypk_oracle(const char* type, char** out);

/* Runs the catalog regression. `report` may be NULL. */
HYPK_API hypk_status hypk_verify_all(int threads, char** report, int* passed, int* total);
HYPK_API hypk_status hypk_table(int which, int recomputed, char** out);
HYPK_API hypk_status hypk_list(char** out);

#ifdef __cplusplus
}
#endif

#endif /* HYPK_H */
