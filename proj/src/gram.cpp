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
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hypk/coxeter.hpp"
#include "hypk/error.hpp"

namespace hypk {

GramReport gram_check(const SpecialSubgroup& sub) {
  const CoxeterMatrix& m = sub.submatrix;
  const int n = m.rank();
  if (n > 3) fail(ErrorCode::InvalidArgument, "gram_check handles rank <= 3");
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = i == j ? 1.0 : -std::cos(std::numbers::pi / m(i, j));

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
  GramReport report{GramSign::PositiveDefinite, 0, {}};
  bool negative = false;
  for (int i = 0; i < n; ++i) {
    const double ev = solver.eigenvalues()(i);
    report.eigenvalues.push_back(ev);
    if (std::abs(ev) <= kGramTolerance)
      ++report.zero_eigenvalues;
    else if (ev < 0)
      negative = true;
  }
  if (negative)
    report.sign = GramSign::Indefinite;
  else if (report.zero_eigenvalues > 0)
    report.sign = GramSign::Semidefinite;

  if (n == 3 && report.zero_eigenvalues > 0) {
    try {
      if (classify_rank3(sub).spherical())
        fail(ErrorCode::ToleranceAmbiguity, "near-zero Gram eigenvalue for a spherical subgroup");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnclassifiableRank3) throw;
    }
  }
  return report;
}

}  // namespace hypk
