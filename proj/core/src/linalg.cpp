// Copyright 2026 The relprofit Authors. All rights reserved.
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

#include "relprofit/linalg.hpp"

#include <cmath>
#include <string>

#include "relprofit/error.hpp"

namespace relprofit {
namespace {

Eigen::PartialPivLU<Matrix> factor(const Matrix& A, const char* what) {
  if (A.rows() != A.cols() || A.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
  Eigen::PartialPivLU<Matrix> lu(A);
  const double det = lu.determinant();
  if (!std::isfinite(det) || std::abs(det) < kSingularityThreshold) {
    throw SingularSystem(std::string(what) + ": |det| = " + std::to_string(std::abs(det)) +
                         " is below the singularity threshold");
  }
  return lu;
}

}  // namespace

Vector solve_checked(const Matrix& A, const Vector& rhs, const char* what) {
  if (rhs.size() != A.rows()) {
    throw InvalidArgument(std::string(what) + ": right-hand side has the wrong length");
  }
  return factor(A, what).solve(rhs);
}

Matrix invert_checked(const Matrix& A, const char* what) {
  return factor(A, what).inverse();
}

}  // namespace relprofit
