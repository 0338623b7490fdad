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

#ifndef RELPROFIT_LINALG_HPP_
#define RELPROFIT_LINALG_HPP_

#include <Eigen/Dense>

namespace relprofit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Systems with |det| below this are rejected as singular.
inline constexpr double kSingularityThreshold = 1e-12;

// Solves A x = rhs by LU with partial pivoting. Throws SingularSystem when
// |det A| < kSingularityThreshold. `what` names the system in the message.
Vector solve_checked(const Matrix& A, const Vector& rhs, const char* what);

// Inverse of A under the same singularity rule.
Matrix invert_checked(const Matrix& A, const char* what);

}  // namespace relprofit

#endif  // RELPROFIT_LINALG_HPP_
