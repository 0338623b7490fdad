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

#ifndef RELPROFIT_ERROR_HPP_
#define RELPROFIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace relprofit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Market parameters, patterns or strategy vectors that violate their
// invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A linear system whose determinant magnitude falls below the singularity
// threshold.
class SingularSystem : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations, double last_step)
      : Error(what), iterations_(iterations), last_step_(last_step) {}

  int iterations() const { return iterations_; }
  double last_step() const { return last_step_; }

 private:
  int iterations_;
  double last_step_;
};

// Two equilibrium reports computed from different market parameters.
class ParamMismatch : public Error {
 public:
  using Error::Error;
};

// Closed-form fixture evaluated on costs that do not have the fixture's
// symmetry structure.
class CostStructureMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace relprofit

#endif  // RELPROFIT_ERROR_HPP_
