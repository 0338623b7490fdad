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

#ifndef RELPROFIT_PARAMS_JSON_HPP_
#define RELPROFIT_PARAMS_JSON_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "relprofit/market.hpp"

namespace relprofit {

// Parameter document: {"n": int, "a": number, "b": number, "costs": [...]}.
// Throws InvalidArgument on malformed JSON, missing or mistyped fields, or
// values that fail validate().
MarketParams params_from_json(std::string_view text);

// Throws std::ios_base::failure when the file cannot be read.
MarketParams load_params(const std::filesystem::path& path);

std::string params_to_json(const MarketParams& params);

}  // namespace relprofit

#endif  // RELPROFIT_PARAMS_JSON_HPP_
