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

#include "relprofit/params_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "relprofit/error.hpp"

namespace relprofit {

MarketParams params_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed parameter JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidArgument("parameter JSON must be an object");
  for (const char* key : {"n", "a", "b", "costs"}) {
    if (!doc.contains(key)) throw InvalidArgument(std::string("parameter JSON lacks \"") + key + "\"");
  }
  MarketParams params;
  try {
    if (!doc["n"].is_number_integer()) throw InvalidArgument("\"n\" must be an integer");
    params.n = doc["n"].get<int>();
    params.a = doc["a"].get<double>();
    params.b = doc["b"].get<double>();
    params.costs = doc["costs"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("parameter JSON has a mistyped field: ") + e.what());
  }
  validate(params);
  return params;
}

MarketParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot read parameter file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return params_from_json(buf.str());
}

std::string params_to_json(const MarketParams& params) {
  nlohmann::json doc{{"n", params.n}, {"a", params.a}, {"b", params.b}, {"costs", params.costs}};
  return doc.dump();
}

}  // namespace relprofit
