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

#ifndef RELPROFIT_TOOLS_FORMAT_HPP_
#define RELPROFIT_TOOLS_FORMAT_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace relprofit::cli {

// 9 significant digits, for human-readable tables.
std::string fmt9(double v);

// Shortest representation that round-trips, for CSV.
std::string fmt_exact(double v);

// Left-aligned, space-separated columns.
class Table {
 public:
  explicit Table(std::vector<std::string> header);
  void add(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Writes `contents` to `path` in one go. Throws std::ios_base::failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace relprofit::cli

#endif  // RELPROFIT_TOOLS_FORMAT_HPP_
