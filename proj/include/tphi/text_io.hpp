// Copyright 2026 The Authors.
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

// Small tokenizing helpers shared by the file-format readers.

#ifndef TPHI_TEXT_IO_HPP_
#define TPHI_TEXT_IO_HPP_

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace tphi {

std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitWhitespace(std::string_view s);
std::vector<std::string_view> Split(std::string_view s, char sep);
std::int64_t ParseInt(std::string_view s);

// Lines with comments ('#' to end of line) removed and surrounding blanks
// trimmed; empty lines are dropped. Keeps 1-based line numbers for messages.
struct SourceLine {
  int number;
  std::string text;
};
std::vector<SourceLine> ReadContentLines(std::istream& in);

}  // namespace tphi

#endif  // TPHI_TEXT_IO_HPP_
