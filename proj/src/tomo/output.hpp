// Copyright 2026 The Tomo Authors
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


#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tomo {

// 17 significant digits, round-trip exact.
std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  const std::string& str() const { return text_; }

 private:
  std::size_t width_;
  std::string text_;
};

struct OutputFile {
  std::string path;
  std::string contents;
};

// Writes every file to a temporary sibling first and renames them into place
// only after all writes succeeded. Throws ErrorKind::Internal on I/O failure.
void write_atomic(const std::vector<OutputFile>& files);

}  // namespace tomo
