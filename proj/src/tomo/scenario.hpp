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

#include <memory>
#include <string>
#include <vector>

#include "tomo/error.hpp"

namespace tomo {

// A scenario file:
//   {"schema": "tomo-scenario/1", "kind": "...", "params": {...},
//    "output": {"path": "...", "format": "csv" | "json"}}
// Loading parses and validates everything, so execute() starts from a state
// that is known to be well formed.
class Scenario {
 public:
  struct Outcome {
    int status = 0;  // process exit code
    std::string summary;
    std::vector<std::string> paths;
  };

  // ErrorKind::Parse for malformed JSON or schema violations, ErrorKind::Validation
  // for physically invalid inputs.
  static Scenario load(const std::string& path);
  static Scenario parse(const std::string& text, const std::string& base_dir);

  Scenario(Scenario&&) noexcept;
  Scenario& operator=(Scenario&&) noexcept;
  ~Scenario();

  const std::string& kind() const;

  // Overrides a scalar field under "params" (dotted keys reach nested
  // objects). The value is read as JSON when possible, else as a string.
  void set(const std::string& key, const std::string& value);
  // Empty arguments keep the current setting.
  void set_output(const std::string& path, const std::string& format);

  // Computes every output in memory, then writes them atomically.
  Outcome execute() const;

 private:
  struct Impl;
  explicit Scenario(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

int exit_code(ErrorKind kind);

}  // namespace tomo
