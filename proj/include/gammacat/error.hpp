// Copyright 2026 The gammacat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAMMACAT_ERROR_HPP
#define GAMMACAT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace gammacat {

// Domain error with a stable machine-readable kind ("NegativeEntry",
// "ColumnNotStochastic", ...) next to the human-readable message. The kind
// strings are part of the library's reporting contract.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string &message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string &kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string &message) {
  throw Error(std::move(kind), message);
}

} // namespace gammacat

#endif
