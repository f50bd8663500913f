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

#ifndef GAMMACAT_RUNNER_HPP
#define GAMMACAT_RUNNER_HPP

#include <string>

#include "gammacat/json_io.hpp"

namespace gammacat::runner {

inline constexpr const char *kVersion = "0.1.0";

// Dispatches a command ("validate", "loss", "coproduct", "nerve", "summing",
// "strata", "gap-locus", "gap-check", "axiom-suite", "export") on a request
// object. Unknown commands raise kind "UsageError"; domain failures raise
// the module error kinds. Output is deterministic for a fixed request.
io::Json run_command(const std::string &command, const io::Json &request);

// String-level entry: returns the serialized report (2-space indentation,
// trailing newline).
std::string run_command_text(const std::string &command,
                             const std::string &request_json);

} // namespace gammacat::runner

#endif
