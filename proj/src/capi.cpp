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

#include "gammacat.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gammacat/runner.hpp"

struct gammacat_ctx {
  std::string last_error;
};

namespace {

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gammacat_status status_for_kind(const std::string &kind) {
  if (kind == "UsageError") return GAMMACAT_ERR_USAGE;
  return GAMMACAT_ERR_DOMAIN;
}

void record_error(gammacat_ctx *ctx, const std::string &kind,
                  const std::string &message) {
  if (!ctx) return;
  gammacat::io::Json e;
  e["error"] = gammacat::io::Json{{"kind", kind}, {"message", message}};
  ctx->last_error = e.dump(2) + "\n";
}

} // namespace

extern "C" {

const char *gammacat_version(void) { return gammacat::runner::kVersion; }

gammacat_ctx *gammacat_ctx_new(void) { return new (std::nothrow) gammacat_ctx; }

void gammacat_ctx_free(gammacat_ctx *ctx) { delete ctx; }

gammacat_status gammacat_run(gammacat_ctx *ctx, const char *command,
                             const char *request_json, char **out) {
  if (out) *out = nullptr;
  if (!ctx || !command || !out) {
    record_error(ctx, "UsageError", "null argument");
    return GAMMACAT_ERR_USAGE;
  }
  ctx->last_error.clear();
  try {
    std::string report = gammacat::runner::run_command_text(
        command, request_json ? request_json : "");
    *out = dup_string(report);
    if (!*out) {
      record_error(ctx, "Internal", "allocation failure");
      return GAMMACAT_ERR_INTERNAL;
    }
    return GAMMACAT_OK;
  } catch (const gammacat::Error &e) {
    record_error(ctx, e.kind(), e.what());
    return status_for_kind(e.kind());
  } catch (const std::exception &e) {
    record_error(ctx, "Internal", e.what());
    return GAMMACAT_ERR_INTERNAL;
  }
}

const char *gammacat_last_error(const gammacat_ctx *ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

void gammacat_string_free(char *s) { std::free(s); }

} // extern "C"
