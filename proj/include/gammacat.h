/* Copyright 2026 The gammacat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the gammacat shared library.
 *
 * All requests and reports are JSON strings; the exposed commands mirror
 * the CLI subcommands (validate, loss, coproduct, nerve, summing, strata,
 * gap-locus, gap-check, axiom-suite, export). A context carries the last
 * error; strings returned through out-parameters are heap-allocated and
 * must be released with gammacat_string_free.
 */

#ifndef GAMMACAT_H
#define GAMMACAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gammacat_status {
  GAMMACAT_OK = 0,
  GAMMACAT_ERR_DOMAIN = 1, /* invalid input or failed invariant */
  GAMMACAT_ERR_USAGE = 2,  /* unknown command or malformed request */
  GAMMACAT_ERR_INTERNAL = 3
} gammacat_status;

typedef struct gammacat_ctx gammacat_ctx;

const char *gammacat_version(void);

gammacat_ctx *gammacat_ctx_new(void);
void gammacat_ctx_free(gammacat_ctx *ctx);

/* Runs a command on a JSON request (NULL means the empty request). On
 * success *out receives the JSON report. On failure *out is left NULL and
 * the error is retrievable from the context. */
gammacat_status gammacat_run(gammacat_ctx *ctx, const char *command,
                             const char *request_json, char **out);

/* JSON object {"error":{"kind":...,"message":...}} of the last failure on
 * this context, or an empty string. Owned by the context. */
const char *gammacat_last_error(const gammacat_ctx *ctx);

void gammacat_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* GAMMACAT_H */
