/* Copyright 2026 The zkace Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the zkace authorization layer. All functions return
 * ZKACE_OK or an error code; zkace_last_error gives a human-readable
 * message for the most recent failure on the context. Output strings are
 * heap-allocated and must be released with zkace_string_free.
 */

#ifndef ZKACE_ZKACE_H_
#define ZKACE_ZKACE_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ZKACE_OK 0
#define ZKACE_ERR_INVALID_ARGUMENT 1 /* bad flag value or parameter */
#define ZKACE_ERR_IO 2               /* file missing or unwritable */
#define ZKACE_ERR_PARSE 3            /* malformed JSON or key blob */
#define ZKACE_ERR_AUTH 4             /* credential rejected at unseal */
#define ZKACE_ERR_VERIFY 5           /* proof did not verify */
#define ZKACE_ERR_REJECTED 6         /* chain rejected the transaction */
#define ZKACE_ERR_STATE 7            /* state corrupt or version mismatch */
#define ZKACE_ERR_INTERNAL 8

typedef struct zkace_ctx zkace_ctx;

zkace_ctx* zkace_ctx_new(void);
void zkace_ctx_free(zkace_ctx* ctx);

const char* zkace_version(void);
/* Message for the last failing call on this context; never NULL. */
const char* zkace_last_error(const zkace_ctx* ctx);
void zkace_string_free(char* s);

/* Replace the default hash parameter table with one loaded from a JSON
 * file (see PoseidonParams serialization). Affects all later calls on
 * this context. */
int zkace_ctx_set_hash_params_file(zkace_ctx* ctx, const char* path);

/* Constraint accounting report for "nonce" or "nullifier" mode. */
int zkace_constraints(zkace_ctx* ctx, const char* mode, char** json_out);

/* Sample a fresh identity root and seal it under the credential.
 * profile is "test" or "production" (key-derivation cost). The root
 * entropy itself is never returned. */
int zkace_identity_new(zkace_ctx* ctx, const uint8_t* credential,
                       size_t credential_len, const char* profile,
                       char** sealed_json_out);

/* Unseal and compute the identity commitment for a domain. salt_hex NULL
 * draws a fresh random salt; the output JSON carries id_com, salt and the
 * domain element. */
int zkace_identity_commit(zkace_ctx* ctx, const char* sealed_json,
                          const uint8_t* credential, size_t credential_len,
                          const char* domain_descriptor, const char* salt_hex,
                          char** commit_json_out);

/* Generate a proving/verifying key pair. backend is "real" or "mock";
 * mode is "nonce" or "nullifier". seed_hex (64 hex chars) makes the setup
 * deterministic and is for tests only; NULL uses OS entropy. */
int zkace_setup(zkace_ctx* ctx, const char* backend, const char* mode,
                const char* seed_hex, const char* prover_key_path,
                const char* verifier_key_path);

/* Prove one authorization. witness_json_out is normally NULL; passing a
 * non-NULL pointer dumps the private witness (including the root entropy)
 * and exists only for test-vector generation. */
int zkace_prove(zkace_ctx* ctx, const char* prover_key_path,
                const char* sealed_json, const uint8_t* credential,
                size_t credential_len, const char* salt_hex,
                const char* domain_descriptor, uint64_t alg_id,
                uint64_t index, uint64_t nonce, const uint8_t* payload,
                size_t payload_len, char** bundle_json_out,
                char** witness_json_out);

/* Verify the proof inside a bundle against the verifying key. Returns
 * ZKACE_OK on acceptance, ZKACE_ERR_VERIFY on rejection. */
int zkace_verify(zkace_ctx* ctx, const char* verifier_key_path,
                 const char* bundle_json);

/* Create a fresh chain state file. production nonzero forbids the mock
 * backend. */
int zkace_chain_init(zkace_ctx* ctx, const char* mode,
                     const char* domain_descriptor,
                     const char* verifier_key_path, int production,
                     const char* state_path);

/* Register an identity commitment (hex field element). */
int zkace_chain_register(zkace_ctx* ctx, const char* state_path,
                         const char* id_com_hex);

/* Submit one bundle through the validation pipeline and persist the
 * updated state. result_json_out always reports {accepted, reason};
 * returns ZKACE_ERR_REJECTED when the transaction is not accepted. */
int zkace_chain_submit(zkace_ctx* ctx, const char* state_path,
                       const char* bundle_json, char** result_json_out);

/* Submit a JSON array of bundles as one batch. Always returns ZKACE_OK
 * when the batch was processed; per-item outcomes are in the result
 * array. */
int zkace_chain_batch(zkace_ctx* ctx, const char* state_path,
                      const char* bundles_json, char** results_json_out);

int zkace_chain_status(zkace_ctx* ctx, const char* state_path,
                       char** status_json_out);

/* Run an adversarial game: "auth", "replay", "subst", "domain" or "all".
 * Emits a report (JSON object, or array for "all"). Returns
 * ZKACE_ERR_VERIFY if any adversary strategy won or a control failed. */
int zkace_games_run(zkace_ctx* ctx, const char* game, uint64_t trials,
                    const char* mode, const char* seed_hex,
                    char** report_json_out);

/* Data-accounting comparison. pqc_name selects a signature profile
 * ("ml-dsa-44", ...); zk_profile is "measured" (real proof size) or
 * "groth16-class" (128 B lower bound). format is "json" or "table". */
int zkace_accounting(zkace_ctx* ctx, const char* pqc_name,
                     const char* zk_profile, int amortize_public_key,
                     const char* format, char** out);

/* Benchmark suite. config_json may override {iterations, batch_size,
 * pipeline_txs, mode, include_setup, parallel, seed_hex}; NULL runs
 * defaults.
 * format is "json" or "table". */
int zkace_bench(zkace_ctx* ctx, const char* config_json, const char* format,
                char** out);

#ifdef __cplusplus
}
#endif

#endif /* ZKACE_ZKACE_H_ */
