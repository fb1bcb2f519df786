/*
 * netstab - exact stability analysis for mutual-consent network formation.
 *
 * C interface over the C++ core: opaque model handles, status codes, and
 * JSON strings for structured results. Every char* the library hands out
 * must be released with ns_string_free.
 */
#ifndef NETSTAB_H
#define NETSTAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ns_model ns_model;

typedef enum ns_status {
  NS_OK = 0,
  /* A verification ran to completion and found a violated relation; the
     report JSON carries the witnesses. Not a tool failure. */
  NS_VERDICT_VIOLATED = 1,
  NS_ERR_PARSE = 2,
  NS_ERR_PRECONDITION = 3,
  NS_ERR_CAPACITY = 4,
  NS_ERR_INVALID_ARGUMENT = 5,
  NS_ERR_INTERNAL = 6
} ns_status;

const char* ns_status_name(ns_status status);
void ns_string_free(char* text);

/* Model files: JSON with player count, payoff table and optional cost
   matrices. max_players <= 0 selects the default desk-scale cap (6). */
ns_status ns_model_parse(const char* json_text, int max_players,
                         ns_model** out_model, char** out_error);

/* The Walrasian trade model on n players with uniform link cost `cost`
   ("p/q" or integer). precision may be NULL for the default denominator
   bound of 10^12 used when rounding the irrational trade surpluses. */
ns_status ns_model_trade(int players, const char* cost, const char* precision,
                         ns_model** out_model, char** out_error);

void ns_model_free(ns_model* model);
int ns_model_players(const ns_model* model);
ns_status ns_model_emit(const ns_model* model, char** out_json);

/* concepts_csv: comma-separated concept tokens, or NULL for the default
   set. jobs: worker threads for the per-network classification. */
ns_status ns_classify(const ns_model* model, const char* concepts_csv,
                      int jobs, int as_text, char** out_result,
                      char** out_error);

/* theorem_id: see the verify documentation; returns NS_OK when every
   asserted relation holds, NS_VERDICT_VIOLATED otherwise. */
ns_status ns_verify(const ns_model* model, const char* theorem_id,
                    char** out_json, char** out_error);

ns_status ns_verify_random(const char* theorem_id, int instances, int players,
                           uint64_t seed, char** out_json, char** out_error);

/* variant: "myerson", "two-sided" or "one-sided". */
ns_status ns_equilibria(const ns_model* model, const char* variant,
                        char** out_json, char** out_error);

ns_status ns_potentials(const ns_model* model, char** out_json,
                        char** out_error);

/* Correlation device over the Myerson signalling game of the model; device
   profiles are per-player signal rows. */
ns_status ns_correlated_model(const ns_model* model, const char* device_json,
                              char** out_json, char** out_error);

/* Correlation device over a strategic-form game file; device profiles are
   strategy indices or labels. */
ns_status ns_correlated_game(const char* game_json, const char* device_json,
                             char** out_json, char** out_error);

/* DOT graphs, one per network, returned as {"files":[{"name","content"}]}. */
ns_status ns_export_dot(const ns_model* model, const char* concepts_csv,
                        char** out_json, char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* NETSTAB_H */
