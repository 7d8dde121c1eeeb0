#ifndef MOTION_SEMANTICS_H
#define MOTION_SEMANTICS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MsFormat {
  // Line records: `mobile`, `bind` lines, then one line per assignment.
  MS_FORMAT_RECORDS = 0,
  // The human-readable explanation, records included.
  MS_FORMAT_TEXT = 1,
} MsFormat;

// Result of a call. Values 0 to 8 match the `motion` CLI exit codes.
typedef enum MsStatus {
  MS_STATUS_OK = 0,
  // Lint findings.
  MS_STATUS_FINDINGS = 1,
  // Null pointer, invalid UTF-8 or an unknown language tag.
  MS_STATUS_INVALID_ARGUMENT = 2,
  MS_STATUS_UNKNOWN_LEMMA = 3,
  MS_STATUS_NOT_A_COL_VERB = 4,
  MS_STATUS_INFELICITOUS = 5,
  MS_STATUS_AMBIGUOUS_RULE_BASE = 6,
  // Lexicon, rule base or corpus text failed to parse or validate.
  MS_STATUS_LOAD = 7,
  MS_STATUS_IO = 8,
  // The engine panicked; this is a bug.
  MS_STATUS_INTERNAL = 9,
} MsStatus;

typedef enum MsZone {
  MS_ZONE_INSIDE = 0,
  MS_ZONE_CONTACT = 1,
  MS_ZONE_PROXIMAL = 2,
  MS_ZONE_DISTAL = 3,
} MsZone;

// Opaque engine handle: a lexicon plus a rule base.
typedef struct MsEngine MsEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// An engine with the built-in French and English lexicons and rule base.
struct MsEngine *ms_engine_new_default(void);

// An engine with no lexicon entries and no rules; fill it with
// [`ms_engine_load_lexicon`] and [`ms_engine_load_rules`].
struct MsEngine *ms_engine_new(void);

// # Safety
// `engine` must come from one of the constructors and not be used again.
void ms_engine_free(struct MsEngine *engine);

// Adds one language from lexicon text (with a `LANG` line). Fails with
// [`MsStatus::Load`] if the text is invalid or the language is already
// loaded; the engine is unchanged on failure.
//
// # Safety
// `engine` must be a live handle and `source` a NUL-terminated string.
enum MsStatus ms_engine_load_lexicon(struct MsEngine *engine, const char *source);

// Replaces the rule base.
//
// # Safety
// `engine` must be a live handle and `source` a NUL-terminated string.
enum MsStatus ms_engine_load_rules(struct MsEngine *engine, const char *source);

// Composes `verb prep ground` in language `lang` (`"fr"` or `"en"`) and
// stores the result in `*out`.
//
// # Safety
// `engine` must be a live handle, the strings NUL-terminated, and `out` a
// valid pointer. `*out` is only written on success.
enum MsStatus ms_compose(const struct MsEngine *engine,
                         const char *verb,
                         const char *prep,
                         const char *ground,
                         const char *lang,
                         enum MsFormat format,
                         char **out);

// Lints the engine's rule base. Returns [`MsStatus::Findings`] when there
// are gaps or ties; the report is written to `*out` either way.
//
// # Safety
// `engine` must be a live handle and `out` a valid pointer.
enum MsStatus ms_lint(const struct MsEngine *engine, char **out);

// Runs corpus text against the engine. Returns [`MsStatus::Findings`] when
// any case fails or errors; the report is written to `*out` either way.
//
// # Safety
// `engine` must be a live handle, `source` NUL-terminated and `out` valid.
enum MsStatus ms_run_corpus(const struct MsEngine *engine, const char *source, char **out);

// # Safety
// `s` must come from this library and not be used again.
void ms_string_free(char *s);

// Message for the last failed call on this thread, or `""` after a
// successful one. Valid until the next call on the same thread.
const char *ms_last_error_message(void);

// Stable name of a status code.
const char *ms_status_name(enum MsStatus status);

// Number of steps between two zones in the order inside, contact,
// proximal, distal.
uint32_t ms_zone_distance(enum MsZone a, enum MsZone b);

// Version string of the built-in rule base.
const char *ms_seed_rules_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MOTION_SEMANTICS_H */
