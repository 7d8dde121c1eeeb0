//! C interface to the motion-semantics engine.
//!
//! An engine is an opaque [`MsEngine`] handle. Every fallible call returns an
//! [`MsStatus`] whose values match the `motion` CLI exit codes; the message
//! for the most recent failure on the calling thread is available from
//! [`ms_last_error_message`]. Strings handed out through `out` parameters are
//! owned by the caller and must be released with [`ms_string_free`].
//!
//! ```c
//! MsEngine *engine = ms_engine_new_default();
//! char *records = NULL;
//! if (ms_compose(engine, "sortir", "dans", "jardin", "fr", MS_FORMAT_RECORDS, &records) == MS_STATUS_OK) {
//!     puts(records);
//!     ms_string_free(records);
//! } else {
//!     fprintf(stderr, "%s\n", ms_last_error_message());
//! }
//! ms_engine_free(engine);
//! ```

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use motion_semantics::corpus::{parse_corpus, run_corpus};
use motion_semantics::lexicon::load_lexicon;
use motion_semantics::{
    explain, lint_rulebase, seed, Engine, Error, ExitCode, Language, Lexicon, MotionComplex, RuleBase, Zone,
};

/// Result of a call. Values 0 to 8 match the `motion` CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MsStatus {
    Ok = 0,
    /// Lint findings.
    Findings = 1,
    /// Null pointer, invalid UTF-8 or an unknown language tag.
    InvalidArgument = 2,
    UnknownLemma = 3,
    NotAColVerb = 4,
    Infelicitous = 5,
    AmbiguousRuleBase = 6,
    /// Lexicon, rule base or corpus text failed to parse or validate.
    Load = 7,
    Io = 8,
    /// The engine panicked; this is a bug.
    Internal = 9,
}

impl From<ExitCode> for MsStatus {
    fn from(code: ExitCode) -> Self {
        match code {
            ExitCode::Ok => MsStatus::Ok,
            ExitCode::Findings => MsStatus::Findings,
            ExitCode::Usage => MsStatus::InvalidArgument,
            ExitCode::UnknownLemma => MsStatus::UnknownLemma,
            ExitCode::NotACoLVerb => MsStatus::NotAColVerb,
            ExitCode::Infelicitous => MsStatus::Infelicitous,
            ExitCode::AmbiguousRuleBase => MsStatus::AmbiguousRuleBase,
            ExitCode::Load => MsStatus::Load,
            ExitCode::Io => MsStatus::Io,
        }
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MsFormat {
    /// Line records: `mobile`, `bind` lines, then one line per assignment.
    Records = 0,
    /// The human-readable explanation, records included.
    Text = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MsZone {
    Inside = 0,
    Contact = 1,
    Proximal = 2,
    Distal = 3,
}

impl From<MsZone> for Zone {
    fn from(z: MsZone) -> Zone {
        match z {
            MsZone::Inside => Zone::Inside,
            MsZone::Contact => Zone::Contact,
            MsZone::Proximal => Zone::Proximal,
            MsZone::Distal => Zone::Distal,
        }
    }
}

/// Opaque engine handle: a lexicon plus a rule base.
pub struct MsEngine {
    engine: Engine,
}

struct Failure {
    status: MsStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: e.exit_code().into(),
            message: format!("{}: {e}", e.name()),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        status: MsStatus::InvalidArgument,
        message: message.into(),
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `f`, records any failure for [`ms_last_error_message`] and turns
/// panics into [`MsStatus::Internal`].
fn guarded(f: impl FnOnce() -> Result<MsStatus, Failure>) -> MsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            set_last_error("");
            status
        }
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("internal error: the engine panicked");
            MsStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(invalid(format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(format!("{what} is not valid UTF-8")))
}

unsafe fn engine_mut<'a>(p: *mut MsEngine) -> Result<&'a mut Engine, Failure> {
    p.as_mut()
        .map(|h| &mut h.engine)
        .ok_or_else(|| invalid("engine is null"))
}

unsafe fn engine_ref<'a>(p: *const MsEngine) -> Result<&'a Engine, Failure> {
    p.as_ref().map(|h| &h.engine).ok_or_else(|| invalid("engine is null"))
}

unsafe fn hand_out(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(invalid("out is null"));
    }
    *out = CString::new(s)
        .map_err(|_| invalid("output contains a NUL byte"))?
        .into_raw();
    Ok(())
}

fn into_handle(engine: Engine) -> *mut MsEngine {
    Box::into_raw(Box::new(MsEngine { engine }))
}

/// An engine with the built-in French and English lexicons and rule base.
#[no_mangle]
pub extern "C" fn ms_engine_new_default() -> *mut MsEngine {
    into_handle(Engine::seed())
}

/// An engine with no lexicon entries and no rules; fill it with
/// [`ms_engine_load_lexicon`] and [`ms_engine_load_rules`].
#[no_mangle]
pub extern "C" fn ms_engine_new() -> *mut MsEngine {
    into_handle(Engine::new(Lexicon::new(), RuleBase::default()))
}

/// # Safety
/// `engine` must come from one of the constructors and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ms_engine_free(engine: *mut MsEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Adds one language from lexicon text (with a `LANG` line). Fails with
/// [`MsStatus::Load`] if the text is invalid or the language is already
/// loaded; the engine is unchanged on failure.
///
/// # Safety
/// `engine` must be a live handle and `source` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ms_engine_load_lexicon(engine: *mut MsEngine, source: *const c_char) -> MsStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        let lexicon = load_lexicon(text(source, "source")?, None)?;
        let mut merged = engine.lexicon.clone();
        merged.merge(lexicon)?;
        engine.lexicon = merged;
        Ok(MsStatus::Ok)
    })
}

/// Replaces the rule base.
///
/// # Safety
/// `engine` must be a live handle and `source` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ms_engine_load_rules(engine: *mut MsEngine, source: *const c_char) -> MsStatus {
    guarded(|| {
        let engine = engine_mut(engine)?;
        engine.rules = RuleBase::parse(text(source, "source")?)?;
        Ok(MsStatus::Ok)
    })
}

/// Composes `verb prep ground` in language `lang` (`"fr"` or `"en"`) and
/// stores the result in `*out`.
///
/// # Safety
/// `engine` must be a live handle, the strings NUL-terminated, and `out` a
/// valid pointer. `*out` is only written on success.
#[no_mangle]
pub unsafe extern "C" fn ms_compose(
    engine: *const MsEngine,
    verb: *const c_char,
    prep: *const c_char,
    ground: *const c_char,
    lang: *const c_char,
    format: MsFormat,
    out: *mut *mut c_char,
) -> MsStatus {
    guarded(|| {
        let engine = engine_ref(engine)?;
        let tag = text(lang, "lang")?;
        let language: Language = tag.parse().map_err(|_| invalid(format!("unknown language `{tag}`")))?;
        let complex = MotionComplex::new(
            text(verb, "verb")?,
            text(prep, "prep")?,
            text(ground, "ground")?,
            language,
        );
        let d = engine.compose(&complex)?;
        let rendered = match format {
            MsFormat::Records => d.trace.to_records(),
            MsFormat::Text => explain(&d),
        };
        hand_out(out, rendered)?;
        Ok(MsStatus::Ok)
    })
}

/// Lints the engine's rule base. Returns [`MsStatus::Findings`] when there
/// are gaps or ties; the report is written to `*out` either way.
///
/// # Safety
/// `engine` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ms_lint(engine: *const MsEngine, out: *mut *mut c_char) -> MsStatus {
    guarded(|| {
        let report = lint_rulebase(&engine_ref(engine)?.rules);
        hand_out(out, report.render())?;
        Ok(if report.is_clean() {
            MsStatus::Ok
        } else {
            MsStatus::Findings
        })
    })
}

/// Runs corpus text against the engine. Returns [`MsStatus::Findings`] when
/// any case fails or errors; the report is written to `*out` either way.
///
/// # Safety
/// `engine` must be a live handle, `source` NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn ms_run_corpus(
    engine: *const MsEngine,
    source: *const c_char,
    out: *mut *mut c_char,
) -> MsStatus {
    guarded(|| {
        let engine = engine_ref(engine)?;
        let cases = parse_corpus(text(source, "source")?)?;
        let report = run_corpus(&cases, &engine.lexicon, &engine.rules);
        hand_out(out, report.render())?;
        Ok(if report.is_success() {
            MsStatus::Ok
        } else {
            MsStatus::Findings
        })
    })
}

/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ms_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or `""` after a
/// successful one. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ms_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Stable name of a status code.
#[no_mangle]
pub extern "C" fn ms_status_name(status: MsStatus) -> *const c_char {
    let name: &'static CStr = match status {
        MsStatus::Ok => c"Ok",
        MsStatus::Findings => c"Findings",
        MsStatus::InvalidArgument => c"InvalidArgument",
        MsStatus::UnknownLemma => c"UnknownLemma",
        MsStatus::NotAColVerb => c"NotAColVerb",
        MsStatus::Infelicitous => c"Infelicitous",
        MsStatus::AmbiguousRuleBase => c"AmbiguousRuleBase",
        MsStatus::Load => c"Load",
        MsStatus::Io => c"Io",
        MsStatus::Internal => c"Internal",
    };
    name.as_ptr()
}

/// Number of steps between two zones in the order inside, contact,
/// proximal, distal.
#[no_mangle]
pub extern "C" fn ms_zone_distance(a: MsZone, b: MsZone) -> u32 {
    motion_semantics::zone_distance(a.into(), b.into()) as u32
}

/// Version string of the built-in rule base.
#[no_mangle]
pub extern "C" fn ms_seed_rules_version() -> *const c_char {
    static VERSION: std::sync::OnceLock<CString> = std::sync::OnceLock::new();
    VERSION
        .get_or_init(|| CString::new(seed::rules().version).unwrap_or_default())
        .as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn statuses_mirror_exit_codes() {
        for code in ExitCode::TABLE {
            assert_eq!(MsStatus::from(code) as i32, code.code());
        }
    }

    #[test]
    fn null_engine_is_rejected() {
        let mut out = ptr::null_mut();
        let status = unsafe { ms_lint(ptr::null(), &mut out) };
        assert_eq!(status, MsStatus::InvalidArgument);
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(ms_last_error_message()) };
        assert_eq!(msg.to_str().unwrap(), "engine is null");
    }

    #[test]
    fn zone_distance_matches_core() {
        assert_eq!(ms_zone_distance(MsZone::Inside, MsZone::Distal), 3);
        assert_eq!(ms_zone_distance(MsZone::Proximal, MsZone::Contact), 1);
    }
}
