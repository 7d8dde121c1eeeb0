use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the engine can report.
///
/// [`Error::name`] gives the stable identifier used in corpus files, and
/// [`Error::exit_code`] the code the CLI and the C interface return.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: duplicate lemma `{lemma}`")]
    DuplicateLemma { line: usize, lemma: String },

    #[error("line {line}: unknown zone name `{name}`")]
    UnknownZoneName { line: usize, name: String },

    #[error("{}ill-formed entry: {reason}", line_prefix(*.line))]
    IllFormedEntry { line: Option<usize>, reason: String },

    #[error("{}unlexicalized verb class {class}", line_prefix(*.line))]
    UnlexicalizedClass { line: Option<usize>, class: String },

    #[error("`{lemma}` is not a change-of-location verb")]
    NotACoLVerb { lemma: String },

    #[error("unknown {language} lemma `{lemma}`")]
    UnknownLemma { language: String, lemma: String },

    #[error("infelicitous combination {complex}: no applicable rule yields a valid trace")]
    Infelicitous { complex: String },

    #[error("ambiguous rule base: {first} and {second} tie on strength and priority")]
    AmbiguousRuleBase { first: String, second: String },

    #[error("no applicable rule")]
    EmptyApplicableSet,

    #[error("line {line}: ill-formed rule: {reason}")]
    IllFormedRule { line: usize, reason: String },

    #[error("line {line}: duplicate rule id `{id}`")]
    DuplicateRuleId { line: usize, id: String },

    #[error("line {line}: corpus: {reason}")]
    CorpusParse { line: usize, reason: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn line_prefix(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::DuplicateLemma { .. } => "DuplicateLemma",
            Error::UnknownZoneName { .. } => "UnknownZoneName",
            Error::IllFormedEntry { .. } => "IllFormedEntry",
            Error::UnlexicalizedClass { .. } => "UnlexicalizedClass",
            Error::NotACoLVerb { .. } => "NotACoLVerb",
            Error::UnknownLemma { .. } => "UnknownLemma",
            Error::Infelicitous { .. } => "Infelicitous",
            Error::AmbiguousRuleBase { .. } => "AmbiguousRuleBase",
            Error::EmptyApplicableSet => "EmptyApplicableSet",
            Error::IllFormedRule { .. } => "IllFormedRule",
            Error::DuplicateRuleId { .. } => "DuplicateRuleId",
            Error::CorpusParse { .. } => "CorpusParse",
            Error::Io { .. } => "Io",
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        match self {
            Error::UnknownLemma { .. } => ExitCode::UnknownLemma,
            Error::NotACoLVerb { .. } => ExitCode::NotACoLVerb,
            Error::Infelicitous { .. } => ExitCode::Infelicitous,
            Error::AmbiguousRuleBase { .. } | Error::EmptyApplicableSet => ExitCode::AmbiguousRuleBase,
            Error::Io { .. } => ExitCode::Io,
            Error::DuplicateLemma { .. }
            | Error::UnknownZoneName { .. }
            | Error::IllFormedEntry { .. }
            | Error::UnlexicalizedClass { .. }
            | Error::IllFormedRule { .. }
            | Error::DuplicateRuleId { .. }
            | Error::CorpusParse { .. } => ExitCode::Load,
        }
    }
}

/// Published exit status table. No error path maps to `Ok`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(i32)]
pub enum ExitCode {
    Ok = 0,
    /// Corpus failures, lint findings.
    Findings = 1,
    /// Bad command line (also what clap uses).
    Usage = 2,
    UnknownLemma = 3,
    NotACoLVerb = 4,
    Infelicitous = 5,
    AmbiguousRuleBase = 6,
    /// Lexicon, rule base or corpus file failed to parse or validate.
    Load = 7,
    Io = 8,
}

impl ExitCode {
    pub const TABLE: [ExitCode; 9] = [
        ExitCode::Ok,
        ExitCode::Findings,
        ExitCode::Usage,
        ExitCode::UnknownLemma,
        ExitCode::NotACoLVerb,
        ExitCode::Infelicitous,
        ExitCode::AmbiguousRuleBase,
        ExitCode::Load,
        ExitCode::Io,
    ];

    pub fn code(self) -> i32 {
        self as i32
    }
}
