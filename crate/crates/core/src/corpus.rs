//! Golden corpus files and regression reports.
//!
//! ```text
//! CASE <id>
//! INPUT <verb> <prep> <ground> <lang> [<mobile>]
//! EXPECT <location> <phase> <zone> <provenance>
//! EXPECT-BIND <location> <lref|ground> <initial|medial|final>
//! EXPECT-ERROR <name>
//! END
//! ```
//!
//! A case expects either an error or a set of tuples; the tuple set must match
//! exactly. Binding lines are optional, but when present they must match
//! exactly too.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use rayon::prelude::*;

use crate::compose::{compose, MotionComplex};
use crate::error::{Error, Result};
use crate::lexicon::{Language, Lexicon};
use crate::rules::RuleBase;
use crate::text::content_lines;
use crate::trace::{BindingRecord, Role, Tuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expectation {
    Trace {
        tuples: BTreeSet<Tuple>,
        bindings: Option<BTreeSet<BindingRecord>>,
    },
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusCase {
    pub id: String,
    pub line: usize,
    pub complex: MotionComplex,
    pub expectation: Expectation,
}

pub fn parse_corpus(source: &str) -> Result<Vec<CorpusCase>> {
    struct Open {
        id: String,
        line: usize,
        complex: Option<MotionComplex>,
        tuples: BTreeSet<Tuple>,
        bindings: BTreeSet<BindingRecord>,
        error: Option<String>,
    }

    let err = |line: usize, reason: String| Error::CorpusParse { line, reason };
    let mut cases: Vec<CorpusCase> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut open: Option<Open> = None;

    for (line, fields) in content_lines(source) {
        let directive = fields[0];
        if directive == "CASE" {
            if let Some(o) = &open {
                return Err(err(line, format!("case `{}` (line {}) has no END", o.id, o.line)));
            }
            let [_, id] = fields.as_slice() else {
                return Err(err(line, "expected `CASE <id>`".into()));
            };
            if !seen.insert(id.to_string()) {
                return Err(err(line, format!("duplicate case id `{id}`")));
            }
            open = Some(Open {
                id: id.to_string(),
                line,
                complex: None,
                tuples: BTreeSet::new(),
                bindings: BTreeSet::new(),
                error: None,
            });
            continue;
        }

        let Some(case) = open.as_mut() else {
            return Err(err(line, format!("`{directive}` outside a case")));
        };
        let parse = |what: &str, value: &str| err(line, format!("unknown {what} `{value}`"));
        match (directive, &fields[1..]) {
            ("INPUT", [verb, prep, ground, lang, rest @ ..]) if rest.len() <= 1 => {
                if case.complex.is_some() {
                    return Err(err(line, "INPUT repeated".into()));
                }
                let language: Language = lang.parse().map_err(|_| parse("language", lang))?;
                let mut complex = MotionComplex::new(verb, prep, ground, language);
                if let [mobile] = rest {
                    complex = complex.with_mobile(mobile);
                }
                case.complex = Some(complex);
            }
            ("EXPECT", [location, phase, zone, provenance]) => {
                case.tuples.insert(Tuple {
                    location: location.to_string(),
                    phase: phase.parse().map_err(|_| parse("phase", phase))?,
                    zone: zone.parse().map_err(|_| parse("zone", zone))?,
                    provenance: provenance.parse().map_err(|_| parse("provenance", provenance))?,
                });
            }
            ("EXPECT-BIND", [location, role, anchor]) => {
                case.bindings.insert(BindingRecord {
                    location: location.to_string(),
                    role: role.parse::<Role>().map_err(|_| parse("role", role))?,
                    anchor: anchor.parse().map_err(|_| parse("role anchor", anchor))?,
                });
            }
            ("EXPECT-ERROR", [name]) => {
                if case.error.replace(name.to_string()).is_some() {
                    return Err(err(line, "EXPECT-ERROR repeated".into()));
                }
            }
            ("END", []) => {
                let o = open.take().expect("case is open");
                let complex = o
                    .complex
                    .ok_or_else(|| err(line, format!("case `{}` has no INPUT", o.id)))?;
                let expectation = match o.error {
                    Some(_) if !o.tuples.is_empty() || !o.bindings.is_empty() => {
                        return Err(err(line, format!("case `{}` mixes EXPECT and EXPECT-ERROR", o.id)))
                    }
                    Some(name) => Expectation::Error(name),
                    None if o.tuples.is_empty() => return Err(err(line, format!("case `{}` expects nothing", o.id))),
                    None => Expectation::Trace {
                        tuples: o.tuples,
                        bindings: (!o.bindings.is_empty()).then_some(o.bindings),
                    },
                };
                cases.push(CorpusCase {
                    id: o.id,
                    line: o.line,
                    complex,
                    expectation,
                });
            }
            _ => return Err(err(line, format!("malformed `{directive}` line"))),
        }
    }
    if let Some(o) = open {
        return Err(err(o.line, format!("case `{}` has no END", o.id)));
    }
    Ok(cases)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// The result differs from the expectation.
    Fail(Vec<String>),
    /// A trace was expected but composition raised an error.
    Error(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub outcome: Outcome,
    pub fired: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusReport {
    pub results: Vec<CaseResult>,
    /// How often each rule fired across successful compositions.
    pub histogram: BTreeMap<String, usize>,
}

impl CorpusReport {
    fn count(&self, f: impl Fn(&Outcome) -> bool) -> usize {
        self.results.iter().filter(|r| f(&r.outcome)).count()
    }

    pub fn passed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Pass))
    }

    pub fn failed(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Fail(_)))
    }

    pub fn errors(&self) -> usize {
        self.count(|o| matches!(o, Outcome::Error(_)))
    }

    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0 && self.errors() == 0
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            match &r.outcome {
                Outcome::Pass => {
                    let _ = writeln!(out, "pass   {}", r.id);
                }
                Outcome::Fail(diff) => {
                    let _ = writeln!(out, "FAIL   {}", r.id);
                    for d in diff {
                        let _ = writeln!(out, "       {d}");
                    }
                }
                Outcome::Error(e) => {
                    let _ = writeln!(out, "ERROR  {}: {e}", r.id);
                }
            }
        }
        let _ = writeln!(
            out,
            "{} cases: {} pass, {} fail, {} error",
            self.total(),
            self.passed(),
            self.failed(),
            self.errors()
        );
        if !self.histogram.is_empty() {
            out.push_str("rules fired:\n");
            for (rule, n) in &self.histogram {
                let _ = writeln!(out, "  {rule} {n}");
            }
        }
        out
    }
}

fn diff_sets<T: Ord + std::fmt::Display>(expected: &BTreeSet<T>, actual: &BTreeSet<T>, out: &mut Vec<String>) {
    out.extend(expected.difference(actual).map(|t| format!("- {t}")));
    out.extend(actual.difference(expected).map(|t| format!("+ {t}")));
}

pub fn run_case(case: &CorpusCase, lexicon: &Lexicon, rules: &RuleBase) -> CaseResult {
    let result = compose(&case.complex, lexicon, rules);
    let fired = result.as_ref().ok().map(|d| d.fired.id.clone());
    let outcome = match (&case.expectation, result) {
        (Expectation::Error(name), Err(e)) if e.name() == name => Outcome::Pass,
        (Expectation::Error(name), Err(e)) => {
            Outcome::Fail(vec![format!("expected error {name}, got {}: {e}", e.name())])
        }
        (Expectation::Error(name), Ok(d)) => {
            Outcome::Fail(vec![format!("expected error {name}, got a trace from {}", d.fired.id)])
        }
        (Expectation::Trace { .. }, Err(e)) => Outcome::Error(format!("{}: {e}", e.name())),
        (Expectation::Trace { tuples, bindings }, Ok(d)) => {
            let mut diff = Vec::new();
            let actual: BTreeSet<Tuple> = d.trace.tuples().into_iter().collect();
            diff_sets(tuples, &actual, &mut diff);
            if let Some(expected) = bindings {
                let actual: BTreeSet<BindingRecord> = d.trace.bindings().into_iter().collect();
                diff_sets(expected, &actual, &mut diff);
            }
            if diff.is_empty() {
                Outcome::Pass
            } else {
                Outcome::Fail(diff)
            }
        }
    };
    CaseResult {
        id: case.id.clone(),
        outcome,
        fired,
    }
}

/// Runs every case (in parallel); results keep corpus order.
pub fn run_corpus(cases: &[CorpusCase], lexicon: &Lexicon, rules: &RuleBase) -> CorpusReport {
    let results: Vec<CaseResult> = cases.par_iter().map(|c| run_case(c, lexicon, rules)).collect();
    let mut histogram = BTreeMap::new();
    for r in &results {
        if let Some(rule) = &r.fired {
            *histogram.entry(rule.clone()).or_insert(0) += 1;
        }
    }
    CorpusReport { results, histogram }
}
