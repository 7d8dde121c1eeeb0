//! Composition of a change-of-location verb with a prepositional phrase.
//!
//! The verb contributes its lref and the zones the mobile occupies relative
//! to it; the preposition contributes a zone relation to the ground. Which
//! way they combine is decided by the rule base: the ground is either
//! identified with the lref, or bound as a separate location at some phase.
//! Facts that neither entry states on its own are tagged
//! [`Provenance::Interaction`].

use std::fmt;

use crate::error::{Error, Result};
use crate::lexicon::{ColProfile, Language, Lexicon, PrepEntry, PrepSense, VerbEntry};
use crate::rules::{CompositionRule, Conclusion, Features, PrepClass, RuleBase};
use crate::trace::{validate_trace, Provenance, Role, SpatiotemporalTrace};
use crate::zone::{LrefRole, Phase, Zone};

/// Prefix of the location name given to an lref that is not the ground.
pub const IMPLICIT_LREF_PREFIX: &str = "lref#";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionComplex {
    pub verb: String,
    pub prep: String,
    pub ground: String,
    pub mobile: String,
    pub language: Language,
}

impl MotionComplex {
    pub fn new(verb: &str, prep: &str, ground: &str, language: Language) -> Self {
        MotionComplex {
            verb: verb.to_string(),
            prep: prep.to_string(),
            ground: ground.to_string(),
            mobile: "m".to_string(),
            language,
        }
    }

    pub fn with_mobile(mut self, mobile: &str) -> Self {
        self.mobile = mobile.to_string();
        self
    }

    fn check(&self) -> Result<()> {
        let empty = [&self.verb, &self.prep, &self.ground, &self.mobile]
            .iter()
            .any(|f| f.trim().is_empty());
        if empty {
            return Err(Error::IllFormedEntry {
                line: None,
                reason: "motion complex fields must be nonempty".into(),
            });
        }
        if self.ground.starts_with(IMPLICIT_LREF_PREFIX) {
            return Err(Error::IllFormedEntry {
                line: None,
                reason: format!("ground may not use the reserved `{IMPLICIT_LREF_PREFIX}` prefix"),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MotionComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} ({})", self.verb, self.prep, self.ground, self.language)
    }
}

/// Why an applicable rule did not fire.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefeatReason {
    LowerPriority {
        by: String,
    },
    /// The winner's guard is strictly more specific.
    GuardSubsumed {
        by: String,
    },
    /// A strict constraint forbids this reading.
    Blocked {
        by: String,
    },
    /// The conclusion would break zone continuity or clash on a zone.
    Discontinuous,
}

impl fmt::Display for DefeatReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefeatReason::LowerPriority { by } => write!(f, "lower priority than {by}"),
            DefeatReason::GuardSubsumed { by } => write!(f, "guard subsumed by {by}"),
            DefeatReason::Blocked { by } => write!(f, "forbidden by {by}"),
            DefeatReason::Discontinuous => f.write_str("conclusion breaks zone continuity"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Defeat {
    pub rule: String,
    pub reason: DefeatReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub complex: MotionComplex,
    pub verb: VerbEntry,
    pub prep: PrepEntry,
    pub features: Features,
    pub fired: CompositionRule,
    pub defeated: Vec<Defeat>,
    pub trace: SpatiotemporalTrace,
}

impl Derivation {
    pub fn is_identification(&self) -> bool {
        self.fired.conclusion == Conclusion::Identify
    }
}

/// Feature vector for a verb profile and a preposition.
pub fn features(profile: &ColProfile, prep: &PrepEntry) -> Features {
    let prep_class = match prep.sense {
        PrepSense::Positional => PrepClass::Positional,
        PrepSense::Directional { role, .. } => PrepClass::Directional(role),
    };
    let zone_compatible = identified_trace("m", "g", profile, prep).is_some_and(|t| validate_trace(&t).is_ok());
    Features {
        lref_role: profile.lref_role,
        prep: prep_class,
        zone_compatible,
        attained: prep.attained(),
    }
}

/// The phase and zone a preposition pins on its ground when read as the
/// verb's lref. Positional PPs describe the end state; a non-attained goal
/// only commits to proximity.
fn prep_constraint(prep: &PrepEntry) -> (Phase, Zone) {
    match prep.sense {
        PrepSense::Positional => (Phase::Post, prep.zone),
        PrepSense::Directional {
            role: LrefRole::Final,
            attained: false,
        } => (Phase::Post, Zone::Proximal),
        PrepSense::Directional { role, .. } => (role.phase(), prep.zone),
    }
}

fn assign_verb_zones(trace: &mut SpatiotemporalTrace, location: &str, profile: &ColProfile) {
    trace.assign(location, Phase::Pre, profile.start_zone, Provenance::Verb);
    if let Some(d) = profile.during_zone {
        trace.assign(location, Phase::During, d, Provenance::Verb);
    }
    trace.assign(location, Phase::Post, profile.end_zone, Provenance::Verb);
}

/// Ground and lref as one location. `None` when the preposition's zone
/// clashes with the verb's zone at the same phase.
fn identified_trace(mobile: &str, ground: &str, profile: &ColProfile, prep: &PrepEntry) -> Option<SpatiotemporalTrace> {
    let mut trace = SpatiotemporalTrace::new(mobile);
    trace
        .bind(ground, Role::Lref, profile.lref_role)
        .bind(ground, Role::Ground, profile.lref_role);
    assign_verb_zones(&mut trace, ground, profile);
    let (phase, zone) = prep_constraint(prep);
    match trace.get(ground, phase) {
        Some(a) if a.zone != zone => return None,
        Some(_) => {}
        None => {
            trace.assign(ground, phase, zone, Provenance::Preposition);
        }
    }
    Some(trace)
}

fn bound_trace(
    complex: &MotionComplex,
    profile: &ColProfile,
    prep: &PrepEntry,
    phase: Phase,
    zone: Option<Zone>,
    provenance: Option<Provenance>,
) -> SpatiotemporalTrace {
    let lref = format!("{IMPLICIT_LREF_PREFIX}{}", complex.verb);
    let mut trace = SpatiotemporalTrace::new(&complex.mobile);
    trace.bind(&lref, Role::Lref, profile.lref_role);
    assign_verb_zones(&mut trace, &lref, profile);
    trace.bind(&complex.ground, Role::Ground, LrefRole::from_phase(phase));
    trace.assign(
        &complex.ground,
        phase,
        zone.unwrap_or(prep.zone),
        provenance.unwrap_or(Provenance::Preposition),
    );
    trace
}

/// Conclusion-bearing rules whose guard holds, strict first, then by
/// descending priority. Ties keep rule base order.
pub fn applicable_rules<'r>(features: &Features, rules: &'r RuleBase) -> Vec<&'r CompositionRule> {
    let mut out: Vec<&CompositionRule> = rules
        .rules()
        .iter()
        .filter(|r| !r.is_constraint() && r.guard.holds(features))
        .collect();
    out.sort_by(|a, b| a.rank_cmp(b));
    out
}

/// Constraint (`forbid`) rules whose guard holds.
pub fn applicable_constraints<'r>(features: &Features, rules: &'r RuleBase) -> Vec<&'r CompositionRule> {
    rules
        .rules()
        .iter()
        .filter(|r| r.is_constraint() && r.guard.holds(features))
        .collect()
}

/// The first constraint forbidding `rule`'s reading, if any.
pub fn forbidden_by<'r>(rule: &CompositionRule, constraints: &[&'r CompositionRule]) -> Option<&'r CompositionRule> {
    let reading = rule.conclusion.reading()?;
    constraints
        .iter()
        .copied()
        .find(|c| c.conclusion == Conclusion::Forbid(reading))
}

/// Head of a ranked list. Equal strength and priority at the top is an
/// error, never an arbitrary pick.
pub fn resolve<'r>(applicable: &[&'r CompositionRule]) -> Result<&'r CompositionRule> {
    match applicable {
        [] => Err(Error::EmptyApplicableSet),
        [first, second, ..] if first.ties_with(second) => Err(Error::AmbiguousRuleBase {
            first: first.id.clone(),
            second: second.id.clone(),
        }),
        [first, ..] => Ok(first),
    }
}

pub fn compose(complex: &MotionComplex, lexicon: &Lexicon, rules: &RuleBase) -> Result<Derivation> {
    complex.check()?;
    let verb = lexicon.lookup_verb(complex.language, &complex.verb)?;
    let prep = lexicon.lookup_prep(complex.language, &complex.prep)?;
    let profile = verb.profile().ok_or_else(|| Error::NotACoLVerb {
        lemma: verb.lemma.clone(),
    })?;
    let features = features(profile, prep);

    let applicable = applicable_rules(&features, rules);
    let constraints = applicable_constraints(&features, rules);

    let mut defeated = Vec::new();
    let mut candidates = Vec::new();
    for rule in &applicable {
        match forbidden_by(rule, &constraints) {
            Some(c) => defeated.push(Defeat {
                rule: rule.id.clone(),
                reason: DefeatReason::Blocked { by: c.id.clone() },
            }),
            None => candidates.push(*rule),
        }
    }

    let (fired, trace) = loop {
        if candidates.is_empty() {
            return Err(Error::Infelicitous {
                complex: complex.to_string(),
            });
        }
        let head = resolve(&candidates)?;
        let trace = match head.conclusion {
            Conclusion::Identify => identified_trace(&complex.mobile, &complex.ground, profile, prep),
            Conclusion::Bind {
                phase,
                zone,
                provenance,
            } => Some(bound_trace(complex, profile, prep, phase, zone, provenance)),
            Conclusion::Forbid(_) => unreachable!("constraints are never candidates"),
        };
        match trace {
            Some(t) if validate_trace(&t).is_ok() => break (head, t),
            _ => {
                defeated.push(Defeat {
                    rule: head.id.clone(),
                    reason: DefeatReason::Discontinuous,
                });
                candidates.remove(0);
            }
        }
    };

    for rule in candidates.iter().filter(|r| r.id != fired.id) {
        let reason = if fired.guard.strictly_refines(&rule.guard) {
            DefeatReason::GuardSubsumed { by: fired.id.clone() }
        } else {
            DefeatReason::LowerPriority { by: fired.id.clone() }
        };
        defeated.push(Defeat {
            rule: rule.id.clone(),
            reason,
        });
    }
    let rank = |id: &str| applicable.iter().position(|r| r.id == id);
    defeated.sort_by_key(|d| rank(&d.rule));

    Ok(Derivation {
        complex: complex.clone(),
        verb: verb.clone(),
        prep: prep.clone(),
        features,
        fired: fired.clone(),
        defeated,
        trace,
    })
}

/// A lexicon and a rule base bundled together.
#[derive(Clone, Debug)]
pub struct Engine {
    pub lexicon: Lexicon,
    pub rules: RuleBase,
}

impl Engine {
    pub fn new(lexicon: Lexicon, rules: RuleBase) -> Self {
        Engine { lexicon, rules }
    }

    /// The shipped French and English lexicons with the shipped rule base.
    pub fn seed() -> Self {
        Engine {
            lexicon: crate::seed::lexicon(),
            rules: crate::seed::rules(),
        }
    }

    pub fn compose(&self, complex: &MotionComplex) -> Result<Derivation> {
        compose(complex, &self.lexicon, &self.rules)
    }
}
