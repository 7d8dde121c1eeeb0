//! Prioritized defeasible composition rules.
//!
//! A rule base file holds a `VERSION` line and one rule per line:
//!
//! ```text
//! R <id> <strict|defeasible> <priority> <guard> <conclusion>
//! ```
//!
//! The guard is `*` or a `&`-joined conjunction of `lrefrole=`, `prepkind=`,
//! `preprole=`, `zonecompat=` and `attained=` atoms. The conclusion is
//! `identify`, `bind(<phase>)` optionally followed by `zone=<zone>` and
//! `prov=<verb|prep|interaction>`, or `forbid(identify|bind)`.

mod lint;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

pub use lint::{lint_rulebase, Cell, LintReport, PrepClass, Valuation};

use crate::error::{Error, Result};
use crate::lexicon::PrepKind;
use crate::text::content_lines;
use crate::trace::Provenance;
use crate::zone::{LrefRole, Phase, Zone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strength {
    Defeasible,
    Strict,
}

impl Strength {
    pub fn name(self) -> &'static str {
        match self {
            Strength::Defeasible => "defeasible",
            Strength::Strict => "strict",
        }
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What the engine knows about a verb/preposition pair when choosing a rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Features {
    pub lref_role: LrefRole,
    pub prep: PrepClass,
    /// Whether reading the ground as the verb's lref gives a consistent,
    /// continuous set of zones.
    pub zone_compatible: bool,
    pub attained: bool,
}

impl fmt::Display for Features {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(f, "lrefrole={} prepkind={}", self.lref_role, self.prep.kind())?;
        if let Some(role) = self.prep.role() {
            write!(f, " preprole={role}")?;
        }
        write!(
            f,
            " zonecompat={} attained={}",
            yn(self.zone_compatible),
            yn(self.attained)
        )
    }
}

/// Conjunction of feature tests. Unset atoms match anything.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Guard {
    pub lref_role: Option<LrefRole>,
    pub prep_kind: Option<PrepKind>,
    pub prep_role: Option<LrefRole>,
    pub zone_compatible: Option<bool>,
    pub attained: Option<bool>,
}

impl Guard {
    pub fn holds(&self, f: &Features) -> bool {
        self.lref_role.is_none_or(|r| r == f.lref_role)
            && self.prep_kind.is_none_or(|k| k == f.prep.kind())
            && self.prep_role.is_none_or(|r| Some(r) == f.prep.role())
            && self.zone_compatible.is_none_or(|z| z == f.zone_compatible)
            && self.attained.is_none_or(|a| a == f.attained)
    }

    fn atoms(&self) -> Vec<String> {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let mut out = Vec::new();
        if let Some(r) = self.lref_role {
            out.push(format!("lrefrole={r}"));
        }
        if let Some(k) = self.prep_kind {
            out.push(format!("prepkind={k}"));
        }
        if let Some(r) = self.prep_role {
            out.push(format!("preprole={r}"));
        }
        if let Some(z) = self.zone_compatible {
            out.push(format!("zonecompat={}", yn(z)));
        }
        if let Some(a) = self.attained {
            out.push(format!("attained={}", yn(a)));
        }
        out
    }

    /// True when every atom of `other` is also in `self` and `self` has more.
    pub fn strictly_refines(&self, other: &Guard) -> bool {
        let mine: BTreeSet<String> = self.atoms().into_iter().collect();
        let theirs: BTreeSet<String> = other.atoms().into_iter().collect();
        theirs.is_subset(&mine) && mine.len() > theirs.len()
    }

    fn parse(text: &str) -> std::result::Result<Guard, String> {
        let mut g = Guard::default();
        if text == "*" {
            return Ok(g);
        }
        fn set<T>(slot: &mut Option<T>, value: T, atom: &str) -> std::result::Result<(), String> {
            if slot.replace(value).is_some() {
                return Err(format!("atom `{atom}` repeated"));
            }
            Ok(())
        }
        let yes_no = |v: &str| match v {
            "yes" => Ok(true),
            "no" => Ok(false),
            _ => Err(format!("expected yes|no, got `{v}`")),
        };
        for atom in text.split('&').map(str::trim) {
            let (key, value) = atom.split_once('=').ok_or_else(|| format!("bad atom `{atom}`"))?;
            let bad = |_| format!("bad value in `{atom}`");
            match key {
                "lrefrole" => set(&mut g.lref_role, value.parse().map_err(bad)?, key)?,
                "prepkind" => set(&mut g.prep_kind, value.parse().map_err(bad)?, key)?,
                "preprole" => set(&mut g.prep_role, value.parse().map_err(bad)?, key)?,
                "zonecompat" => set(&mut g.zone_compatible, yes_no(value)?, key)?,
                "attained" => set(&mut g.attained, yes_no(value)?, key)?,
                _ => return Err(format!("unknown atom `{key}`")),
            }
        }
        Ok(g)
    }
}

impl fmt::Display for Guard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let atoms = self.atoms();
        if atoms.is_empty() {
            f.write_str("*")
        } else {
            f.write_str(&atoms.join("&"))
        }
    }
}

/// Reading a conclusion can be forbidden by a constraint rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reading {
    Identify,
    Bind,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Identify => "identify",
            Reading::Bind => "bind",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conclusion {
    /// The ground is the verb's lref: one location carries both roles.
    Identify,
    /// The ground is a separate location anchored at `phase`, where the mobile
    /// is in `zone` (the preposition's own zone when unset).
    Bind {
        phase: Phase,
        zone: Option<Zone>,
        provenance: Option<Provenance>,
    },
    /// Constraint: drop every applicable rule concluding this reading.
    Forbid(Reading),
}

impl Conclusion {
    pub fn reading(&self) -> Option<Reading> {
        match self {
            Conclusion::Identify => Some(Reading::Identify),
            Conclusion::Bind { .. } => Some(Reading::Bind),
            Conclusion::Forbid(_) => None,
        }
    }

    fn parse(text: &str) -> std::result::Result<Conclusion, String> {
        let mut parts = text.split_whitespace();
        let head = parts.next().ok_or("empty conclusion")?;
        let rest: Vec<&str> = parts.collect();
        let no_options = |c: Conclusion| {
            if rest.is_empty() {
                Ok(c)
            } else {
                Err(format!("`{head}` takes no options"))
            }
        };
        if head == "identify" {
            return no_options(Conclusion::Identify);
        }
        if let Some(target) = head.strip_prefix("forbid(").and_then(|s| s.strip_suffix(')')) {
            let reading = match target {
                "identify" => Reading::Identify,
                "bind" => Reading::Bind,
                _ => return Err(format!("cannot forbid `{target}`")),
            };
            return no_options(Conclusion::Forbid(reading));
        }
        let phase = head
            .strip_prefix("bind(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("unknown conclusion `{head}`"))?;
        let phase: Phase = phase.parse().map_err(|_| format!("unknown phase `{phase}`"))?;
        let (mut zone, mut provenance) = (None, None);
        for opt in rest {
            match opt.split_once('=') {
                Some(("zone", z)) if zone.is_none() => {
                    zone = Some(z.parse().map_err(|_| format!("unknown zone `{z}`"))?)
                }
                Some(("prov", p)) if provenance.is_none() => {
                    provenance = Some(p.parse().map_err(|_| format!("unknown provenance `{p}`"))?)
                }
                _ => return Err(format!("bad option `{opt}`")),
            }
        }
        Ok(Conclusion::Bind {
            phase,
            zone,
            provenance,
        })
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Identify => f.write_str("identify"),
            Conclusion::Forbid(r) => write!(f, "forbid({})", r.name()),
            Conclusion::Bind {
                phase,
                zone,
                provenance,
            } => {
                write!(f, "bind({phase})")?;
                if let Some(z) = zone {
                    write!(f, " zone={z}")?;
                }
                if let Some(p) = provenance {
                    write!(f, " prov={p}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionRule {
    pub id: String,
    pub strength: Strength,
    pub priority: i32,
    pub guard: Guard,
    pub conclusion: Conclusion,
}

impl CompositionRule {
    /// Strict before defeasible, then higher priority first.
    pub fn rank_cmp(&self, other: &CompositionRule) -> Ordering {
        (other.strength, other.priority).cmp(&(self.strength, self.priority))
    }

    pub fn ties_with(&self, other: &CompositionRule) -> bool {
        self.strength == other.strength && self.priority == other.priority
    }

    pub fn is_constraint(&self) -> bool {
        matches!(self.conclusion, Conclusion::Forbid(_))
    }
}

impl fmt::Display for CompositionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "R\t{}\t{}\t{}\t{}\t{}",
            self.id, self.strength, self.priority, self.guard, self.conclusion
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleBase {
    pub version: String,
    rules: Vec<CompositionRule>,
}

impl RuleBase {
    pub fn new(version: impl Into<String>, rules: Vec<CompositionRule>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for r in &rules {
            if !seen.insert(r.id.clone()) {
                return Err(Error::DuplicateRuleId {
                    line: 0,
                    id: r.id.clone(),
                });
            }
        }
        Ok(RuleBase {
            version: version.into(),
            rules,
        })
    }

    pub fn parse(source: &str) -> Result<Self> {
        let mut version = None;
        let mut rules: Vec<CompositionRule> = Vec::new();
        let ill = |line: usize, reason: String| Error::IllFormedRule { line, reason };
        for (line, fields) in content_lines(source) {
            match fields.as_slice() {
                ["VERSION", v] => {
                    if version.replace(v.to_string()).is_some() {
                        return Err(ill(line, "VERSION repeated".into()));
                    }
                }
                ["R", id, strength, priority, guard, conclusion] => {
                    if rules.iter().any(|r| r.id == *id) {
                        return Err(Error::DuplicateRuleId {
                            line,
                            id: id.to_string(),
                        });
                    }
                    let strength = match *strength {
                        "strict" => Strength::Strict,
                        "defeasible" => Strength::Defeasible,
                        s => return Err(ill(line, format!("unknown strength `{s}`"))),
                    };
                    let priority = priority
                        .parse()
                        .map_err(|_| ill(line, format!("bad priority `{priority}`")))?;
                    rules.push(CompositionRule {
                        id: id.to_string(),
                        strength,
                        priority,
                        guard: Guard::parse(guard).map_err(|r| ill(line, r))?,
                        conclusion: Conclusion::parse(conclusion).map_err(|r| ill(line, r))?,
                    });
                }
                _ => {
                    return Err(ill(
                        line,
                        "expected `R <id> <strength> <priority> <guard> <conclusion>` (tab-separated) or `VERSION <v>`"
                            .into(),
                    ))
                }
            }
        }
        Ok(RuleBase {
            version: version.unwrap_or_else(|| "unversioned".into()),
            rules,
        })
    }

    pub fn rules(&self) -> &[CompositionRule] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Option<&CompositionRule> {
        self.rules.iter().find(|r| r.id == id)
    }

    /// Appends `rule`, refusing a duplicate id.
    pub fn with_rule(mut self, rule: CompositionRule) -> Result<Self> {
        if self.get(&rule.id).is_some() {
            return Err(Error::DuplicateRuleId { line: 0, id: rule.id });
        }
        self.rules.push(rule);
        Ok(self)
    }

    /// Removes every rule matching `pred`.
    pub fn without(mut self, pred: impl Fn(&CompositionRule) -> bool) -> Self {
        self.rules.retain(|r| !pred(r));
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("VERSION\t{}\n", self.version);
        for r in &self.rules {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "VERSION\t3\n\
        # comment\n\
        R\tD1\tdefeasible\t10\tprepkind=pos&zonecompat=yes\tidentify\n\
        R\tD5\tdefeasible\t30\tprepkind=dir&preprole=final&attained=no\tbind(post) zone=proximal prov=prep\n\
        R\tS1\tstrict\t100\tzonecompat=no\tforbid(identify)\n";

    #[test]
    fn parse_small_base() {
        let rb = RuleBase::parse(SMALL).unwrap();
        assert_eq!(rb.version, "3");
        assert_eq!(rb.rules().len(), 3);
        let d5 = rb.get("D5").unwrap();
        assert_eq!(
            d5.conclusion,
            Conclusion::Bind {
                phase: Phase::Post,
                zone: Some(Zone::Proximal),
                provenance: Some(Provenance::Preposition)
            }
        );
        assert_eq!(d5.guard.prep_role, Some(LrefRole::Final));
        assert!(rb.get("S1").unwrap().is_constraint());
        assert_eq!(RuleBase::parse(&rb.to_text()).unwrap(), rb);
    }

    #[test]
    fn rejects_bad_rules() {
        let cases = [
            "R\tX\tsometimes\t1\t*\tidentify",
            "R\tX\tstrict\tten\t*\tidentify",
            "R\tX\tstrict\t1\tcolour=red\tidentify",
            "R\tX\tstrict\t1\tlrefrole=initial&lrefrole=final\tidentify",
            "R\tX\tstrict\t1\t*\tbind(later)",
            "R\tX\tstrict\t1\t*\tidentify zone=inside",
            "R\tX\tstrict\t1\t*\tbind(post) zone=outside",
            "R\tX\tstrict\t1\t*\tforbid(everything)",
            "R\tX\tstrict\t1\t*",
        ];
        for c in cases {
            assert_eq!(RuleBase::parse(c).unwrap_err().name(), "IllFormedRule", "{c}");
        }
        let dup = "R\tA\tstrict\t1\t*\tidentify\nR\tA\tstrict\t2\t*\tidentify\n";
        assert!(matches!(
            RuleBase::parse(dup).unwrap_err(),
            Error::DuplicateRuleId { line: 2, .. }
        ));
    }

    #[test]
    fn ranking_puts_strict_first() {
        let rule = |id: &str, strength, priority| CompositionRule {
            id: id.into(),
            strength,
            priority,
            guard: Guard::default(),
            conclusion: Conclusion::Identify,
        };
        let mut rules = [
            rule("a", Strength::Defeasible, 50),
            rule("b", Strength::Strict, -3),
            rule("c", Strength::Defeasible, 70),
        ];
        rules.sort_by(CompositionRule::rank_cmp);
        let ids: Vec<&str> = rules.iter().map(|r| r.id.as_str()).collect();
        assert_eq!(ids, ["b", "c", "a"]);
    }

    #[test]
    fn refinement() {
        let general = Guard::parse("prepkind=dir").unwrap();
        let specific = Guard::parse("prepkind=dir&preprole=final").unwrap();
        assert!(specific.strictly_refines(&general));
        assert!(!general.strictly_refines(&specific));
        assert!(!general.strictly_refines(&general));
    }
}
