//! Coverage and tie checks over the 3×4 feature grid.

use std::collections::BTreeSet;
use std::fmt;

use super::{Features, RuleBase};
use crate::compose::{applicable_constraints, applicable_rules, forbidden_by};
use crate::lexicon::PrepKind;
use crate::zone::LrefRole;

/// Column of the feature grid: what kind of preposition heads the PP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrepClass {
    Positional,
    Directional(LrefRole),
}

impl PrepClass {
    pub const ALL: [PrepClass; 4] = [
        PrepClass::Positional,
        PrepClass::Directional(LrefRole::Initial),
        PrepClass::Directional(LrefRole::Medial),
        PrepClass::Directional(LrefRole::Final),
    ];

    pub fn kind(self) -> PrepKind {
        match self {
            PrepClass::Positional => PrepKind::Positional,
            PrepClass::Directional(_) => PrepKind::Directional,
        }
    }

    pub fn role(self) -> Option<LrefRole> {
        match self {
            PrepClass::Positional => None,
            PrepClass::Directional(r) => Some(r),
        }
    }
}

impl fmt::Display for PrepClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrepClass::Positional => f.write_str("pos"),
            PrepClass::Directional(r) => write!(f, "dir-{r}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub lref_role: LrefRole,
    pub prep: PrepClass,
}

impl Cell {
    pub fn all() -> Vec<Cell> {
        LrefRole::ALL
            .into_iter()
            .flat_map(|lref_role| PrepClass::ALL.into_iter().map(move |prep| Cell { lref_role, prep }))
            .collect()
    }

    /// Feature valuations reachable in this cell. `attained` can only be
    /// false for directional finals.
    pub fn valuations(&self) -> Vec<Valuation> {
        let attained: &[bool] = if self.prep == PrepClass::Directional(LrefRole::Final) {
            &[true, false]
        } else {
            &[true]
        };
        let mut out = Vec::new();
        for zone_compatible in [true, false] {
            for &a in attained {
                out.push(Valuation {
                    zone_compatible,
                    attained: a,
                });
            }
        }
        out
    }

    pub fn features(&self, v: Valuation) -> Features {
        Features {
            lref_role: self.lref_role,
            prep: self.prep,
            zone_compatible: v.zone_compatible,
            attained: v.attained,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lref {} × {}", self.lref_role, self.prep)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation {
    pub zone_compatible: bool,
    pub attained: bool,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "zonecompat={} attained={}",
            yn(self.zone_compatible),
            yn(self.attained)
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LintReport {
    /// No rule's guard covers this valuation.
    pub gaps: Vec<(Cell, Valuation)>,
    /// Two applicable rules share strength and priority.
    pub ties: Vec<(Cell, Valuation, String, String)>,
    /// Rules apply, but a strict constraint forbids all of them: such
    /// combinations compose to `Infelicitous`.
    pub constrained: Vec<(Cell, Valuation, Vec<String>)>,
}

impl LintReport {
    pub fn gap_cells(&self) -> BTreeSet<Cell> {
        self.gaps.iter().map(|(c, _)| *c).collect()
    }

    pub fn tie_cells(&self) -> BTreeSet<Cell> {
        self.ties.iter().map(|(c, ..)| *c).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.gaps.is_empty() && self.ties.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "gap cells: {}\npossible ties: {}\n",
            self.gap_cells().len(),
            self.tie_cells().len()
        ));
        for (cell, v) in &self.gaps {
            out.push_str(&format!("  gap  {cell}  [{v}]\n"));
        }
        for (cell, v, a, b) in &self.ties {
            out.push_str(&format!("  tie  {cell}  [{v}]  {a} = {b}\n"));
        }
        for (cell, v, rules) in &self.constrained {
            out.push_str(&format!("  constrained  {cell}  [{v}]  forbids {}\n", rules.join(", ")));
        }
        out
    }
}

/// Enumerates all 12 cells and every valuation inside them.
pub fn lint_rulebase(rules: &RuleBase) -> LintReport {
    let mut report = LintReport::default();
    for cell in Cell::all() {
        for v in cell.valuations() {
            let features = cell.features(v);
            let applicable = applicable_rules(&features, rules);
            if applicable.is_empty() {
                report.gaps.push((cell, v));
                continue;
            }
            let constraints = applicable_constraints(&features, rules);
            let (open, blocked): (Vec<_>, Vec<_>) = applicable
                .into_iter()
                .partition(|r| forbidden_by(r, &constraints).is_none());
            if open.is_empty() {
                report
                    .constrained
                    .push((cell, v, blocked.iter().map(|r| r.id.clone()).collect()));
            }
            for (i, a) in open.iter().enumerate() {
                for b in &open[i + 1..] {
                    if a.ties_with(b) {
                        report.ties.push((cell, v, a.id.clone(), b.id.clone()));
                    }
                }
            }
        }
    }
    report
}
