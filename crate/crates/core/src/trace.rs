//! Spatiotemporal traces: the composed meaning of a motion complex.
//!
//! A trace records, for each location, which zone the mobile occupies in each
//! phase where that is known, together with where each fact came from.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::zone::{zone_distance, LrefRole, Phase, UnknownName, Zone};

/// Which constituent an assignment comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Verb,
    Preposition,
    /// Present in the composed meaning but in neither lexical entry.
    Interaction,
}

impl Provenance {
    pub const ALL: [Provenance; 3] = [Provenance::Verb, Provenance::Preposition, Provenance::Interaction];

    /// Short name used in records, corpus files and rule files.
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Verb => "verb",
            Provenance::Preposition => "prep",
            Provenance::Interaction => "interaction",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Provenance::Verb => "Verb",
            Provenance::Preposition => "Preposition",
            Provenance::Interaction => "Interaction",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Provenance {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Provenance::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// The part a location plays in a composed motion complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Role {
    /// The verb's reference location.
    Lref,
    /// The location introduced by the prepositional phrase.
    Ground,
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::Lref => "lref",
            Role::Ground => "ground",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Role {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lref" => Ok(Role::Lref),
            "ground" => Ok(Role::Ground),
            _ => Err(UnknownName(s.to_string())),
        }
    }
}

/// Roles held by one location, each with the part of the motion it anchors.
/// Both are set when the ground is identified with the verb's lref.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RoleBinding {
    pub lref: Option<LrefRole>,
    pub ground: Option<LrefRole>,
}

impl RoleBinding {
    pub fn get(&self, role: Role) -> Option<LrefRole> {
        match role {
            Role::Lref => self.lref,
            Role::Ground => self.ground,
        }
    }

    pub fn is_identified(&self) -> bool {
        self.lref.is_some() && self.ground.is_some()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub zone: Zone,
    pub provenance: Provenance,
}

/// One `(location, phase, zone, provenance)` fact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple {
    pub location: String,
    pub phase: Phase,
    pub zone: Zone,
    pub provenance: Provenance,
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.location, self.phase, self.zone, self.provenance)
    }
}

/// One `(location, role, anchored part)` binding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BindingRecord {
    pub location: String,
    pub role: Role,
    pub anchor: LrefRole,
}

impl fmt::Display for BindingRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bind {} {} {}", self.location, self.role, self.anchor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatiotemporalTrace {
    mobile: String,
    locations: BTreeMap<String, RoleBinding>,
    assignments: BTreeMap<(String, Phase), Assignment>,
}

impl SpatiotemporalTrace {
    pub fn new(mobile: impl Into<String>) -> Self {
        SpatiotemporalTrace {
            mobile: mobile.into(),
            locations: BTreeMap::new(),
            assignments: BTreeMap::new(),
        }
    }

    pub fn mobile(&self) -> &str {
        &self.mobile
    }

    /// Declares `location` (if needed) and gives it `role`, anchored at `anchor`.
    pub fn bind(&mut self, location: &str, role: Role, anchor: LrefRole) -> &mut Self {
        let binding = self.locations.entry(location.to_string()).or_default();
        match role {
            Role::Lref => binding.lref = Some(anchor),
            Role::Ground => binding.ground = Some(anchor),
        }
        self
    }

    /// Declares a location without giving it any role.
    pub fn declare(&mut self, location: &str) -> &mut Self {
        self.locations.entry(location.to_string()).or_default();
        self
    }

    /// Sets the zone for `(location, phase)`, replacing any previous value.
    pub fn assign(&mut self, location: &str, phase: Phase, zone: Zone, provenance: Provenance) -> &mut Self {
        self.assignments
            .insert((location.to_string(), phase), Assignment { zone, provenance });
        self
    }

    pub fn get(&self, location: &str, phase: Phase) -> Option<Assignment> {
        self.assignments.get(&(location.to_string(), phase)).copied()
    }

    pub fn binding(&self, location: &str) -> Option<RoleBinding> {
        self.locations.get(location).copied()
    }

    pub fn locations(&self) -> impl Iterator<Item = (&str, RoleBinding)> {
        self.locations.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// The location bound to `role`, if exactly one is.
    pub fn location_with(&self, role: Role) -> Option<&str> {
        let mut it = self
            .locations
            .iter()
            .filter(|(_, b)| b.get(role).is_some())
            .map(|(k, _)| k.as_str());
        let first = it.next();
        match it.next() {
            Some(_) => None,
            None => first,
        }
    }

    /// Assignments in key order: location, then phase.
    pub fn tuples(&self) -> Vec<Tuple> {
        self.assignments
            .iter()
            .map(|((location, phase), a)| Tuple {
                location: location.clone(),
                phase: *phase,
                zone: a.zone,
                provenance: a.provenance,
            })
            .collect()
    }

    pub fn bindings(&self) -> Vec<BindingRecord> {
        let mut out = Vec::new();
        for (location, b) in &self.locations {
            for role in [Role::Lref, Role::Ground] {
                if let Some(anchor) = b.get(role) {
                    out.push(BindingRecord {
                        location: location.clone(),
                        role,
                        anchor,
                    });
                }
            }
        }
        out
    }

    /// Location names replaced by the roles they hold (`lref`, `ground`,
    /// `lref+ground`), so traces from different lexical items can be compared.
    pub fn role_view(&self) -> (RoleBindings, RoleTuples) {
        let label = |loc: &str| -> String {
            match self.locations.get(loc) {
                Some(b) if b.is_identified() => "lref+ground".into(),
                Some(b) if b.lref.is_some() => "lref".into(),
                Some(b) if b.ground.is_some() => "ground".into(),
                _ => loc.to_string(),
            }
        };
        let bindings = self
            .bindings()
            .into_iter()
            .map(|r| (label(&r.location), r.role, r.anchor))
            .collect();
        let tuples = self
            .tuples()
            .into_iter()
            .map(|t| (label(&t.location), t.phase, t.zone, t.provenance))
            .collect();
        (bindings, tuples)
    }

    /// Key-ordered line records: the mobile, role bindings, then one line per
    /// assignment.
    pub fn to_records(&self) -> String {
        let mut out = format!("mobile {}\n", self.mobile);
        for b in self.bindings() {
            out.push_str(&b.to_string());
            out.push('\n');
        }
        for t in self.tuples() {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
    }
}

/// Role bindings keyed by role label instead of location name.
pub type RoleBindings = BTreeSet<(String, Role, LrefRole)>;

/// Assignments keyed by role label instead of location name.
pub type RoleTuples = BTreeSet<(String, Phase, Zone, Provenance)>;

/// A breached trace invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two defined consecutive phases place the mobile in non-adjacent zones.
    Discontinuity {
        location: String,
        from: (Phase, Zone),
        to: (Phase, Zone),
    },
    MultipleLref(Vec<String>),
    MultipleGround(Vec<String>),
    /// An assignment names a location the trace never declared.
    UndeclaredLocation {
        location: String,
        phase: Phase,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Discontinuity { location, from, to } => write!(
                f,
                "continuity: {location} jumps from {} at {} to {} at {} (distance {})",
                from.1,
                from.0,
                to.1,
                to.0,
                zone_distance(from.1, to.1)
            ),
            Violation::MultipleLref(locs) => {
                write!(f, "single lref: bound on {}", locs.join(", "))
            }
            Violation::MultipleGround(locs) => {
                write!(f, "single ground: bound on {}", locs.join(", "))
            }
            Violation::UndeclaredLocation { location, phase } => {
                write!(
                    f,
                    "declared locations: {location} assigned at {phase} but never declared"
                )
            }
        }
    }
}

/// Checks every trace invariant and reports all breaches.
pub fn validate_trace(trace: &SpatiotemporalTrace) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();

    for role in [Role::Lref, Role::Ground] {
        let bound: Vec<String> = trace
            .locations
            .iter()
            .filter(|(_, b)| b.get(role).is_some())
            .map(|(k, _)| k.clone())
            .collect();
        if bound.len() > 1 {
            violations.push(match role {
                Role::Lref => Violation::MultipleLref(bound),
                Role::Ground => Violation::MultipleGround(bound),
            });
        }
    }

    for (location, phase) in trace.assignments.keys() {
        if !trace.locations.contains_key(location) {
            violations.push(Violation::UndeclaredLocation {
                location: location.clone(),
                phase: *phase,
            });
        }
    }

    let locations: BTreeSet<&String> = trace.assignments.keys().map(|(l, _)| l).collect();
    for location in locations {
        let during = trace.get(location, Phase::During);
        // An undefined During phase connects any Pre and Post.
        let Some(during) = during else { continue };
        for (a, b) in [(Phase::Pre, Phase::During), (Phase::During, Phase::Post)] {
            let za = if a == Phase::During {
                Some(during)
            } else {
                trace.get(location, a)
            };
            let zb = if b == Phase::During {
                Some(during)
            } else {
                trace.get(location, b)
            };
            if let (Some(za), Some(zb)) = (za, zb) {
                if zone_distance(za.zone, zb.zone) > 1 {
                    violations.push(Violation::Discontinuity {
                        location: location.clone(),
                        from: (a, za.zone),
                        to: (b, zb.zone),
                    });
                }
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}
