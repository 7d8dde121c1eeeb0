//! The four-zone structure induced by a location, and the three motion phases.
//!
//! A location splits space into four regions that are linearly adjacent:
//!
//! ```text
//! inside | contact | proximal | distal
//! ```
//!
//! Moving between two zones that are not neighbours means crossing every zone
//! in between. The phase skeleton (`pre`, `during`, `post`) is the temporal
//! side of the same picture.

use std::fmt;
use std::str::FromStr;

/// One of the four regions a location induces around itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Zone {
    /// The inside of the location.
    Inside,
    /// The external zone of contact with the location.
    Contact,
    /// Outside, but within the limit of proximity.
    Proximal,
    /// The far away outside.
    Distal,
}

impl Zone {
    pub const ALL: [Zone; 4] = [Zone::Inside, Zone::Contact, Zone::Proximal, Zone::Distal];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Zone> {
        Zone::ALL.get(index).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Zone::Inside => "inside",
            Zone::Contact => "contact",
            Zone::Proximal => "proximal",
            Zone::Distal => "distal",
        }
    }

    pub fn is_adjacent(self, other: Zone) -> bool {
        zone_distance(self, other) == 1
    }
}

impl fmt::Display for Zone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Returned when a string is not one of the fixed zone, phase or role names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownName(pub String);

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown name `{}`", self.0)
    }
}

impl std::error::Error for UnknownName {}

impl FromStr for Zone {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Zone::ALL
            .into_iter()
            .find(|z| z.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// Number of adjacency steps between two zones.
pub fn zone_distance(a: Zone, b: Zone) -> usize {
    a.index().abs_diff(b.index())
}

/// The monotone walk from `start` to `end`, both included.
pub fn interpolate_zones(start: Zone, end: Zone) -> Vec<Zone> {
    let (s, e) = (start.index(), end.index());
    if s <= e {
        (s..=e).map(|i| Zone::ALL[i]).collect()
    } else {
        (e..=s).rev().map(|i| Zone::ALL[i]).collect()
    }
}

/// Temporal slice of a motion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Phase {
    Pre,
    During,
    Post,
}

impl Phase {
    pub const ALL: [Phase; 3] = [Phase::Pre, Phase::During, Phase::Post];

    pub fn name(self) -> &'static str {
        match self {
            Phase::Pre => "pre",
            Phase::During => "during",
            Phase::Post => "post",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Phase {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Phase::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// Which part of a motion a location anchors: where it starts, the path, or
/// where it ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LrefRole {
    Initial,
    Medial,
    Final,
}

impl LrefRole {
    pub const ALL: [LrefRole; 3] = [LrefRole::Initial, LrefRole::Medial, LrefRole::Final];

    pub fn phase(self) -> Phase {
        match self {
            LrefRole::Initial => Phase::Pre,
            LrefRole::Medial => Phase::During,
            LrefRole::Final => Phase::Post,
        }
    }

    pub fn from_phase(phase: Phase) -> LrefRole {
        match phase {
            Phase::Pre => LrefRole::Initial,
            Phase::During => LrefRole::Medial,
            Phase::Post => LrefRole::Final,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LrefRole::Initial => "initial",
            LrefRole::Medial => "medial",
            LrefRole::Final => "final",
        }
    }
}

impl fmt::Display for LrefRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LrefRole {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LrefRole::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_examples() {
        assert_eq!(zone_distance(Zone::Inside, Zone::Inside), 0);
        assert_eq!(zone_distance(Zone::Inside, Zone::Contact), 1);
        assert_eq!(zone_distance(Zone::Inside, Zone::Distal), 3);
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(
            interpolate_zones(Zone::Inside, Zone::Distal),
            vec![Zone::Inside, Zone::Contact, Zone::Proximal, Zone::Distal]
        );
        assert_eq!(interpolate_zones(Zone::Proximal, Zone::Proximal), vec![Zone::Proximal]);
        assert_eq!(
            interpolate_zones(Zone::Contact, Zone::Inside),
            vec![Zone::Contact, Zone::Inside]
        );
    }

    #[test]
    fn metric_axioms_exhaustive() {
        for a in Zone::ALL {
            for b in Zone::ALL {
                assert_eq!(zone_distance(a, b), zone_distance(b, a));
                assert_eq!(zone_distance(a, b) == 0, a == b);
                for c in Zone::ALL {
                    assert!(zone_distance(a, c) <= zone_distance(a, b) + zone_distance(b, c));
                }
            }
        }
    }

    #[test]
    fn interpolation_walks_are_adjacent_and_reversible() {
        for a in Zone::ALL {
            for b in Zone::ALL {
                let walk = interpolate_zones(a, b);
                assert_eq!(walk.len(), zone_distance(a, b) + 1);
                assert_eq!(walk.first(), Some(&a));
                assert_eq!(walk.last(), Some(&b));
                assert!(walk.windows(2).all(|w| w[0].is_adjacent(w[1])));
                let mut back = interpolate_zones(b, a);
                back.reverse();
                assert_eq!(walk, back);
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for z in Zone::ALL {
            assert_eq!(z.name().parse::<Zone>(), Ok(z));
        }
        for p in Phase::ALL {
            assert_eq!(p.name().parse::<Phase>(), Ok(p));
        }
        for r in LrefRole::ALL {
            assert_eq!(r.name().parse::<LrefRole>(), Ok(r));
            assert_eq!(LrefRole::from_phase(r.phase()), r);
        }
        assert!("outside".parse::<Zone>().is_err());
        assert!("Inside".parse::<Zone>().is_err());
    }

    #[test]
    fn orders_are_fixed() {
        assert!(Zone::Inside < Zone::Contact && Zone::Contact < Zone::Proximal);
        assert!(Zone::Proximal < Zone::Distal);
        assert!(Phase::Pre < Phase::During && Phase::During < Phase::Post);
    }
}
