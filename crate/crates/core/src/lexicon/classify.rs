//! Verb classes and preposition groups.

use std::collections::BTreeSet;
use std::fmt;

use super::{ColProfile, PrepEntry, PrepKind, PrepSense, VerbEntry};
use crate::error::{Error, Result};
use crate::text::content_lines;
use crate::zone::{zone_distance, LrefRole, Zone};

/// A change-of-location verb class: the zone the mobile occupies relative to
/// the lref at the start and at the end of the motion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerbClass {
    pub start: Zone,
    pub end: Zone,
}

impl VerbClass {
    pub fn new(start: Zone, end: Zone) -> Self {
        VerbClass { start, end }
    }

    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for VerbClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}", self.start, self.end)
    }
}

/// The set of (start, end) pairs that are lexicalized. Verbs whose lref is the
/// path (medial) stay in the same zone at both ends and are validated by
/// continuity instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInventory {
    classes: BTreeSet<VerbClass>,
}

impl Default for ClassInventory {
    fn default() -> Self {
        use Zone::*;
        let pairs = [
            (Inside, Contact),
            (Inside, Proximal),
            (Inside, Distal),
            (Contact, Inside),
            (Proximal, Inside),
            (Distal, Proximal),
            (Proximal, Contact),
            (Contact, Proximal),
            (Distal, Inside),
            (Proximal, Distal),
        ];
        ClassInventory {
            classes: pairs.into_iter().map(|(s, e)| VerbClass::new(s, e)).collect(),
        }
    }
}

impl ClassInventory {
    pub fn from_classes(classes: impl IntoIterator<Item = VerbClass>) -> Self {
        ClassInventory {
            classes: classes.into_iter().collect(),
        }
    }

    /// Reads `C <start> <end>` lines.
    pub fn parse(source: &str) -> Result<Self> {
        let mut classes = BTreeSet::new();
        for (line, fields) in content_lines(source) {
            match fields.as_slice() {
                ["C", start, end, ..] => {
                    let zone = |name: &str| {
                        name.parse::<Zone>().map_err(|_| Error::UnknownZoneName {
                            line,
                            name: name.to_string(),
                        })
                    };
                    let class = VerbClass::new(zone(start)?, zone(end)?);
                    if class.start == class.end || !classes.insert(class) {
                        return Err(Error::IllFormedEntry {
                            line: Some(line),
                            reason: format!("class {class} is degenerate or repeated"),
                        });
                    }
                }
                _ => {
                    return Err(Error::IllFormedEntry {
                        line: Some(line),
                        reason: "expected `C <start> <end>`".into(),
                    })
                }
            }
        }
        Ok(ClassInventory { classes })
    }

    pub fn classes(&self) -> impl Iterator<Item = VerbClass> + '_ {
        self.classes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn contains(&self, class: VerbClass) -> bool {
        self.classes.contains(&class)
    }

    pub fn classify(&self, entry: &VerbEntry) -> Result<VerbClass> {
        let profile = entry.profile().ok_or_else(|| Error::NotACoLVerb {
            lemma: entry.lemma.clone(),
        })?;
        self.check_profile(profile, None)
    }

    pub(crate) fn check_profile(&self, profile: &ColProfile, line: Option<usize>) -> Result<VerbClass> {
        let class = VerbClass::new(profile.start_zone, profile.end_zone);
        match (profile.lref_role, profile.during_zone) {
            (LrefRole::Medial, Some(during)) => {
                if zone_distance(profile.start_zone, during) <= 1 && zone_distance(during, profile.end_zone) <= 1 {
                    Ok(class)
                } else {
                    Err(Error::UnlexicalizedClass {
                        line,
                        class: format!("{}→{}→{}", profile.start_zone, during, profile.end_zone),
                    })
                }
            }
            (LrefRole::Medial, None) => Err(Error::IllFormedEntry {
                line,
                reason: "medial-lref verbs need a during zone".into(),
            }),
            (_, Some(_)) => Err(Error::IllFormedEntry {
                line,
                reason: "only medial-lref verbs carry a during zone".into(),
            }),
            (_, None) if class.start != class.end && self.contains(class) => Ok(class),
            (_, None) => Err(Error::UnlexicalizedClass {
                line,
                class: class.id(),
            }),
        }
    }
}

/// Class of a change-of-location verb under the default inventory.
pub fn classify_verb(entry: &VerbEntry) -> Result<VerbClass> {
    ClassInventory::default().classify(entry)
}

/// A preposition group: kind, role (directional only) and zone. There are
/// 4 positional and 12 directional groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrepGroup {
    pub kind: PrepKind,
    pub role: Option<LrefRole>,
    pub zone: Zone,
}

impl PrepGroup {
    pub(crate) fn of(entry: &PrepEntry) -> Self {
        PrepGroup {
            kind: entry.kind(),
            role: entry.role(),
            zone: entry.zone,
        }
    }

    /// The whole identifier space.
    pub fn all() -> Vec<PrepGroup> {
        let mut out: Vec<PrepGroup> = Zone::ALL
            .into_iter()
            .map(|zone| PrepGroup {
                kind: PrepKind::Positional,
                role: None,
                zone,
            })
            .collect();
        for role in LrefRole::ALL {
            for zone in Zone::ALL {
                out.push(PrepGroup {
                    kind: PrepKind::Directional,
                    role: Some(role),
                    zone,
                });
            }
        }
        out
    }

    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PrepGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.role {
            Some(role) => write!(f, "{}/{}/{}", self.kind, role, self.zone),
            None => write!(f, "{}/{}", self.kind, self.zone),
        }
    }
}

pub fn classify_prep(entry: &PrepEntry) -> Result<PrepGroup> {
    if let PrepSense::Directional { role, attained: false } = entry.sense {
        if role != LrefRole::Final {
            return Err(Error::IllFormedEntry {
                line: None,
                reason: format!("`{}`: only final prepositions can be non-attained", entry.lemma),
            });
        }
    }
    Ok(PrepGroup::of(entry))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{Language, VerbKind};

    #[test]
    fn seed_verbs_classify() {
        let sortir = VerbEntry::col("sortir", LrefRole::Initial, Zone::Inside, Zone::Proximal);
        let partir = VerbEntry::col("partir", LrefRole::Initial, Zone::Inside, Zone::Distal);
        let atterrir = VerbEntry::col("atterrir", LrefRole::Final, Zone::Proximal, Zone::Contact);
        assert_eq!(classify_verb(&sortir).unwrap().id(), "inside→proximal");
        assert_eq!(classify_verb(&partir).unwrap().id(), "inside→distal");
        assert_eq!(classify_verb(&atterrir).unwrap().id(), "proximal→contact");
    }

    #[test]
    fn default_inventory_has_ten_distinct_pairs() {
        let inv = ClassInventory::default();
        assert_eq!(inv.len(), 10);
        let ids: BTreeSet<String> = inv.classes().map(|c| c.id()).collect();
        assert_eq!(ids.len(), 10);
        assert!(inv.classes().all(|c| c.start != c.end));
    }

    #[test]
    fn class_depends_only_on_zone_pair() {
        for start in Zone::ALL {
            for end in Zone::ALL {
                let a = VerbEntry::col("a", LrefRole::Initial, start, end);
                let b = VerbEntry::col("b", LrefRole::Final, start, end);
                match (classify_verb(&a), classify_verb(&b)) {
                    (Ok(x), Ok(y)) => assert_eq!(x, y),
                    (Err(x), Err(y)) => assert_eq!(x.name(), y.name()),
                    _ => panic!("{start}→{end} classified inconsistently"),
                }
            }
        }
    }

    #[test]
    fn unlexicalized_and_non_col() {
        let odd = VerbEntry::col("x", LrefRole::Initial, Zone::Distal, Zone::Contact);
        assert_eq!(classify_verb(&odd).unwrap_err().name(), "UnlexicalizedClass");
        let same = VerbEntry::col("x", LrefRole::Initial, Zone::Inside, Zone::Inside);
        assert_eq!(classify_verb(&same).unwrap_err().name(), "UnlexicalizedClass");
        let run = VerbEntry {
            lemma: "courir".into(),
            kind: VerbKind::InertialChangeOfPosition,
            gloss: None,
        };
        assert_eq!(classify_verb(&run).unwrap_err().name(), "NotACoLVerb");
    }

    #[test]
    fn medial_verbs_checked_by_continuity() {
        let mut traverser = VerbEntry::col("traverser", LrefRole::Medial, Zone::Contact, Zone::Contact);
        assert_eq!(classify_verb(&traverser).unwrap_err().name(), "IllFormedEntry");
        if let VerbKind::ChangeOfLocation(p) = &mut traverser.kind {
            p.during_zone = Some(Zone::Inside);
        }
        assert_eq!(classify_verb(&traverser).unwrap().id(), "contact→contact");
        if let VerbKind::ChangeOfLocation(p) = &mut traverser.kind {
            p.start_zone = Zone::Proximal;
            p.end_zone = Zone::Proximal;
        }
        let err = classify_verb(&traverser).unwrap_err();
        assert_eq!(err.name(), "UnlexicalizedClass");
        assert!(err.to_string().contains("proximal→inside→proximal"));
    }

    #[test]
    fn prep_groups() {
        let dans = PrepEntry::positional("dans", Zone::Inside, Language::Fr);
        let into = PrepEntry::directional("into", LrefRole::Final, Zone::Inside, true, Language::En);
        let through = PrepEntry::directional("through", LrefRole::Medial, Zone::Inside, true, Language::En);
        assert_eq!(classify_prep(&dans).unwrap().id(), "pos/inside");
        assert_eq!(classify_prep(&into).unwrap().id(), "dir/final/inside");
        assert_eq!(classify_prep(&through).unwrap().id(), "dir/medial/inside");
        let bad = PrepEntry::directional("x", LrefRole::Initial, Zone::Inside, false, Language::En);
        assert_eq!(classify_prep(&bad).unwrap_err().name(), "IllFormedEntry");
    }

    #[test]
    fn sixteen_group_ids() {
        let ids: BTreeSet<String> = PrepGroup::all().iter().map(PrepGroup::id).collect();
        assert_eq!(ids.len(), 16);
    }

    #[test]
    fn inventory_file() {
        let inv = ClassInventory::parse("# classes\nC\tinside\tproximal\nC inside distal\n").unwrap();
        assert_eq!(inv.len(), 2);
        assert_eq!(
            ClassInventory::parse("C inside outside").unwrap_err().name(),
            "UnknownZoneName"
        );
        assert_eq!(
            ClassInventory::parse("C inside inside").unwrap_err().name(),
            "IllFormedEntry"
        );
    }
}
