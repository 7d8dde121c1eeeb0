//! Verb and preposition lexicons.
//!
//! Entries are loaded from a line-oriented format (see [`format`]) and
//! validated against a verb class inventory (see [`classify`]). A [`Lexicon`]
//! holds one set of entries per language.

mod classify;
mod format;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use classify::{classify_prep, classify_verb, ClassInventory, PrepGroup, VerbClass};
pub use format::{load_lexicon, load_lexicon_with};

use crate::error::{Error, Result};
use crate::zone::{LrefRole, UnknownName, Zone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    Fr,
    En,
}

impl Language {
    pub const ALL: [Language; 2] = [Language::Fr, Language::En];

    pub fn tag(self) -> &'static str {
        match self {
            Language::Fr => "fr",
            Language::En => "en",
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Language {
    type Err = UnknownName;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "fr" => Ok(Language::Fr),
            "en" => Ok(Language::En),
            _ => Err(UnknownName(s.to_string())),
        }
    }
}

/// What kind of "location" a verb intrinsically refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocationKind {
    /// A concrete place (a room, a street).
    Location,
    /// A part of a location.
    Position,
    /// A way to be in a position (standing, sitting).
    Posture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerbCategory {
    /// Change of location.
    CoL,
    /// Change of position that always occurs.
    CoPs,
    /// Inertial change of position: the change may not occur ("run in place").
    ICoPs,
    /// Change of posture.
    CoPtu,
}

impl VerbCategory {
    pub const ALL: [VerbCategory; 4] = [
        VerbCategory::CoL,
        VerbCategory::CoPs,
        VerbCategory::ICoPs,
        VerbCategory::CoPtu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VerbCategory::CoL => "CoL",
            VerbCategory::CoPs => "CoPs",
            VerbCategory::ICoPs => "ICoPs",
            VerbCategory::CoPtu => "CoPtu",
        }
    }

    pub fn location_kind(self) -> LocationKind {
        match self {
            VerbCategory::CoL => LocationKind::Location,
            VerbCategory::CoPs | VerbCategory::ICoPs => LocationKind::Position,
            VerbCategory::CoPtu => LocationKind::Posture,
        }
    }
}

impl fmt::Display for VerbCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VerbCategory {
    type Err = UnknownName;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        VerbCategory::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// Zone constraints of a change-of-location verb, all relative to the verb's
/// implicit reference location (lref).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColProfile {
    /// Which part of the motion the lref anchors.
    pub lref_role: LrefRole,
    pub start_zone: Zone,
    pub end_zone: Zone,
    /// Zone on the path; only medial-lref verbs carry one.
    pub during_zone: Option<Zone>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerbKind {
    ChangeOfLocation(ColProfile),
    ChangeOfPosition,
    InertialChangeOfPosition,
    ChangeOfPosture,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerbEntry {
    pub lemma: String,
    pub kind: VerbKind,
    pub gloss: Option<String>,
}

impl VerbEntry {
    pub fn col(lemma: &str, lref_role: LrefRole, start_zone: Zone, end_zone: Zone) -> Self {
        VerbEntry {
            lemma: lemma.to_string(),
            kind: VerbKind::ChangeOfLocation(ColProfile {
                lref_role,
                start_zone,
                end_zone,
                during_zone: None,
            }),
            gloss: None,
        }
    }

    pub fn category(&self) -> VerbCategory {
        match self.kind {
            VerbKind::ChangeOfLocation(_) => VerbCategory::CoL,
            VerbKind::ChangeOfPosition => VerbCategory::CoPs,
            VerbKind::InertialChangeOfPosition => VerbCategory::ICoPs,
            VerbKind::ChangeOfPosture => VerbCategory::CoPtu,
        }
    }

    pub fn profile(&self) -> Option<&ColProfile> {
        match &self.kind {
            VerbKind::ChangeOfLocation(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrepKind {
    Positional,
    Directional,
}

impl PrepKind {
    pub fn name(self) -> &'static str {
        match self {
            PrepKind::Positional => "pos",
            PrepKind::Directional => "dir",
        }
    }
}

impl fmt::Display for PrepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PrepKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "pos" => Ok(PrepKind::Positional),
            "dir" => Ok(PrepKind::Directional),
            _ => Err(UnknownName(s.to_string())),
        }
    }
}

/// Positional prepositions assert a static relation; directional ones also
/// say which part of the motion they are about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrepSense {
    Positional,
    Directional {
        role: LrefRole,
        /// Whether the zone is reached ("jusqu'à") or only aimed at ("vers").
        /// Only final prepositions may set this to false.
        attained: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrepEntry {
    pub lemma: String,
    pub sense: PrepSense,
    pub zone: Zone,
    pub language: Language,
}

impl PrepEntry {
    pub fn positional(lemma: &str, zone: Zone, language: Language) -> Self {
        PrepEntry {
            lemma: lemma.to_string(),
            sense: PrepSense::Positional,
            zone,
            language,
        }
    }

    pub fn directional(lemma: &str, role: LrefRole, zone: Zone, attained: bool, language: Language) -> Self {
        PrepEntry {
            lemma: lemma.to_string(),
            sense: PrepSense::Directional { role, attained },
            zone,
            language,
        }
    }

    pub fn kind(&self) -> PrepKind {
        match self.sense {
            PrepSense::Positional => PrepKind::Positional,
            PrepSense::Directional { .. } => PrepKind::Directional,
        }
    }

    pub fn role(&self) -> Option<LrefRole> {
        match self.sense {
            PrepSense::Positional => None,
            PrepSense::Directional { role, .. } => Some(role),
        }
    }

    /// True for everything except non-attained directional finals.
    pub fn attained(&self) -> bool {
        match self.sense {
            PrepSense::Positional => true,
            PrepSense::Directional { attained, .. } => attained,
        }
    }
}

/// Entries for one language.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Entries {
    pub(crate) verbs: BTreeMap<String, VerbEntry>,
    pub(crate) preps: BTreeMap<String, PrepEntry>,
}

impl Entries {
    pub fn verbs(&self) -> impl Iterator<Item = &VerbEntry> {
        self.verbs.values()
    }

    pub fn preps(&self) -> impl Iterator<Item = &PrepEntry> {
        self.preps.values()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Lexicon {
    languages: BTreeMap<Language, Entries>,
}

impl Lexicon {
    pub fn new() -> Self {
        Lexicon::default()
    }

    pub(crate) fn single(language: Language, entries: Entries) -> Self {
        Lexicon {
            languages: BTreeMap::from([(language, entries)]),
        }
    }

    /// Adds every language of `other`. A language may only be loaded once.
    pub fn merge(&mut self, other: Lexicon) -> Result<()> {
        for (language, entries) in other.languages {
            if self.languages.contains_key(&language) {
                return Err(Error::IllFormedEntry {
                    line: None,
                    reason: format!("language {language} is already loaded"),
                });
            }
            self.languages.insert(language, entries);
        }
        Ok(())
    }

    pub fn languages(&self) -> impl Iterator<Item = Language> + '_ {
        self.languages.keys().copied()
    }

    pub fn entries(&self, language: Language) -> Option<&Entries> {
        self.languages.get(&language)
    }

    pub fn verbs(&self, language: Language) -> impl Iterator<Item = &VerbEntry> {
        self.languages.get(&language).into_iter().flat_map(|e| e.verbs.values())
    }

    pub fn preps(&self, language: Language) -> impl Iterator<Item = &PrepEntry> {
        self.languages.get(&language).into_iter().flat_map(|e| e.preps.values())
    }

    pub fn lookup_verb(&self, language: Language, lemma: &str) -> Result<&VerbEntry> {
        self.languages
            .get(&language)
            .and_then(|e| e.verbs.get(lemma))
            .ok_or_else(|| Error::UnknownLemma {
                language: language.to_string(),
                lemma: lemma.to_string(),
            })
    }

    pub fn lookup_prep(&self, language: Language, lemma: &str) -> Result<&PrepEntry> {
        self.languages
            .get(&language)
            .and_then(|e| e.preps.get(lemma))
            .ok_or_else(|| Error::UnknownLemma {
                language: language.to_string(),
                lemma: lemma.to_string(),
            })
    }

    /// Preposition groups that at least one entry of `language` falls in.
    pub fn instantiated_groups(&self, language: Language) -> Vec<PrepGroup> {
        let mut groups: Vec<PrepGroup> = self.preps(language).map(PrepGroup::of).collect();
        groups.sort();
        groups.dedup();
        groups
    }

    /// Serializes one language back into the lexicon line format.
    pub fn to_text(&self, language: Language) -> String {
        format::write_lexicon(language, self.languages.get(&language))
    }
}
