//! Compositional semantics for motion verbs combined with spatial
//! prepositional phrases, in French and English.
//!
//! A change-of-location verb such as *sortir* and a preposition such as
//! *dans* are looked up in a [`Lexicon`], turned into a feature vector, and
//! combined by a defeasible [`RuleBase`]. The result is a
//! [`SpatiotemporalTrace`]: the zone the mobile occupies relative to each
//! location before, during and after the motion, with the source of every
//! fact.
//!
//! ```
//! use motion_semantics::{Engine, Language, MotionComplex};
//!
//! let engine = Engine::seed();
//! let d = engine.compose(&MotionComplex::new("sortir", "dans", "jardin", Language::Fr)).unwrap();
//! assert_eq!(d.fired.id, "D2-initial");
//! ```

pub mod compose;
pub mod corpus;
pub mod error;
pub mod explain;
pub mod lexicon;
pub mod rules;
pub mod seed;
mod text;
pub mod trace;
pub mod zone;

pub use compose::{compose, Derivation, Engine, MotionComplex};
pub use error::{Error, ExitCode, Result};
pub use explain::explain;
pub use lexicon::{load_lexicon, Language, Lexicon};
pub use rules::{lint_rulebase, RuleBase};
pub use trace::{validate_trace, Provenance, SpatiotemporalTrace, Tuple};
pub use zone::{interpolate_zones, zone_distance, LrefRole, Phase, Zone};
