//! The shipped seed data, compiled in so the CLI and the C interface work
//! without any files on disk.

use crate::lexicon::{load_lexicon, ClassInventory, Lexicon};
use crate::rules::RuleBase;

pub const LEXICON_FR: &str = include_str!("../data/lexicon_fr.tsv");
pub const LEXICON_EN: &str = include_str!("../data/lexicon_en.tsv");
pub const RULES: &str = include_str!("../data/rules.tsv");
pub const VERB_CLASSES: &str = include_str!("../data/verb_classes.tsv");
pub const GOLDEN_CORPUS: &str = include_str!("../data/golden.corpus");

/// Both seed lexicons merged.
pub fn lexicon() -> Lexicon {
    let mut lex = load_lexicon(LEXICON_FR, None).expect("seed French lexicon loads");
    lex.merge(load_lexicon(LEXICON_EN, None).expect("seed English lexicon loads"))
        .expect("seed languages are distinct");
    lex
}

pub fn rules() -> RuleBase {
    RuleBase::parse(RULES).expect("seed rule base parses")
}

pub fn verb_classes() -> ClassInventory {
    ClassInventory::parse(VERB_CLASSES).expect("seed class inventory parses")
}
