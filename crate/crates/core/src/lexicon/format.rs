//! The lexicon line format.
//!
//! ```text
//! LANG fr
//! V <lemma> <CoL|CoPs|ICoPs|CoPtu> [<initial|medial|final> <start> <end>] [during=<zone>] [gloss=...]
//! P <lemma> <pos|dir> [<initial|medial|final>] <zone> [attained=true|false]
//! ```
//!
//! Fields are tab-separated; `#` starts a comment line.

use std::collections::btree_map::Entry;

use super::{
    classify_prep, ClassInventory, ColProfile, Entries, Language, Lexicon, PrepEntry, PrepKind, PrepSense,
    VerbCategory, VerbEntry, VerbKind,
};
use crate::error::{Error, Result};
use crate::text::content_lines;
use crate::zone::{LrefRole, Zone};

/// Loads one language's entries, validated against the default class
/// inventory. `language` is checked against the `LANG` header, or used in its
/// place when the header is missing.
pub fn load_lexicon(source: &str, language: Option<Language>) -> Result<Lexicon> {
    load_lexicon_with(source, language, &ClassInventory::default())
}

pub fn load_lexicon_with(source: &str, language: Option<Language>, inventory: &ClassInventory) -> Result<Lexicon> {
    let mut header: Option<Language> = None;
    let mut entries = Entries::default();
    let mut pending_preps: Vec<(usize, Vec<&str>)> = Vec::new();

    for (line, fields) in content_lines(source) {
        match fields[0] {
            "LANG" => {
                if header.is_some() || !entries.verbs.is_empty() || !pending_preps.is_empty() {
                    return Err(ill(line, "LANG must appear once, before any entry"));
                }
                let tag = fields.get(1).ok_or_else(|| ill(line, "LANG needs a tag"))?;
                let lang: Language = tag
                    .parse()
                    .map_err(|_| ill(line, &format!("unknown language `{tag}`")))?;
                if let Some(expected) = language {
                    if expected != lang {
                        return Err(ill(line, &format!("file is {lang}, expected {expected}")));
                    }
                }
                header = Some(lang);
            }
            "V" => {
                let verb = parse_verb(line, &fields, inventory)?;
                match entries.verbs.entry(verb.lemma.clone()) {
                    Entry::Occupied(_) => {
                        return Err(Error::DuplicateLemma {
                            line,
                            lemma: verb.lemma,
                        })
                    }
                    Entry::Vacant(v) => {
                        v.insert(verb);
                    }
                }
            }
            // Prep entries carry their language, which may only be known
            // once the header has been seen.
            "P" => pending_preps.push((line, fields)),
            other => return Err(ill(line, &format!("unknown record type `{other}`"))),
        }
    }

    let lang = header.or(language).ok_or_else(|| Error::IllFormedEntry {
        line: None,
        reason: "no LANG header and no language given".into(),
    })?;
    for (line, fields) in pending_preps {
        let prep = parse_prep(line, &fields, lang)?;
        match entries.preps.entry(prep.lemma.clone()) {
            Entry::Occupied(_) => {
                return Err(Error::DuplicateLemma {
                    line,
                    lemma: prep.lemma,
                })
            }
            Entry::Vacant(v) => {
                v.insert(prep);
            }
        }
    }
    Ok(Lexicon::single(lang, entries))
}

fn ill(line: usize, reason: &str) -> Error {
    Error::IllFormedEntry {
        line: Some(line),
        reason: reason.to_string(),
    }
}

fn zone(line: usize, name: &str) -> Result<Zone> {
    name.parse().map_err(|_| Error::UnknownZoneName {
        line,
        name: name.to_string(),
    })
}

fn role(line: usize, name: &str) -> Result<LrefRole> {
    name.parse().map_err(|_| ill(line, &format!("unknown role `{name}`")))
}

/// Splits trailing `key=value` options off the positional fields. `gloss=`
/// swallows the rest of the line so whitespace-separated files keep
/// multi-word glosses.
fn split_options<'a>(fields: &[&'a str]) -> (Vec<&'a str>, Vec<(&'a str, String)>) {
    let mut positional = Vec::new();
    let mut options = Vec::new();
    let mut i = 0;
    while i < fields.len() {
        let f = fields[i];
        if let Some(rest) = f.strip_prefix("gloss=") {
            let mut gloss = rest.to_string();
            for more in &fields[i + 1..] {
                gloss.push(' ');
                gloss.push_str(more);
            }
            options.push(("gloss", gloss));
            break;
        } else if let Some((k, v)) = f.split_once('=') {
            options.push((k, v.to_string()));
        } else {
            positional.push(f);
        }
        i += 1;
    }
    (positional, options)
}

fn parse_verb(line: usize, fields: &[&str], inventory: &ClassInventory) -> Result<VerbEntry> {
    let (positional, options) = split_options(&fields[1..]);
    let [lemma, category, rest @ ..] = positional.as_slice() else {
        return Err(ill(line, "verb lines need a lemma and a category"));
    };
    let category: VerbCategory = category
        .parse()
        .map_err(|_| ill(line, &format!("unknown verb category `{category}`")))?;

    let mut gloss = None;
    let mut during = None;
    for (key, value) in options {
        match key {
            "gloss" => gloss = Some(value),
            "during" => during = Some(zone(line, &value)?),
            _ => return Err(ill(line, &format!("unknown option `{key}`"))),
        }
    }

    let kind = match category {
        VerbCategory::CoL => {
            let [r, start, end] = rest else {
                return Err(ill(line, "CoL verbs need an lref role, a start zone and an end zone"));
            };
            let profile = ColProfile {
                lref_role: role(line, r)?,
                start_zone: zone(line, start)?,
                end_zone: zone(line, end)?,
                during_zone: during,
            };
            inventory.check_profile(&profile, Some(line))?;
            VerbKind::ChangeOfLocation(profile)
        }
        _ if !rest.is_empty() || during.is_some() => {
            return Err(ill(line, &format!("{category} verbs carry no zone fields")))
        }
        VerbCategory::CoPs => VerbKind::ChangeOfPosition,
        VerbCategory::ICoPs => VerbKind::InertialChangeOfPosition,
        VerbCategory::CoPtu => VerbKind::ChangeOfPosture,
    };

    Ok(VerbEntry {
        lemma: lemma.to_string(),
        kind,
        gloss,
    })
}

fn parse_prep(line: usize, fields: &[&str], language: Language) -> Result<PrepEntry> {
    let (positional, options) = split_options(&fields[1..]);
    let [lemma, kind, rest @ ..] = positional.as_slice() else {
        return Err(ill(line, "preposition lines need a lemma and a kind"));
    };
    let kind: PrepKind = kind
        .parse()
        .map_err(|_| ill(line, &format!("unknown preposition kind `{kind}`")))?;

    let mut attained = None;
    for (key, value) in options {
        match (key, value.as_str()) {
            ("attained", "true") => attained = Some(true),
            ("attained", "false") => attained = Some(false),
            _ => return Err(ill(line, &format!("bad option `{key}={value}`"))),
        }
    }

    let (sense, zone_name) = match (kind, rest) {
        (PrepKind::Positional, [z]) => {
            if attained.is_some() {
                return Err(ill(line, "positional prepositions carry no attained flag"));
            }
            (PrepSense::Positional, *z)
        }
        (PrepKind::Directional, [r, z]) => {
            let role = role(line, r)?;
            if attained.is_some() && role != LrefRole::Final {
                return Err(ill(line, "only final prepositions carry an attained flag"));
            }
            let attained = attained.unwrap_or(true);
            (PrepSense::Directional { role, attained }, *z)
        }
        (PrepKind::Positional, _) => return Err(ill(line, "positional prepositions take exactly a zone")),
        (PrepKind::Directional, _) => return Err(ill(line, "directional prepositions take a role and a zone")),
    };

    let entry = PrepEntry {
        lemma: lemma.to_string(),
        sense,
        zone: zone(line, zone_name)?,
        language,
    };
    classify_prep(&entry).map_err(|e| match e {
        Error::IllFormedEntry { reason, .. } => ill(line, &reason),
        other => other,
    })?;
    Ok(entry)
}

pub(super) fn write_lexicon(language: Language, entries: Option<&Entries>) -> String {
    let mut out = format!("LANG\t{language}\n");
    let Some(entries) = entries else { return out };
    for verb in entries.verbs.values() {
        out.push_str("V\t");
        out.push_str(&verb.lemma);
        out.push('\t');
        out.push_str(verb.category().name());
        if let Some(p) = verb.profile() {
            out.push_str(&format!("\t{}\t{}\t{}", p.lref_role, p.start_zone, p.end_zone));
            if let Some(d) = p.during_zone {
                out.push_str(&format!("\tduring={d}"));
            }
        }
        if let Some(g) = &verb.gloss {
            out.push_str(&format!("\tgloss={g}"));
        }
        out.push('\n');
    }
    for prep in entries.preps.values() {
        out.push_str(&format!("P\t{}\t{}", prep.lemma, prep.kind()));
        match prep.sense {
            PrepSense::Positional => out.push_str(&format!("\t{}", prep.zone)),
            PrepSense::Directional { role, attained } => {
                out.push_str(&format!("\t{role}\t{}", prep.zone));
                if !attained {
                    out.push_str("\tattained=false");
                }
            }
        }
        out.push('\n');
    }
    out
}
