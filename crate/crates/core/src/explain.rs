use std::fmt::Write;

use crate::compose::Derivation;
use crate::lexicon::{classify_prep, classify_verb};
use crate::trace::Role;

/// Human-readable account of a derivation: the inputs, the rule that fired,
/// the rules it beat, role bindings, the zone table and the raw records.
pub fn explain(d: &Derivation) -> String {
    let mut out = String::new();
    let c = &d.complex;
    let _ = writeln!(out, "motion complex: {c}, mobile {}", c.mobile);

    let verb_class = classify_verb(&d.verb).map(|k| k.id()).unwrap_or_else(|_| "?".into());
    let role = d.verb.profile().map(|p| p.lref_role.name()).unwrap_or("?");
    let _ = writeln!(out, "verb: {} (CoL, lref {role}, class {verb_class})", d.verb.lemma);
    let group = classify_prep(&d.prep).map(|g| g.id()).unwrap_or_else(|_| "?".into());
    let attained = if d.prep.attained() { "" } else { ", not attained" };
    let _ = writeln!(out, "prep: {} (group {group}{attained})", d.prep.lemma);
    let _ = writeln!(out, "features: {}", d.features);
    let _ = writeln!(
        out,
        "fired: {} ({}, priority {}): {}",
        d.fired.id, d.fired.strength, d.fired.priority, d.fired.conclusion
    );
    if d.defeated.is_empty() {
        out.push_str("defeated: none\n");
    } else {
        out.push_str("defeated:\n");
        for x in &d.defeated {
            let _ = writeln!(out, "  {}: {}", x.rule, x.reason);
        }
    }

    out.push_str("bindings:\n");
    for (location, b) in d.trace.locations() {
        let line = match (b.lref, b.ground) {
            (Some(r), Some(_)) => format!("ground identified with lref of {} ({r} location)", d.verb.lemma),
            (Some(r), None) => format!("implicit lref of {} ({r} location)", d.verb.lemma),
            (None, Some(r)) => format!("ground of {}, bound as {r} location", d.prep.lemma),
            (None, None) => "no role".to_string(),
        };
        let _ = writeln!(out, "  {location}: {line}");
    }

    let tuples = d.trace.tuples();
    let width = tuples
        .iter()
        .map(|t| t.location.chars().count())
        .chain(std::iter::once("location".len()))
        .max()
        .unwrap_or(0);
    out.push_str("zones:\n");
    let _ = writeln!(
        out,
        "  {:<width$}  {:<6}  {:<8}  provenance",
        "location", "phase", "zone"
    );
    for t in &tuples {
        let pad = width - t.location.chars().count();
        let _ = writeln!(
            out,
            "  {}{}  {:<6}  {:<8}  {}",
            t.location,
            " ".repeat(pad),
            t.phase.name(),
            t.zone.name(),
            t.provenance.label()
        );
    }

    let emergent = tuples
        .iter()
        .filter(|t| t.provenance == crate::trace::Provenance::Interaction)
        .count();
    if emergent > 0 {
        let _ = writeln!(
            out,
            "emergent facts: {emergent} (in neither the verb nor the preposition)"
        );
    }
    if d.trace.location_with(Role::Ground).is_none() {
        out.push_str("warning: no ground binding\n");
    }

    out.push_str("records:\n");
    for line in d.trace.to_records().lines() {
        let _ = writeln!(out, "  {line}");
    }
    out
}
