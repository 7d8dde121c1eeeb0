use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use motion_semantics::lexicon::load_lexicon;
use motion_semantics::rules::{lint_rulebase, CompositionRule};
use motion_semantics::trace::{Role, RoleTuples, Tuple};
use motion_semantics::{
    interpolate_zones, seed, validate_trace, zone_distance, Engine, Language, MotionComplex, Phase, Provenance,
    RuleBase, SpatiotemporalTrace, Zone,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tuple(location: &str, phase: Phase, zone: Zone, provenance: Provenance) -> Tuple {
    Tuple {
        location: location.to_string(),
        phase,
        zone,
        provenance,
    }
}

fn compose(
    engine: &Engine,
    verb: &str,
    prep: &str,
    ground: &str,
    lang: Language,
) -> Result<motion_semantics::Derivation, String> {
    engine
        .compose(&MotionComplex::new(verb, prep, ground, lang))
        .map_err(|e| format!("{verb} {prep} {ground}: {e}"))
}

fn sortir_dans_jardin() -> Check {
    let start = Instant::now();
    let engine = Engine::seed();
    let d = compose(&engine, "sortir", "dans", "jardin", Language::Fr)?;
    let elapsed = start.elapsed();
    let expected = vec![
        tuple("jardin", Phase::Post, Zone::Inside, Provenance::Interaction),
        tuple("lref#sortir", Phase::Pre, Zone::Inside, Provenance::Verb),
        tuple("lref#sortir", Phase::Post, Zone::Proximal, Provenance::Verb),
    ];
    ensure(d.trace.tuples() == expected, || {
        format!("tuples {:?}", d.trace.tuples())
    })?;
    let ground = d.trace.binding("jardin").ok_or("jardin unbound")?;
    ensure(
        ground.ground == Some(motion_semantics::LrefRole::Final) && ground.lref.is_none(),
        || format!("jardin binding {ground:?}"),
    )?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))
}

fn cross_lingual_contrast() -> Check {
    let engine = Engine::seed();
    let fr = compose(&engine, "sortir", "dans", "jardin", Language::Fr)?;
    let en = compose(&engine, "go-out", "into", "garden", Language::En)?;
    let (fr_bind, fr_tuples) = fr.trace.role_view();
    let (en_bind, en_tuples) = en.trace.role_view();
    ensure(fr_bind == en_bind, || format!("bindings {fr_bind:?} vs {en_bind:?}"))?;
    let without_prov = |s: &RoleTuples| -> BTreeSet<(String, Phase, Zone)> {
        s.iter().map(|(l, p, z, _)| (l.clone(), *p, *z)).collect()
    };
    ensure(without_prov(&fr_tuples) == without_prov(&en_tuples), || {
        format!("zones {fr_tuples:?} vs {en_tuples:?}")
    })?;
    let ground = en.trace.location_with(Role::Ground).ok_or("no ground")?.to_string();
    let emergent = en
        .trace
        .tuples()
        .into_iter()
        .filter(|t| t.location == ground && t.provenance == Provenance::Interaction)
        .count();
    ensure(emergent == 0, || {
        format!("{emergent} Interaction tags on the English ground")
    })?;
    let fr_emergent = fr_tuples.iter().filter(|t| t.3 == Provenance::Interaction).count();
    ensure(fr_emergent == 1, || {
        format!("French has {fr_emergent} Interaction tags")
    })
}

fn role_diff(engine: &Engine, a: (&str, &str), b: (&str, &str)) -> Result<(RoleTuples, RoleTuples), String> {
    let da = compose(engine, a.0, a.1, "x", Language::Fr)?;
    let db = compose(engine, b.0, b.1, "x", Language::Fr)?;
    let (ba, ta) = da.trace.role_view();
    let (bb, tb) = db.trace.role_view();
    if ba != bb {
        return Err(format!("{a:?} and {b:?} bind roles differently"));
    }
    Ok((
        ta.difference(&tb).cloned().collect(),
        tb.difference(&ta).cloned().collect(),
    ))
}

fn minimal_pairs() -> Check {
    let engine = Engine::seed();
    let (only_sortir, only_partir) = role_diff(&engine, ("sortir", "dans"), ("partir", "dans"))?;
    let lref = |z| BTreeSet::from([("lref".to_string(), Phase::Post, z, Provenance::Verb)]);
    ensure(
        only_sortir == lref(Zone::Proximal) && only_partir == lref(Zone::Distal),
        || format!("sortir/partir diff {only_sortir:?} vs {only_partir:?}"),
    )?;

    let (only_entrer, only_atterrir) = role_diff(&engine, ("entrer", "dans"), ("atterrir", "sur"))?;
    let both = |z| BTreeSet::from([("lref+ground".to_string(), Phase::Post, z, Provenance::Verb)]);
    ensure(
        only_entrer == both(Zone::Inside) && only_atterrir == both(Zone::Contact),
        || format!("entrer/atterrir diff {only_entrer:?} vs {only_atterrir:?}"),
    )
}

fn discontinuous_traces() -> Vec<SpatiotemporalTrace> {
    use Phase::*;
    use Zone::*;
    let mut out = Vec::new();
    let hand: [&[(Phase, Zone)]; 6] = [
        &[(Pre, Inside), (During, Proximal)],
        &[(During, Inside), (Post, Distal)],
        &[(Pre, Distal), (During, Contact), (Post, Inside)],
        &[(Pre, Contact), (During, Distal)],
        &[(Pre, Inside), (During, Contact), (Post, Distal)],
        &[(Pre, Proximal), (During, Inside), (Post, Proximal)],
    ];
    for steps in hand {
        let mut t = SpatiotemporalTrace::new("m");
        t.declare("l");
        for &(phase, zone) in steps {
            t.assign("l", phase, zone, Provenance::Verb);
        }
        out.push(t);
    }
    for pre in Zone::ALL {
        for during in Zone::ALL {
            for post in Zone::ALL {
                if zone_distance(pre, during) > 1 || zone_distance(during, post) > 1 {
                    let mut t = SpatiotemporalTrace::new("m");
                    t.declare("l")
                        .assign("l", Pre, pre, Provenance::Verb)
                        .assign("l", During, during, Provenance::Verb)
                        .assign("l", Post, post, Provenance::Verb);
                    out.push(t);
                }
            }
        }
    }
    out
}

fn zone_algebra() -> Check {
    for a in Zone::ALL {
        for b in Zone::ALL {
            ensure((zone_distance(a, b) == 0) == (a == b), || format!("identity {a} {b}"))?;
            ensure(zone_distance(a, b) == zone_distance(b, a), || {
                format!("symmetry {a} {b}")
            })?;
            let mut back = interpolate_zones(b, a);
            back.reverse();
            ensure(interpolate_zones(a, b) == back, || format!("reversal {a} {b}"))?;
            for c in Zone::ALL {
                ensure(zone_distance(a, c) <= zone_distance(a, b) + zone_distance(b, c), || {
                    format!("triangle {a} {b} {c}")
                })?;
            }
        }
    }
    let traces = discontinuous_traces();
    for t in &traces {
        ensure(validate_trace(t).is_err(), || format!("accepted {}", t.to_records()))?;
    }
    let mut open = SpatiotemporalTrace::new("m");
    open.declare("l")
        .assign("l", Phase::Pre, Zone::Inside, Provenance::Verb)
        .assign("l", Phase::Post, Zone::Distal, Provenance::Verb);
    ensure(validate_trace(&open).is_ok(), || {
        "rejected a trace with no during phase".into()
    })?;
    ensure(traces.len() > 30, || {
        format!("only {} discontinuous traces", traces.len())
    })
}

fn rule_base_totality() -> Check {
    let report = lint_rulebase(&seed::rules());
    ensure(report.gap_cells().is_empty() && report.tie_cells().is_empty(), || {
        report.render()
    })
}

/// Fired rule and records, or the error name, per (language, verb, prep).
type Partition = BTreeMap<(Language, String, String), Result<String, String>>;

fn sweep(engine: &Engine) -> Result<Partition, String> {
    let mut out = BTreeMap::new();
    for language in [Language::Fr, Language::En] {
        for verb in engine.lexicon.verbs(language).filter(|v| v.profile().is_some()) {
            for prep in engine.lexicon.preps(language) {
                let complex = MotionComplex::new(&verb.lemma, &prep.lemma, "ground", language);
                let outcome = match engine.compose(&complex) {
                    Ok(d) => {
                        if validate_trace(&d.trace).is_err() {
                            return Err(format!("{complex} produced an invalid trace"));
                        }
                        Ok(format!("{}\n{}", d.fired.id, d.trace.to_records()))
                    }
                    Err(e) if e.name() == "Infelicitous" => Err(e.name().to_string()),
                    Err(e) => return Err(format!("{complex}: unexpected {e}")),
                };
                out.insert((language, verb.lemma.clone(), prep.lemma.clone()), outcome);
            }
        }
    }
    Ok(out)
}

fn oracle_sweep() -> Check {
    let first = sweep(&Engine::seed())?;
    let second = sweep(&Engine::seed())?;
    ensure(first == second, || "two runs disagree".into())?;
    let infelicitous = first.values().filter(|o| o.is_err()).count();
    ensure(
        first.len() > 300 && infelicitous > 0 && infelicitous < first.len(),
        || format!("{} complexes, {infelicitous} infelicitous", first.len()),
    )
}

fn nonmonotonicity() -> Check {
    let base = Engine::seed();
    let before = compose(&base, "sortir", "dans", "jardin", Language::Fr)?;
    let override_rule: CompositionRule =
        RuleBase::parse("R\tX1\tstrict\t0\tlrefrole=initial&prepkind=pos\tbind(pre) prov=interaction")
            .map_err(|e| e.to_string())?
            .rules()[0]
            .clone();
    let rules = seed::rules().with_rule(override_rule).map_err(|e| e.to_string())?;
    let extended = Engine::new(seed::lexicon(), rules);
    let after = compose(&extended, "sortir", "dans", "jardin", Language::Fr)?;
    let ground = |d: &motion_semantics::Derivation| {
        d.trace
            .tuples()
            .into_iter()
            .filter(|t| t.location == "jardin")
            .map(|t| (t.phase, t.zone))
            .collect::<Vec<_>>()
    };
    ensure(before.fired.id == "D2-initial" && after.fired.id == "X1", || {
        format!("fired {} then {}", before.fired.id, after.fired.id)
    })?;
    ensure(
        ground(&before) == [(Phase::Post, Zone::Inside)] && ground(&after) == [(Phase::Pre, Zone::Inside)],
        || format!("ground {:?} then {:?}", ground(&before), ground(&after)),
    )?;
    let unaffected = compose(&extended, "entrer", "dans", "jardin", Language::Fr)?;
    ensure(unaffected.fired.id == "D1", || {
        "override leaked into entrer+dans".into()
    })
}

fn round_trip() -> Check {
    for (lang, src) in [(Language::Fr, seed::LEXICON_FR), (Language::En, seed::LEXICON_EN)] {
        let lex = load_lexicon(src, Some(lang)).map_err(|e| e.to_string())?;
        let again = load_lexicon(&lex.to_text(lang), Some(lang)).map_err(|e| e.to_string())?;
        ensure(lex == again, || format!("{lang} lexicon changed"))?;
    }
    let rules = seed::rules();
    let again = RuleBase::parse(&rules.to_text()).map_err(|e| e.to_string())?;
    ensure(rules == again, || "rule base changed".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "sortir dans jardin binds the garden as final ground",
            sortir_dans_jardin,
        ),
        ("go-out into garden cross-lingual contrast", cross_lingual_contrast),
        ("minimal pairs sortir/partir and entrer/atterrir", minimal_pairs),
        ("zone algebra and discontinuity rejection", zone_algebra),
        ("rule base totality on the 12-cell grid", rule_base_totality),
        ("oracle sweep over both seed lexicons", oracle_sweep),
        ("nonmonotonicity under a strict override", nonmonotonicity),
        ("seed lexicon and rule base round trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {}: {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
