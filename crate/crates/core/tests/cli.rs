use std::path::PathBuf;
use std::process::{Command, Output};

use motion_semantics::seed;

fn motion(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motion"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("motion-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn query_records_for_sortir_dans() {
    let o = motion(&["query", "sortir", "dans", "jardin", "--format", "records"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "mobile m\n\
         bind jardin ground final\n\
         bind lref#sortir lref initial\n\
         jardin post inside interaction\n\
         lref#sortir pre inside verb\n\
         lref#sortir post proximal verb\n"
    );
}

#[test]
fn query_text_has_zone_table_and_records() {
    let o = motion(&["query", "go-out", "into", "garden", "--lang", "en", "--mobile", "ann"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("fired: D4-initial-final"), "{text}");
    assert!(text.contains("Preposition"));
    assert!(text.contains("  mobile ann\n"));
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["query", "traverser", "par", "forêt"];
    assert_eq!(motion(&args).stdout, motion(&args).stdout);
    let corpus = ["corpus", concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden.corpus")];
    assert_eq!(motion(&corpus).stdout, motion(&corpus).stdout);
}

#[test]
fn exit_codes_by_error() {
    let cases: [(&[&str], i32, &str); 4] = [
        (&["query", "voler", "dans", "jardin"], 3, "UnknownLemma"),
        (&["query", "courir", "dans", "jardin"], 4, "NotACoLVerb"),
        (&["query", "sortir", "d'à côté de", "maison"], 5, "Infelicitous"),
        (&["query", "sortir", "dans", "jardin", "--lang", "de"], 2, ""),
    ];
    for (args, code, name) in cases {
        let o = motion(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(stderr(&o).contains(name), "{}", stderr(&o));
        assert!(o.stdout.is_empty());
    }
    let o = motion(&["corpus", "/nonexistent/corpus"]);
    assert_eq!(o.status.code(), Some(8));
}

#[test]
fn tied_rule_base_exits_ambiguous() {
    let rules = format!(
        "{}R\tTWIN\tdefeasible\t10\tprepkind=pos&zonecompat=yes\tidentify\n",
        seed::RULES
    );
    let path = scratch("tied.rules", &rules);
    let o = motion(&["--rules", path.to_str().unwrap(), "query", "entrer", "dans", "jardin"]);
    assert_eq!(o.status.code(), Some(6));
    assert!(stderr(&o).contains("AmbiguousRuleBase"));
}

#[test]
fn golden_corpus_passes() {
    let o = motion(&["corpus", concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden.corpus")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 fail, 0 error"));
}

#[test]
fn corpus_with_injected_wrong_zone_fails_once() {
    let wrong = seed::GOLDEN_CORPUS.replacen(
        "jardin\tpost\tinside\tinteraction",
        "jardin\tpost\tcontact\tinteraction",
        1,
    );
    assert_ne!(wrong, seed::GOLDEN_CORPUS);
    let path = scratch("wrong.corpus", &wrong);
    let o = motion(&["corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(out.matches("FAIL").count(), 1, "{out}");
    assert!(out.contains("- jardin post contact interaction"));
    assert!(out.contains("+ jardin post inside interaction"));
}

#[test]
fn empty_corpus_exits_zero() {
    let path = scratch("empty.corpus", "# no cases\n");
    let o = motion(&["corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 cases"));
}

#[test]
fn malformed_corpus_is_a_load_error() {
    let path = scratch("bad.corpus", "CASE a\nINPUT sortir dans jardin fr\n");
    let o = motion(&["corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(7));
    assert!(stderr(&o).contains("CorpusParse"));
}

#[test]
fn lint_seed_is_clean() {
    let o = motion(&["lint"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("gap cells: 0\npossible ties: 0\n"), "{out}");
}

#[test]
fn lint_without_positional_rules_reports_three_gap_cells() {
    let rules: String = seed::RULES
        .lines()
        .filter(|l| !l.contains("prepkind=pos"))
        .map(|l| format!("{l}\n"))
        .collect();
    let path = scratch("nopos.rules", &rules);
    let o = motion(&["--rules", path.to_str().unwrap(), "lint"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("gap cells: 3\n"), "{out}");
    for role in ["initial", "medial", "final"] {
        assert!(out.contains(&format!("gap  lref {role} × pos")), "{out}");
    }
}

#[test]
fn lint_reports_duplicate_lemma_with_line() {
    let mut lexicon = seed::LEXICON_FR.to_string();
    lexicon.push_str("P\tdans\tpos\tinside\n");
    let line = lexicon.lines().count();
    let path = scratch("dup.tsv", &lexicon);
    let o = motion(&["--lexicon", path.to_str().unwrap(), "lint"]);
    assert_eq!(o.status.code(), Some(7));
    let err = stderr(&o);
    assert!(err.contains("DuplicateLemma"), "{err}");
    assert!(err.contains(&format!("line {line}:")), "{err}");
    assert!(err.contains("dans"));
}

#[test]
fn custom_lexicon_replaces_seed() {
    let path = scratch("en.tsv", seed::LEXICON_EN);
    let o = motion(&["--lexicon", path.to_str().unwrap(), "query", "sortir", "dans", "jardin"]);
    assert_eq!(o.status.code(), Some(3));
    let o = motion(&[
        "--lexicon",
        path.to_str().unwrap(),
        "query",
        "enter",
        "into",
        "room",
        "--lang",
        "en",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn class_inventory_flag_validates_lexicon() {
    let classes = scratch("classes.tsv", "C\tinside\tproximal\n");
    let o = motion(&["--classes", classes.to_str().unwrap(), "lint"]);
    assert_eq!(o.status.code(), Some(7));
    assert!(stderr(&o).contains("UnlexicalizedClass"));
}
