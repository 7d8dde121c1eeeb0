use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand, ValueEnum};

use motion_semantics::corpus::{parse_corpus, run_corpus};
use motion_semantics::lexicon::{load_lexicon_with, ClassInventory};
use motion_semantics::{
    explain, lint_rulebase, seed, Engine, Error, ExitCode, Language, Lexicon, MotionComplex, RuleBase,
};

#[derive(Parser)]
#[command(name = "motion", version, about = "Compose motion verbs with spatial prepositions")]
struct Cli {
    /// Lexicon file to load instead of the built-in ones (repeatable, one per language).
    #[arg(long, global = true)]
    lexicon: Vec<PathBuf>,

    /// Rule base file to use instead of the built-in one.
    #[arg(long, global = true)]
    rules: Option<PathBuf>,

    /// Verb class inventory to validate lexicons against.
    #[arg(long, global = true)]
    classes: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose one verb + preposition + ground.
    Query {
        verb: String,
        prep: String,
        ground: String,
        #[arg(long, default_value = "fr")]
        lang: LangArg,
        #[arg(long, default_value = "m")]
        mobile: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a golden corpus and report pass/fail per case.
    Corpus { path: PathBuf },
    /// Check the rule base for coverage gaps and ties.
    Lint,
}

#[derive(Clone, Copy, ValueEnum)]
enum LangArg {
    Fr,
    En,
}

impl From<LangArg> for Language {
    fn from(l: LangArg) -> Language {
        match l {
            LangArg::Fr => Language::Fr,
            LangArg::En => Language::En,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_engine(cli: &Cli) -> Result<Engine, Error> {
    let inventory = match &cli.classes {
        Some(p) => ClassInventory::parse(&read(p)?)?,
        None => seed::verb_classes(),
    };
    let lexicon = if cli.lexicon.is_empty() {
        let mut lex = load_lexicon_with(seed::LEXICON_FR, None, &inventory)?;
        lex.merge(load_lexicon_with(seed::LEXICON_EN, None, &inventory)?)?;
        lex
    } else {
        let mut lex = Lexicon::new();
        for p in &cli.lexicon {
            lex.merge(load_lexicon_with(&read(p)?, None, &inventory)?)?;
        }
        lex
    };
    let rules = match &cli.rules {
        Some(p) => RuleBase::parse(&read(p)?)?,
        None => seed::rules(),
    };
    Ok(Engine::new(lexicon, rules))
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let engine = load_engine(cli)?;
    match &cli.command {
        Command::Query {
            verb,
            prep,
            ground,
            lang,
            mobile,
            format,
        } => {
            let complex = MotionComplex::new(verb, prep, ground, (*lang).into()).with_mobile(mobile);
            let d = engine.compose(&complex)?;
            match format {
                Format::Text => print!("{}", explain(&d)),
                Format::Records => print!("{}", d.trace.to_records()),
            }
            Ok(ExitCode::Ok)
        }
        Command::Corpus { path } => {
            let cases = parse_corpus(&read(path)?)?;
            let report = run_corpus(&cases, &engine.lexicon, &engine.rules);
            print!("{}", report.render());
            Ok(if report.is_success() {
                ExitCode::Ok
            } else {
                ExitCode::Findings
            })
        }
        Command::Lint => {
            for language in engine.lexicon.languages() {
                let verbs = engine.lexicon.verbs(language).count();
                let preps = engine.lexicon.preps(language).count();
                let groups = engine.lexicon.instantiated_groups(language).len();
                println!("lexicon {language}: {verbs} verbs, {preps} preps, {groups}/16 prep groups");
            }
            let report = lint_rulebase(&engine.rules);
            print!("{}", report.render());
            Ok(if report.is_clean() {
                ExitCode::Ok
            } else {
                ExitCode::Findings
            })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            e.exit_code()
        }
    };
    process::exit(code.code());
}
