//! `forgot`: command-line front end for forgotten classes, canonical forms,
//! ribbon expansions and the verification suites.
//!
//! Exit codes: 0 success, 1 property violation, 2 parse error, 3 domain
//! error.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use forgotten::forgotten::{
    all_classes, canonical_of, class_closure, insert, CanonicalForm, ClassKey, Family,
};
use forgotten::qsym::{class_sum_f, foata_phi, ns_map, ribbon_expansion, RibbonEvaluator};
use forgotten::verify::{self, Suite};
use forgotten::{Error, Permutation};
use num_bigint::BigInt;
use serde_json::{json, Value};

const CLOSURE_CAP: usize = 9;
const LISTING_CAP: usize = 50;

#[derive(Parser)]
#[command(name = "forgot", version, about = "Forgotten monoid classes and ribbon expansions")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Lift the safety caps on input size.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every forgotten class of S_n.
    Classes {
        n: usize,
        /// Also list the members of each class.
        #[arg(long)]
        members: bool,
    },
    /// Key, canonical element and size of the class of a permutation.
    ClassOf {
        perm: String,
        #[arg(long)]
        members: bool,
    },
    /// Canonical element of the class with a given key.
    Canonical {
        /// Class key `n,inv,1n` or `n,inv,n1`.
        #[arg(long)]
        key: String,
    },
    /// Insert a letter into a canonical permutation.
    Insert { word: String, letter: usize },
    /// Ribbon expansion of a class, given by key or by a member.
    Ribbons {
        #[arg(long, conflicts_with = "perm")]
        key: Option<String>,
        #[arg(required_unless_present = "key")]
        perm: Option<String>,
        /// Also print the class sum in this many variables.
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Foata's transformation.
    Phi { perm: String },
    /// The map p -> Phi(p^-1)^-1.
    Ns { perm: String },
    /// Run an exhaustive verification suite.
    Verify {
        /// classes, canonical, insertion, commutation, ribbon, foata or all.
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
}

enum Failure {
    Violation(String),
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse(e.to_string()),
            Error::Invariant(_) => Failure::Violation(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(f) => {
            let (msg, code) = match f {
                Failure::Violation(m) => (m, 1),
                Failure::Parse(m) => (m, 2),
                Failure::Domain(m) => (m, 3),
            };
            eprintln!("forgot: {msg}");
            ExitCode::from(code)
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    s.parse::<Permutation>().map_err(Failure::from)
}

fn cap(what: &str, n: usize, limit: usize, force: bool) -> Result<(), Failure> {
    if n > limit && !force {
        return Err(Failure::Domain(format!(
            "{what} = {n} exceeds the cap of {limit}; pass --force to override"
        )));
    }
    Ok(())
}

fn perm_list(ps: &[Permutation]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let force = cli.force;
    match &cli.command {
        Command::Classes { n, members } => classes(*n, *members, force),
        Command::ClassOf { perm, members } => {
            let p = parse_perm(perm)?;
            cap("n", p.len(), CLOSURE_CAP, force)?;
            let key = ClassKey::of(&p)?;
            let canonical = canonical_of(&p)?;
            let closure: Vec<Permutation> = class_closure(&p).into_iter().collect();
            let mut text = format!("key {key}\ncanonical {canonical}\nsize {}\n", closure.len());
            let mut json = json!({"key": key, "canonical": canonical, "size": closure.len()});
            if *members {
                text += &format!("members {}\n", perm_list(&closure));
                json["members"] = json!(closure);
            }
            Ok(Output::ok(text, json))
        }
        Command::Canonical { key } => {
            let key = ClassKey::parse(key)?;
            let form = CanonicalForm::from_inversions(key.family(), key.inv, key.n)?;
            let word = form.word();
            let family = match form.family() {
                Family::Sigma => "sigma",
                Family::Tau => "tau",
            };
            Ok(Output::ok(
                format!("{word}\nform {form}\n"),
                json!({"key": key, "canonical": word, "form": {
                    "family": family, "k": form.k(), "a": form.a(), "n": form.n()
                }}),
            ))
        }
        Command::Insert { word, letter } => {
            let w = parse_perm(word)?;
            let res = insert(&w, *letter)?;
            Ok(Output::ok(
                format!("{res}\n"),
                json!({"word": w, "letter": letter, "result": res}),
            ))
        }
        Command::Ribbons { key, perm, vars } => {
            let key = match (key, perm) {
                (Some(k), _) => ClassKey::parse(k)?,
                (None, Some(p)) => ClassKey::of(&parse_perm(p)?)?,
                (None, None) => unreachable!("clap requires one"),
            };
            let expansion = ribbon_expansion(&key)?;
            let mut text = format!("{expansion}\n");
            let mut json = json!({"key": key, "expansion": expansion});
            if let Some(m) = vars {
                cap("n", key.n, CLOSURE_CAP, force)?;
                let lhs = class_sum_f::<BigInt>(&key, *m);
                let rhs = RibbonEvaluator::<BigInt>::new(key.n, *m).ribbon_sum(&expansion);
                if lhs != rhs {
                    return Err(Failure::Violation(format!(
                        "class sum differs from the ribbon sum for {key}"
                    )));
                }
                text += &format!("{lhs}\n");
                json["sum"] = json!(lhs);
            }
            Ok(Output::ok(text, json))
        }
        Command::Phi { perm } => {
            let p = parse_perm(perm)?;
            let img = foata_phi(&p);
            Ok(Output::ok(format!("{img}\n"), json!({"input": p, "result": img})))
        }
        Command::Ns { perm } => {
            let p = parse_perm(perm)?;
            let img = ns_map(&p);
            Ok(Output::ok(format!("{img}\n"), json!({"input": p, "result": img})))
        }
        Command::Verify { suite, max_n } => {
            let suite: Suite = suite.parse()?;
            let limit = match suite {
                Suite::All => Suite::EACH.iter().map(|s| s.cap()).min().unwrap_or(0),
                s => s.cap(),
            };
            cap("max-n", *max_n, limit, force)?;
            let report = verify::run(suite, *max_n);
            let mut text = String::new();
            for note in &report.notes {
                text += &format!("note: {note}\n");
            }
            for c in &report.checks {
                text += &format!("{c}\n");
            }
            let ok = report.passed();
            text += if ok { "all checks passed\n" } else { "some checks failed\n" };
            Ok(Output {
                text,
                json: json!(report),
                ok,
            })
        }
    }
}

fn classes(n: usize, members: bool, force: bool) -> Result<Output, Failure> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 }.into());
    }
    cap("n", n, LISTING_CAP, force)?;
    if members {
        cap("n", n, CLOSURE_CAP, force)?;
    }
    let mut text = String::new();
    let mut records = Vec::new();
    if n <= CLOSURE_CAP {
        let mut listed: Vec<(ClassKey, Vec<Permutation>)> = all_classes(n)
            .into_iter()
            .map(|c| (ClassKey::of(&c[0]).expect("n >= 2"), c))
            .collect();
        listed.sort_by_key(|(k, _)| (!k.one_before_n, k.inv));
        for (key, class) in listed {
            text += &format!("{key} {} {}", class[0], class.len());
            let mut rec = json!({"key": key, "canonical": class[0], "size": class.len()});
            if members {
                text += &format!(" {}", perm_list(&class));
                rec["members"] = json!(class);
            }
            text.push('\n');
            records.push(rec);
        }
    } else {
        for key in ClassKey::all(n) {
            let canonical = key.canonical();
            text += &format!("{key} {canonical}\n");
            records.push(json!({"key": key, "canonical": canonical}));
        }
    }
    Ok(Output::ok(text, Value::Array(records)))
}
