//! Command-line front end. Every command is a thin adapter over library calls.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::{theorem_report, Status, Verdict};
use crate::cosetenum::{identify_small_group, todd_coxeter_with, EnumerationLimits, Strategy};
use crate::localgroups::{
    classify_local_group, horizontal_local_group, strict_comparison, vertical_local_group,
};
use crate::presentations::{load_presentation, CatalogName, Presentation};
use crate::squares::{build_square_structure, vh_t_report};
use crate::words::parse_word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn failed(stdout: String, stderr: String) -> Self {
        CliOutput {
            code: 1,
            stdout,
            stderr,
        }
    }

    fn usage(stderr: String) -> Self {
        CliOutput {
            code: 2,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "amalgams", version, about = "Square-complex lattices: VH-T checks, local groups, coset enumeration and certificates")]
struct Cli {
    /// Emit structured JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Coset limit for Todd-Coxeter enumerations.
    #[arg(long, global = true, value_name = "N")]
    max_cosets: Option<usize>,
    /// Also compare computed local generators with the printed ones.
    #[arg(long, global = true)]
    strict_local_generators: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that the presentation is a complete VH-T square presentation.
    Verify { target: String },
    /// Classify the horizontal and vertical local permutation groups.
    LocalGroups {
        target: String,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
    },
    /// Order and structure of the quotient by extra relators.
    Quotient {
        target: String,
        #[arg(long = "add-relator", value_name = "WORD")]
        add_relator: Vec<String>,
    },
    /// Normal form (A-word)(B-word) of a word.
    NormalForm {
        target: String,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        word: Vec<String>,
    },
    /// Certificate for the index-4 kernel of gamma1, gamma2 or gamma3.
    Certificate {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        group: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    H,
    V,
}

/// A catalog name or a path to a presentation file.
pub fn resolve_target(target: &str) -> Result<Presentation, String> {
    if let Ok(name) = target.parse::<CatalogName>() {
        return Ok(crate::presentations::catalog(name));
    }
    load_presentation(Path::new(target)).map_err(|e| format!("{target}: {e}"))
}

fn limits(cli: &Cli) -> EnumerationLimits {
    cli.max_cosets
        .map(EnumerationLimits::with_max_cosets)
        .unwrap_or_default()
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json serializes");
    s.push('\n');
    s
}

fn show(word: &str) -> &str {
    if word.is_empty() {
        "(empty)"
    } else {
        word
    }
}

pub fn run_cli<S: AsRef<str>>(argv: &[S]) -> CliOutput {
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput::ok(text)
                }
                _ => CliOutput::usage(text),
            };
        }
    };
    match &cli.command {
        Command::Verify { target } => verify(&cli, target),
        Command::LocalGroups { target, side } => local_groups(&cli, target, *side),
        Command::Quotient {
            target,
            add_relator,
        } => quotient(&cli, target, add_relator),
        Command::NormalForm { target, word } => normal_form(&cli, target, &word.join(" ")),
        Command::Certificate { group } => certificate(&cli, *group as usize),
    }
}

macro_rules! try_usage {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return CliOutput::usage(format!("error: {e}\n")),
        }
    };
}

fn verify(cli: &Cli, target: &str) -> CliOutput {
    let p = try_usage!(resolve_target(target));
    let r = vh_t_report(&p);
    let a = &p.alphabet;
    let pair = |&(x, y): &(crate::words::Letter, crate::words::Letter)| {
        format!("({}, {})", a.token(x), a.token(y))
    };
    let out = if cli.json {
        render(&json!({
            "target": target,
            "complete": r.complete,
            "squares": r.square_count,
            "corner_pairs": r.corner_pairs_seen,
            "missing": r.missing.iter().map(pair).collect::<Vec<_>>(),
            "duplicates": r.duplicates.iter().map(|(k, rs)| json!({
                "pair": pair(k),
                "relators": rs.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "problems": r.problems,
        }))
    } else {
        let mut s = format!(
            "{target}: {} squares, {} corner pairs, {}\n",
            r.square_count,
            r.corner_pairs_seen,
            if r.complete { "complete" } else { "incomplete" }
        );
        for problem in &r.problems {
            let _ = writeln!(s, "problem: {problem}");
        }
        for k in &r.missing {
            let _ = writeln!(s, "missing corner pair {}", pair(k));
        }
        for (k, rs) in &r.duplicates {
            let list: Vec<String> = rs.iter().map(|i| format!("r{}", i + 1)).collect();
            let _ = writeln!(s, "duplicate corner pair {} in {}", pair(k), list.join(", "));
        }
        s
    };
    if r.complete {
        CliOutput::ok(out)
    } else {
        CliOutput::failed(out, format!("{target}: presentation is not a complete VH-T square presentation\n"))
    }
}

fn local_groups(cli: &Cli, target: &str, side: Option<SideArg>) -> CliOutput {
    let p = try_usage!(resolve_target(target));
    let s = match build_square_structure(&p) {
        Ok(s) => s,
        Err(e) => return CliOutput::failed(String::new(), format!("{target}: {e}\n")),
    };
    let mut actions = Vec::new();
    if side != Some(SideArg::V) {
        actions.push(horizontal_local_group(&s));
    }
    if side != Some(SideArg::H) {
        actions.push(vertical_local_group(&s));
    }
    let mut entries = Vec::new();
    let mut text = String::new();
    for action in &actions {
        let c = classify_local_group(action);
        let gens: Vec<String> = action.group.generators().iter().map(|g| g.to_string()).collect();
        let strict = if cli.strict_local_generators {
            p.name.and_then(|n| strict_comparison(n, action))
        } else {
            None
        };
        let _ = writeln!(
            text,
            "{:?}: degree {}, order {}, transitive {}, 2-transitive {}, alternating {}, symmetric {}, suborbits {}",
            action.side,
            action.group.degree(),
            c.order,
            c.transitive,
            c.two_transitive,
            c.is_alternating,
            c.is_symmetric,
            c.suborbits
        );
        for g in &gens {
            let _ = writeln!(text, "  {g}");
        }
        if let Some(sc) = &strict {
            let _ = writeln!(
                text,
                "  printed generators: order {}, equal as groups {}, generators verbatim {}",
                sc.printed_order, sc.permutation_equal, sc.generators_verbatim
            );
        }
        entries.push(json!({
            "side": action.side,
            "degree": action.group.degree(),
            "classification": c,
            "generators": gens,
            "strict": strict,
        }));
    }
    if cli.json {
        CliOutput::ok(render(&json!({"target": target, "local_groups": entries})))
    } else {
        CliOutput::ok(text)
    }
}

fn quotient(cli: &Cli, target: &str, extra: &[String]) -> CliOutput {
    let mut p = try_usage!(resolve_target(target));
    for text in extra {
        let w = try_usage!(parse_word(text, &p.alphabet).map_err(|e| format!("{text:?}: {e}")));
        p = p.with_relator(w);
    }
    let table = match todd_coxeter_with(&p, &[], limits(cli), Strategy::HltLookahead) {
        Ok(t) => t,
        Err(e) => return CliOutput::failed(String::new(), format!("{target}: {e}\n")),
    };
    let report = identify_small_group(&table).ok();
    if cli.json {
        return CliOutput::ok(render(&json!({
            "target": target,
            "added_relators": extra,
            "order": table.index(),
            "cosets_defined": table.cosets_defined,
            "structure_tag": report.as_ref().map(|r| r.structure_tag.to_string()),
            "abelian": report.as_ref().map(|r| r.abelian),
            "element_orders": report.as_ref().map(|r| r.element_orders.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>()),
        })));
    }
    let mut s = format!("order {}\n", table.index());
    if let Some(r) = report {
        let _ = writeln!(s, "structure {}", r.structure_tag);
        let _ = writeln!(s, "abelian {}", r.abelian);
        let orders: Vec<String> = r.element_orders.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(s, "element orders {}", orders.join(" "));
    }
    CliOutput::ok(s)
}

fn normal_form(cli: &Cli, target: &str, text: &str) -> CliOutput {
    let p = try_usage!(resolve_target(target));
    let word = try_usage!(parse_word(text, &p.alphabet).map_err(|e| format!("{text:?}: {e}")));
    let s = match build_square_structure(&p) {
        Ok(s) => s,
        Err(e) => return CliOutput::failed(String::new(), format!("{target}: {e}\n")),
    };
    let nf = s.normal_form(&word);
    let a = p.alphabet.format_word(&nf.a_part);
    let b = p.alphabet.format_word(&nf.b_part);
    if cli.json {
        CliOutput::ok(render(&json!({
            "target": target,
            "word": text,
            "a_part": a,
            "b_part": b,
            "trivial": nf.is_identity(),
        })))
    } else {
        CliOutput::ok(format!("a-part {}\nb-part {}\n", show(&a), show(&b)))
    }
}

fn certificate(cli: &Cli, i: usize) -> CliOutput {
    let c = try_usage!(theorem_report(i, limits(cli)));
    let out = if cli.json {
        let mut s = c.to_json();
        s.push('\n');
        s
    } else {
        let mut s = format!("certificate for {}\n", c.group);
        for f in &c.facts {
            let status = match f.status {
                Status::Checked => "checked",
                Status::Derived => "derived",
                Status::Cited => "cited",
            };
            let mark = if f.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(s, "[{mark}] {} ({status}): {}", f.id, f.statement);
        }
        for p in &c.external_premises {
            let _ = writeln!(s, "[cited] {}: {}", p.citation, p.quote);
        }
        match &c.verdict {
            Verdict::ConsistentWithPaper => s.push_str("verdict: consistent_with_paper\n"),
            Verdict::Discrepancy(ids) => {
                let _ = writeln!(s, "verdict: discrepancy in {}", ids.join(", "));
            }
        }
        s
    };
    match c.verdict {
        Verdict::ConsistentWithPaper => CliOutput::ok(out),
        Verdict::Discrepancy(_) => CliOutput::failed(out, "certificate has failed facts\n".into()),
    }
}
