use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qcert_core::docs_map::{emit_map, MapFormat};
use qcert_core::expr::{eval, form};
use qcert_core::forms::{Catalog, FormId};
use qcert_core::registry::registry;
use qcert_core::report::{table, ReportDocument};
use qcert_core::sequences::by_name;
use qcert_core::verifier::{run_registry, Selection, DEFAULT_ORDER};
use qcert_core::{rat, Error, Rational};

/// Exact q-series certification of modular-form identities.
#[derive(Parser)]
#[command(name = "qcert", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registry checks and report verdicts.
    Verify(VerifyArgs),
    /// Print the q-expansion of a form.
    Expand(ExpandArgs),
    /// Print terms of a named recurrence sequence.
    Sequence(SequenceArgs),
    /// Print the registry as a documentation table.
    DocsMap {
        #[arg(long, value_enum, default_value_t = DocFormat::Markdown)]
        format: DocFormat,
    },
    /// List the registry ids with their group and kind.
    List,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "selection")]
struct Select {
    /// Every check except the negative controls.
    #[arg(long)]
    all: bool,
    #[arg(long, value_name = "G")]
    group: Option<String>,
    #[arg(long, value_name = "ID")]
    id: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    select: Select,
    /// Certify exponents below this many whole powers of q.
    #[arg(long, default_value_t = DEFAULT_ORDER, value_parser = clap::value_parser!(i64).range(1..))]
    order: i64,
    /// Write a JSON report to this path.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
    /// Worker threads; defaults to the number of processors.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
}

#[derive(Args)]
struct ExpandArgs {
    /// Form name, optionally rescaled as NAME@r (q -> q^r).
    #[arg(long)]
    form: String,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(1..))]
    order: i64,
    #[arg(long, value_enum, default_value_t = OutFormat::Table)]
    format: OutFormat,
}

#[derive(Args)]
struct SequenceArgs {
    /// One of a5, b5, s5, t5, zagier.
    #[arg(long)]
    name: String,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<Rational>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum DocFormat {
    Markdown,
    Json,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn verify(a: VerifyArgs) -> ExitCode {
    let sel = match (a.select.all, a.select.group, a.select.id) {
        (true, _, _) => Selection::All,
        (_, Some(g), _) => Selection::Group(g),
        (_, _, Some(id)) => Selection::Id(id),
        _ => unreachable!("clap enforces one selector"),
    };
    let reg = registry();
    let order = rat(a.order, 1);
    let results = match run_registry(&reg, &sel, &order, a.jobs.map(|j| j as usize)) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if results.is_empty() {
        if let Selection::Id(id) = &sel {
            return usage(Error::UnknownCheck(id.clone()));
        }
    }
    print!("{}", table(&results));
    let doc = ReportDocument::new(&order, results);
    let s = &doc.summary;
    println!("{} checks: {} passed, {} failed, {} insufficient precision", s.total, s.pass, s.fail, s.insufficient_precision);
    if let Some(path) = a.report {
        if let Err(e) = std::fs::write(&path, doc.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if doc.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn expand(a: ExpandArgs) -> ExitCode {
    let (name, scale) = match a.form.split_once('@') {
        Some((n, r)) => match r.parse::<Rational>() {
            Ok(r) => (n, Some(r)),
            Err(_) => return usage(format!("bad rescale factor {r:?}")),
        },
        None => (a.form.as_str(), None),
    };
    let id: FormId = match name.parse() {
        Ok(id) => id,
        Err(e) => return usage(e),
    };
    let mut e = form(id);
    if let Some(r) = scale {
        e = e.at(r);
    }
    let series = match eval(&e, &Catalog::new(), &rat(a.order, 1)) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match a.format {
        OutFormat::Json => {
            let v = serde_json::json!({ "form": a.form, "series": series.to_record() });
            println!("{}", serde_json::to_string_pretty(&v).unwrap());
        }
        OutFormat::Table => {
            println!("# {} over {}, exponents below {}", a.form, series.tag(), series.bound());
            for (e, c) in series.terms() {
                println!("{e}\t{c}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn sequence(a: SequenceArgs) -> ExitCode {
    let abc = match (a.alpha, a.beta, a.gamma) {
        (Some(x), Some(y), Some(z)) => Some((x, y, z)),
        (None, None, None) => None,
        _ => return usage("--alpha, --beta and --gamma go together"),
    };
    let spec = match by_name(&a.name, abc) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    match spec.run(a.count as usize) {
        Ok(terms) => {
            for t in terms {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.cmd {
        Command::Verify(a) => verify(a),
        Command::Expand(a) => expand(a),
        Command::Sequence(a) => sequence(a),
        Command::DocsMap { format } => {
            let f = match format {
                DocFormat::Markdown => MapFormat::Markdown,
                DocFormat::Json => MapFormat::Json,
            };
            println!("{}", emit_map(f));
            ExitCode::SUCCESS
        }
        Command::List => {
            for c in registry() {
                println!("{}\t{}\t{}", c.id, c.group, c.kind.name());
            }
            ExitCode::SUCCESS
        }
    }
}
