//! The `nalab` command line. [`run`] parses arguments, dispatches, and
//! returns the exit code with the rendered output, so it can be tested
//! without a process.

mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Backend, StructureAlgebra};
use crate::catalog::{self, AlgebraSpec};
use crate::freealg::{polarize, pretty, Triple};
use crate::identities::{self, Options, Property};

/// Version of the structured output format.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "nalab", version, about = "Exact checks of power identities in finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value_t = Backend::Symbolic)]
    pub backend: Backend,
    #[arg(long, default_value_t = 5)]
    pub bound: u32,
    #[command(flatten)]
    pub sample: SampleArgs,
}

impl ReportArgs {
    fn options(&self) -> Options {
        Options {
            backend: self.backend,
            bound: self.bound,
            trials: self.sample.trials,
            seed: self.sample.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog algebras.
    List,
    /// Print an algebra's basis and multiplication table.
    Show { algebra: String },
    /// Check the identity (x^p, x^q, x^r) = 0.
    Check {
        algebra: String,
        #[arg(long, value_parser = parse_triple)]
        identity: Triple,
        #[arg(long, default_value_t = Backend::Symbolic)]
        backend: Backend,
    },
    /// Evaluate one property.
    Predicate {
        algebra: String,
        #[arg(long, value_parser = parse_property)]
        name: Property,
        #[arg(long, default_value_t = 5)]
        bound: u32,
        #[arg(long, default_value_t = Backend::Symbolic)]
        backend: Backend,
    },
    /// Dimension of the subalgebra generated by a generic element.
    Degree { algebra: String },
    /// Left, right and two-sided units.
    Units { algebra: String },
    /// Sample nonzero elements and check that their multiplication operators are invertible.
    Division {
        algebra: String,
        #[command(flatten)]
        sample: SampleArgs,
    },
    /// Print the linearization f_1, ..., f_{p+q+r-1} of (x^p, x^q, x^r) = 0.
    Polarize {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        p: u8,
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        q: u8,
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        r: u8,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Every property, the implication chart, and the structural statements.
    Report {
        algebra: String,
        #[command(flatten)]
        args: ReportArgs,
    },
    /// Reproduce the tables, propositions and catalog statements.
    PaperVerify {
        #[command(flatten)]
        args: ReportArgs,
    },
}

fn parse_triple(s: &str) -> Result<Triple, String> {
    s.replace(',', ".").parse::<Triple>().map_err(|e| e.to_string())
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse::<Property>().map_err(|e| {
        let names = Property::ALL.iter().map(|p| p.name()).collect::<Vec<_>>().join(", ");
        format!("{e}; expected one of {names}")
    })
}

/// Rendered result of one command.
pub struct Outcome {
    pub code: i32,
    pub text: String,
    pub data: Value,
}

fn load(source: &str) -> Result<StructureAlgebra, String> {
    catalog::resolve(source).map_err(|e| e.to_string())
}

fn ok(text: String, data: Value) -> Result<Outcome, String> {
    Ok(Outcome { code: EXIT_OK, text, data })
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

/// Runs one parsed command.
pub fn execute(command: &Command) -> Result<Outcome, String> {
    match command {
        Command::List => {
            let entries = catalog::entries();
            ok(render::list(entries), json!({ "algebras": to_value(&entries) }))
        }
        Command::Show { algebra } => {
            let a = load(algebra)?;
            ok(render::show(&a), json!({ "algebra": to_value(&AlgebraSpec::save(&a)) }))
        }
        Command::Check { algebra, identity, backend } => {
            let a = load(algebra)?;
            let r = identities::check_pqr(&a, *identity, *backend).map_err(|e| e.to_string())?;
            Ok(Outcome {
                code: if r.holds { EXIT_OK } else { EXIT_FAILED },
                text: render::check(&a, &r),
                data: json!({ "algebra": a.name(), "check": to_value(&r) }),
            })
        }
        Command::Predicate { algebra, name, bound, backend } => {
            let a = load(algebra)?;
            let options = Options {
                backend: *backend,
                bound: *bound,
                ..Options::default()
            };
            let v = identities::predicate(&a, *name, &options).map_err(|e| e.to_string())?;
            ok(render::property(&v), json!({ "algebra": a.name(), "property": to_value(&v) }))
        }
        Command::Degree { algebra } => {
            let a = load(algebra)?;
            let d = a.degree();
            ok(format!("degree {d}\n"), json!({ "algebra": a.name(), "degree": d }))
        }
        Command::Units { algebra } => {
            let a = load(algebra)?;
            let values = [Property::HasLeftUnit, Property::HasRightUnit, Property::HasUnit]
                .map(|p| identities::predicate(&a, p, &Options::default()).expect("unit predicates do not fail"));
            let text = values.iter().map(render::property).collect::<String>();
            ok(text, json!({ "algebra": a.name(), "units": to_value(&values) }))
        }
        Command::Division { algebra, sample } => {
            let a = load(algebra)?;
            let r = a.division_sampled(sample.trials, sample.seed);
            Ok(Outcome {
                code: if r.all_invertible { EXIT_OK } else { EXIT_FAILED },
                text: render::division(&a, &r),
                data: json!({ "algebra": a.name(), "division": to_value(&r) }),
            })
        }
        Command::Polarize { p, q, r, m } => {
            let t = Triple::new(*p, *q, *r).map_err(|e| e.to_string())?;
            let f = polarize(t);
            let ms: Vec<u32> = match m {
                Some(m) => {
                    f.component(*m).map_err(|e| e.to_string())?;
                    vec![*m]
                }
                None => (1..t.total()).collect(),
            };
            let rows: Vec<Value> = ms
                .iter()
                .map(|&m| {
                    let c = f.component(m).expect("checked above");
                    json!({
                        "m": m,
                        "bidegree": c.bidegree(),
                        "expression": pretty(c),
                        "associators": f.display_component(m),
                        "expanded": c.to_string(),
                    })
                })
                .collect();
            ok(render::polarize(t, &rows), json!({ "triple": t, "components": rows }))
        }
        Command::Report { algebra, args } => {
            let a = load(algebra)?;
            let options = args.options();
            let inst = identities::verify_instances(&a, &options).map_err(|e| e.to_string())?;
            let edges = identities::hierarchy_report(&a, &options).map_err(|e| e.to_string())?.edges;
            let bad = inst.inconsistencies().count() > 0
                || edges.iter().any(|e| e.verdict == identities::EdgeVerdict::Violated);
            Ok(Outcome {
                code: if bad { EXIT_FAILED } else { EXIT_OK },
                text: render::report(&a, &inst, &edges),
                data: json!({
                    "algebra": a.name(),
                    "options": to_value(&options),
                    "degree": inst.degree,
                    "division": to_value(&inst.division),
                    "identities": to_value(&inst.identities),
                    "properties": to_value(&inst.properties.properties),
                    "hierarchy": to_value(&edges),
                    "statements": to_value(&inst.statements),
                }),
            })
        }
        Command::PaperVerify { args } => {
            let r = identities::reproduction_suite(&args.options()).map_err(|e| e.to_string())?;
            Ok(Outcome {
                code: if r.passed() { EXIT_OK } else { EXIT_FAILED },
                text: render::suite(&r),
                data: json!({ "passed": r.passed(), "rows": to_value(&r.rows) }),
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::List => "list",
        Command::Show { .. } => "show",
        Command::Check { .. } => "check",
        Command::Predicate { .. } => "predicate",
        Command::Degree { .. } => "degree",
        Command::Units { .. } => "units",
        Command::Division { .. } => "division",
        Command::Polarize { .. } => "polarize",
        Command::Report { .. } => "report",
        Command::PaperVerify { .. } => "paper-verify",
    }
}

/// Parses `argv` (including the program name) and runs it. Returns the exit
/// code and everything that would be printed.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let text = match cli.format {
                Format::Text => out.text,
                Format::Structured => {
                    let doc = json!({
                        "schema_version": SCHEMA_VERSION,
                        "command": command_name(&cli.command),
                        "exit_code": out.code,
                        "result": out.data,
                    });
                    serde_json::to_string_pretty(&doc).expect("json renders") + "\n"
                }
            };
            (out.code, text)
        }
        Err(msg) => (EXIT_USAGE, format!("error: {msg}\n")),
    }
}
