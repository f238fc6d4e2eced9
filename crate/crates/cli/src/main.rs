use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use helicity_core::algebra::json::from_json_str;
use helicity_core::algebra::{Multivector, Signature};
use helicity_core::checks::{run_suite, seed_from_env};
use helicity_core::decomposition::decompose_report;
use helicity_core::field::{run_field_task, wave_study, FieldGrid, FieldTask, Helicity, Study};
use helicity_core::matrix::{BasisTag, MatrixRep};
use helicity_core::symbolic::derive;
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "helicity",
    version,
    about = "Helicity idempotents, spinor representations and field residuals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Pauli,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Task {
    Em,
    Maxwell,
}

#[derive(Subcommand)]
enum Command {
    /// Print a symbolic expansion: nabla-a, nabla-f or weyl-split.
    Derive {
        target: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Central idempotents of C_n for odd n <= 9.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// Matrix image of an element, or of every generator when none is given.
    Rep {
        #[arg(long, value_enum)]
        basis: Basis,
        /// Multivector JSON, inline or as a file path.
        #[arg(long)]
        element: Option<String>,
    },
    /// Run an invariant suite: all, algebra, rep or field.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Residual summary of a grid file.
    Field {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        task: Task,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refinement table for a circular plane wave and its spinor partners.
    Wave {
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        k: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        helicity: String,
        #[arg(long, default_value_t = 0.25)]
        h: f64,
        #[arg(long, default_value_t = 3)]
        refine: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Invariant(String),
    Input(String),
}

impl From<helicity_core::Error> for Failure {
    fn from(e: helicity_core::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn read_element(arg: &str) -> Result<Multivector, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::Input(format!("cannot read {arg}: {e}")))?
    };
    Ok(from_json_str(&text)?)
}

fn rep(basis: Basis, element: Option<&str>) -> Result<Value, Failure> {
    let tag = match basis {
        Basis::Pauli => BasisTag::Pauli,
        Basis::Gamma => BasisTag::Gamma,
    };
    if let Some(arg) = element {
        return Ok(MatrixRep::of(&read_element(arg)?, tag)?.to_json());
    }
    let sig = match basis {
        Basis::Pauli => Signature::pauli(),
        Basis::Gamma => Signature::spacetime(),
    };
    let mut images = serde_json::Map::new();
    for i in 1..=sig.dim() {
        let g = Multivector::generator(sig, i)?;
        images.insert(format!("e{i}"), MatrixRep::of(&g, tag)?.to_json());
    }
    Ok(serde_json::json!({ "signature": sig, "generators": images }))
}

fn render_table(study: &Study) -> String {
    let orders = study.orders();
    let mut head = format!("{:>10} {:>6}", "h", "points");
    for l in &study.labels {
        write!(head, " {l:>11}").unwrap();
    }
    if study.rows.len() > 1 {
        for l in &study.labels {
            write!(head, " {:>8}", format!("p({l})")).unwrap();
        }
    }
    let mut out = head + "\n";
    for (i, row) in study.rows.iter().enumerate() {
        write!(out, "{:>10.4e} {:>6}", row.h, row.points).unwrap();
        for e in &row.residuals {
            write!(out, " {e:>11.4e}").unwrap();
        }
        if study.rows.len() > 1 {
            for os in &orders {
                let cell = match i.checked_sub(1).and_then(|j| os[j]) {
                    Some(o) => format!("{o:.3}"),
                    None => "-".into(),
                };
                write!(out, " {cell:>8}").unwrap();
            }
        }
        out.push('\n');
    }
    out
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Derive { target, format } => {
            let d = derive(&target)?;
            Ok(match format {
                Format::Text => d.render_text(),
                Format::Json => pretty(&d.to_json()) + "\n",
            })
        }
        Command::Decompose { n } => Ok(pretty(&decompose_report(n)?) + "\n"),
        Command::Rep { basis, element } => Ok(pretty(&rep(basis, element.as_deref())?) + "\n"),
        Command::Check { suite, seed } => {
            let seed = match seed {
                Some(s) => s,
                None => seed_from_env()?,
            };
            let report = run_suite(&suite, seed)?;
            let text = pretty(&report.to_json()) + "\n";
            if report.ok() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Invariant(format!(
                    "{} of {} checks failed",
                    report.failed,
                    report.checks.len()
                )))
            }
        }
        Command::Field { input, task, out } => {
            let grid = FieldGrid::read(&input)?;
            let task = match task {
                Task::Em => FieldTask::Em,
                Task::Maxwell => FieldTask::Maxwell,
            };
            let (summary, result) = run_field_task(&grid, task)?;
            if let Some(path) = out {
                result.write(Path::new(&path))?;
            }
            Ok(pretty(&summary) + "\n")
        }
        Command::Wave {
            k,
            helicity,
            h,
            refine,
            format,
        } => {
            let k: [f64; 3] = k
                .try_into()
                .map_err(|_| Failure::Input("--k needs three comma-separated values".into()))?;
            if !(h.is_finite() && h > 0.0) {
                return Err(Failure::Input(format!("--h must be positive, got {h}")));
            }
            let study = wave_study(k, Helicity::parse(&helicity)?, h, refine)?;
            Ok(match format {
                Format::Text => render_table(&study),
                Format::Json => pretty(&study.to_json()) + "\n",
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
