use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sv_core::expr::{parse_expression, parse_generator, parse_vector_expression};
use sv_core::lie::{bracket, HalfInteger, LieElement};
use sv_core::module::{act, dot_act, validate, ModuleSpec, ModuleVector, WhittakerHom};
use sv_core::pbw::{commutator, UeaElement};
use sv_core::rational::{parse_rational, Rational};
use sv_core::solver::{
    nilpotency_index, singular_vectors, submodule_closure, whittaker_vectors, SolveReport, Truncation,
};
use sv_core::verify::{run_verify, VerifyOptions};
use sv_core::SvError;

#[derive(Parser)]
#[command(
    name = "sv",
    version,
    about = "Exact computations in the Schrodinger-Virasoro algebra and its Whittaker modules"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an expression in U(sv).
    NormalForm { expr: String },
    /// Bracket of two expressions (Lie bracket or commutator in U(sv)).
    Bracket { a: String, b: String },
    /// Action of a U(sv) element on a module vector.
    Act {
        expr: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "w")]
        on: String,
    },
    /// Dot action g·v = gv - psi(g)v of a raising generator.
    DotAct {
        generator: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "w")]
        on: String,
    },
    /// Whittaker vectors of type psi inside a window.
    WhittakerVectors {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Vectors killed by every raising generator inside a window.
    SingularVectors {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Smallest m with (g·)^m v = 0.
    Nilpotency {
        generator: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, default_value = "w")]
        on: String,
        #[arg(long, default_value_t = 12)]
        bound: u32,
    },
    /// Truncated submodule generated by vectors read from a JSON file.
    Closure {
        #[arg(long)]
        gens: String,
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 4)]
        weight_bound: u32,
    },
    /// Run the verification suite.
    Verify {
        #[command(flatten)]
        window: WindowArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Append per-check timings (text output only).
        #[arg(long)]
        timings: bool,
        #[arg(long, hide = true)]
        corrupt_relations: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleKind {
    Universal,
    Quotient,
    Verma,
}

#[derive(Args)]
struct ModuleArgs {
    #[arg(long, value_enum, default_value_t = ModuleKind::Universal)]
    module: ModuleKind,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eta1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eta2: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    m1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    eta3: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    xi: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    zeta: String,
}

#[derive(Args)]
struct WindowArgs {
    #[arg(long, default_value = "3")]
    deg: String,
    #[arg(long, default_value_t = 3)]
    l0: u32,
    #[arg(long, default_value_t = 3)]
    m0: u32,
}

/// Failure kinds mapped to exit codes.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<SvError> for Failure {
    fn from(e: SvError) -> Self {
        match e {
            SvError::BoundExceeded { .. } | SvError::Resubstitution(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn rational(name: &str, text: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

impl ModuleArgs {
    fn spec(&self) -> CliResult<ModuleSpec> {
        let psi = WhittakerHom::new(
            rational("eta1", &self.eta1)?,
            rational("eta2", &self.eta2)?,
            rational("m1", &self.m1)?,
            rational("eta3", &self.eta3)?,
        );
        let xi = rational("xi", &self.xi)?;
        Ok(match self.module {
            ModuleKind::Universal => ModuleSpec::universal(psi),
            ModuleKind::Quotient => ModuleSpec::quotient(psi, xi),
            ModuleKind::Verma => {
                if !psi.is_zero() {
                    return Err(Failure::Usage("verma modules take no psi parameters".into()));
                }
                ModuleSpec::verma(xi, rational("zeta", &self.zeta)?)
            }
        })
    }
}

impl WindowArgs {
    fn truncation(&self) -> CliResult<Truncation> {
        let deg = HalfInteger::parse(&self.deg).map_err(|e| Failure::Usage(format!("--deg: {e}")))?;
        Ok(Truncation::new(deg, self.l0, self.m0)?)
    }
}

/// Inline JSON, a JSON file, or a vector expression such as `L-1*w`.
fn read_vector(text: &str, spec: &ModuleSpec) -> CliResult<ModuleVector> {
    let trimmed = text.trim_start();
    let v = if trimmed.starts_with('[') || trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| Failure::Usage(format!("--on: {e}")))?
    } else if Path::new(text).is_file() {
        let data = std::fs::read_to_string(text).map_err(|e| Failure::Usage(format!("{text}: {e}")))?;
        serde_json::from_str(&data).map_err(|e| Failure::Usage(format!("{text}: {e}")))?
    } else {
        parse_vector_expression(text, spec).map_err(|e| Failure::Usage(format!("--on: {e}")))?
    };
    validate(&v, spec)?;
    Ok(v)
}

fn as_lie(u: &UeaElement) -> Option<LieElement> {
    let mut out = LieElement::zero();
    for (w, c) in u.iter() {
        match w.factors() {
            [(g, 1)] => out.add_term(*g, c.clone()),
            _ => return None,
        }
    }
    Some(out)
}

fn expression(text: &str) -> CliResult<UeaElement> {
    parse_expression(text).map_err(|e| Failure::Usage(format!("{text:?}: {e}")))
}

fn emit<T: Serialize>(format: Format, value: &T, text: String) -> CliResult<()> {
    let body = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?,
    };
    match writeln!(std::io::stdout().lock(), "{body}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Usage(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn report_text(r: &SolveReport) -> String {
    let mut s = format!("dimension {}", r.dimension);
    for v in &r.basis {
        s.push_str(&format!("\n  {v}"));
    }
    s
}

fn run(cli: Cli) -> CliResult<()> {
    let format = cli.format;
    match cli.command {
        Command::NormalForm { expr } => {
            let u = expression(&expr)?;
            emit(format, &u, u.to_string())
        }
        Command::Bracket { a, b } => {
            let (ua, ub) = (expression(&a)?, expression(&b)?);
            match (as_lie(&ua), as_lie(&ub)) {
                (Some(x), Some(y)) => {
                    let z = bracket(&x, &y);
                    emit(format, &z, z.to_string())
                }
                _ => {
                    let z = commutator(&ua, &ub);
                    emit(format, &z, z.to_string())
                }
            }
        }
        Command::Act { expr, module, on } => {
            let spec = module.spec()?;
            let u = expression(&expr)?;
            let v = read_vector(&on, &spec)?;
            let out = act(&u, &v, &spec);
            emit(format, &out, out.to_string())
        }
        Command::DotAct { generator, module, on } => {
            let spec = module.spec()?;
            let g = parse_generator(&generator).map_err(|e| Failure::Usage(e.to_string()))?;
            let v = read_vector(&on, &spec)?;
            let out = dot_act(g, &v, &spec)?;
            emit(format, &out, out.to_string())
        }
        Command::WhittakerVectors { module, window } => {
            let r = whittaker_vectors(&module.spec()?, &window.truncation()?)?;
            emit(format, &r, report_text(&r))
        }
        Command::SingularVectors { module, window } => {
            let r = singular_vectors(&module.spec()?, &window.truncation()?)?;
            emit(format, &r, report_text(&r))
        }
        Command::Nilpotency { generator, module, on, bound } => {
            let spec = module.spec()?;
            let g = parse_generator(&generator).map_err(|e| Failure::Usage(e.to_string()))?;
            let v = read_vector(&on, &spec)?;
            let m = nilpotency_index(g, &v, &spec, bound)?;
            emit(format, &serde_json::json!({ "generator": g, "index": m }), m.to_string())
        }
        Command::Closure { gens, module, window, weight_bound } => {
            let spec = module.spec()?;
            let data = std::fs::read_to_string(&gens).map_err(|e| Failure::Usage(format!("{gens}: {e}")))?;
            let vectors: Vec<ModuleVector> =
                serde_json::from_str(&data).map_err(|e| Failure::Usage(format!("{gens}: {e}")))?;
            for v in &vectors {
                validate(v, &spec)?;
            }
            let span = submodule_closure(&vectors, &spec, &window.truncation()?, weight_bound);
            let mut s = format!("dimension {}", span.len());
            for v in &span {
                s.push_str(&format!("\n  {v}"));
            }
            emit(format, &serde_json::json!({ "dimension": span.len(), "basis": span }), s)
        }
        Command::Verify { window, seed, timings, corrupt_relations } => {
            let opts = VerifyOptions { truncation: window.truncation()?, seed, corrupt_relations };
            let report = run_verify(&opts);
            emit(format, &report, report.render_text(timings).trim_end().to_string())?;
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Check("verification failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("sv: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("sv: {msg}");
            ExitCode::from(2)
        }
    }
}
