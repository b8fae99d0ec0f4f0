use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mcz_core::codes::DEFAULT_BUDGET;
use mcz_core::css::{self, CssBlock, QuantumCode};
use mcz_core::family::{self, presets, FamilyInstance, InstanceBlock};
use mcz_core::gates::{self, LogicalCircuit, PhysicalCircuit};
use mcz_core::gf::{Elem, FieldBlock, FieldSpec};
use mcz_core::scheduler;
use serde::{Deserialize, Serialize};

mod check;

#[derive(Parser)]
#[command(name = "mcz", version, about = "CSS codes with addressable transversal multi-control-Z gates")]
struct Cli {
    /// Enumeration cap for brute-force scans.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Gate arity; defaults to the instance's m_max or the circuit's m.
    #[arg(long, global = true)]
    arity: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an instance file, from a preset or a Reed-Solomon construction.
    Instance {
        /// Preset name (rs16-ccz, rs8-cz, rs25-cz, rs9-cz).
        preset: Option<String>,
        #[arg(long, requires_all = ["e", "k", "subgroup"])]
        p: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        /// Size of the translation subgroup.
        #[arg(long)]
        subgroup: Option<u32>,
        /// Coset representative of the logical block.
        #[arg(long, default_value_t = 0)]
        rep: u32,
    },
    /// Evaluate the classical and quantum parameter bounds.
    Bounds {
        #[arg(long)]
        ell: i64,
        #[arg(long)]
        s: i64,
        #[arg(long)]
        n: i64,
        /// Logical qudits per block, for the quantum distance and depth bounds.
        #[arg(long)]
        k: Option<u64>,
    },
    /// Build the CSS code of an instance.
    Build { instance: String },
    /// Run the full invariant suite on an instance.
    Check {
        instance: String,
        /// Random γ draws per support and σ-tuple.
        #[arg(long, default_value_t = 8)]
        draws: usize,
    },
    /// Compile a logical circuit into a layered physical schedule.
    Compile { instance: String, circuit: PathBuf },
    /// Evaluate the phase of a logical or physical circuit.
    Phase {
        instance: String,
        circuit: PathBuf,
        /// JSON array of vectors, inline or as a file path.
        #[arg(long)]
        values: String,
        /// Treat values as logical vectors and apply a physical circuit to
        /// the encoded states.
        #[arg(long)]
        encode: bool,
    },
    /// Exact X and Z distances of the CSS code.
    Distance { instance: String },
}

enum Failure {
    Input(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CssArtifact {
    field: FieldBlock,
    column_order: Vec<usize>,
    g_tilde: Vec<Vec<u32>>,
    css: CssBlock,
}

fn load_instance(spec: &str) -> Result<FamilyInstance, Failure> {
    if let Some(inst) = presets::by_name(spec) {
        return Ok(inst);
    }
    let block: InstanceBlock = read_json(Path::new(spec))?;
    Ok(FamilyInstance::from_block(&block)?)
}

fn load_instance_unchecked(spec: &str) -> Result<FamilyInstance, Failure> {
    if let Some(inst) = presets::by_name(spec) {
        return Ok(inst);
    }
    let block: InstanceBlock = read_json(Path::new(spec))?;
    Ok(FamilyInstance::from_block_unchecked(&block)?)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &Option<PathBuf>, value: &T) -> Outcome {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_values(field: &FieldSpec, raw: &str) -> Result<Vec<Vec<Elem>>, Failure> {
    let text = if Path::new(raw).is_file() { fs::read_to_string(raw)? } else { raw.to_string() };
    let values: Vec<Vec<u32>> = serde_json::from_str(&text)?;
    values
        .into_iter()
        .map(|v| v.into_iter().map(|x| field.elem(x).map_err(Failure::from)).collect())
        .collect()
}

fn quantum(spec: &str) -> Result<QuantumCode, Failure> {
    Ok(QuantumCode::new(load_instance(spec)?)?)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Instance { preset, p, e, k, subgroup, rep } => {
            let inst = match (preset, p) {
                (Some(name), None) => presets::by_name(&name)
                    .ok_or_else(|| Failure::Input(format!("unknown preset {name}; known: {}", presets::NAMES.join(", "))))?,
                (None, Some(p)) => {
                    let field = FieldSpec::new(p, e.unwrap_or(1), None)?;
                    let rep = field.elem(rep)?;
                    family::grs_build(&field, k.unwrap_or(1), subgroup.unwrap_or(1), rep)?
                }
                _ => return Err(Failure::Input("give either a preset name or --p/--e/--k/--subgroup".into())),
            };
            emit(&cli.out, &inst.to_block())
        }
        Command::Bounds { ell, s, n, k } => {
            let mut report = family::classical_bounds(ell, s, n)?;
            if let Some(k) = k {
                report = report.with_logical(k, cli.arity.map(|m| m as u32));
            }
            eprintln!("{report}");
            emit(&cli.out, &report.to_json())
        }
        Command::Build { instance } => {
            let qc = quantum(&instance)?;
            eprintln!("[[{}, {}]] over GF({})", qc.css.n, qc.css.k, qc.field().q());
            let artifact = CssArtifact {
                field: qc.field().to_block(),
                column_order: qc.form.column_order.clone(),
                g_tilde: qc.form.g_tilde.iter().map(|r| r.iter().map(|x| x.0).collect()).collect(),
                css: qc.css.to_block(),
            };
            emit(&cli.out, &artifact)
        }
        Command::Check { instance, draws } => {
            let inst = load_instance_unchecked(&instance)?;
            let arity = cli.arity.unwrap_or(inst.m_max());
            let report = check::run(inst, arity, cli.seed, draws);
            for c in &report.checks {
                eprintln!("{} {:<28} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.claim);
            }
            emit(&cli.out, &report)?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
        Command::Compile { instance, circuit } => {
            let qc = quantum(&instance)?;
            let circuit: LogicalCircuit = read_json(&circuit)?;
            let m = cli.arity.unwrap_or(circuit.m);
            if m != circuit.m {
                return Err(Failure::Input(format!("--arity {m} disagrees with circuit m = {}", circuit.m)));
            }
            let schedule = scheduler::compile(&qc, m, &circuit.gates)?;
            let bound = family::depth_bound(qc.k() as u64, m as u32);
            eprintln!("depth {} (bound k^(m-1) = {bound})", schedule.depth());
            emit(&cli.out, &schedule.to_file())
        }
        Command::Phase { instance, circuit, values, encode } => {
            let qc = quantum(&instance)?;
            let f = qc.field().clone();
            let values = parse_values(&f, &values)?;
            let text = fs::read_to_string(&circuit)?;
            if let Ok(c) = serde_json::from_str::<LogicalCircuit>(&text) {
                if encode {
                    return Err(Failure::Input("--encode needs a physical circuit".into()));
                }
                let phase = gates::logical_phase(&qc, &c.gates, &values)?;
                return emit(&cli.out, &serde_json::json!({ "kind": "logical", "p": f.p(), "phase": phase }));
            }
            let c: PhysicalCircuit = serde_json::from_str(&text)?;
            if encode {
                let states = values
                    .iter()
                    .map(|x| css::logical_basis(&qc.css, x, cli.budget))
                    .collect::<Result<Vec<_>, _>>()?;
                let outcome = gates::sparse_apply(&qc, &c.gates, &states, cli.budget)?;
                return emit(
                    &cli.out,
                    &serde_json::json!({
                        "kind": "physical-on-logical",
                        "p": f.p(),
                        "terms": outcome.exponents.len(),
                        "uniform": outcome.uniform(),
                    }),
                );
            }
            let phase = gates::physical_phase(&qc, &c.gates, &values)?;
            emit(&cli.out, &serde_json::json!({ "kind": "physical", "p": f.p(), "phase": phase }))
        }
        Command::Distance { instance } => {
            let qc = quantum(&instance)?;
            let d = css::css_distance(&qc.css, cli.budget)?;
            let code = qc.instance.code();
            let classical = code
                .min_distance(cli.budget)
                .and_then(|dd| code.dual_distance(cli.budget).map(|dp| (dd, dp)))
                .ok();
            let bound = classical.map(|(dd, dp)| family::quantum_bounds(dd as u64, dp as u64, qc.k() as u64));
            let meets = bound.is_none_or(|b| d.d as u64 >= b);
            emit(
                &cli.out,
                &serde_json::json!({
                    "claim": "d >= min(D, D⊥) − k",
                    "dx": d.dx,
                    "dz": d.dz,
                    "d": d.d,
                    "classical": classical.map(|(dd, dp)| serde_json::json!({ "D": dd, "D_perp": dp })),
                    "bound": bound,
                    "passed": meets,
                }),
            )?;
            if meets {
                Ok(())
            } else {
                Err(Failure::Check)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
