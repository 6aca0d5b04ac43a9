//! The `bei` command line.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cm_block::{
    b_invariant, block_count, is_block_graph, is_chordal, is_cm_block_graph, BInvariant, Mode,
};
use crate::error::{Error, Result};
use crate::families::{
    chain_of_cycles, star_product, validate_setup, whiskered_chain, whiskered_star, ChainSpec,
    Labeling, StarParams,
};
use crate::field::PrimeField;
use crate::graph::Graph;
use crate::groebner::{
    buchberger_oracle, enumerate_admissible_paths, initial_ideal, max_induced_matching,
    MonomialIdeal,
};
use crate::parallel::{resolve_threads, with_threads};
use crate::regularity::{
    regularity_auto, regularity_bei, regularity_block_closed_form, regularity_via_gluing,
};
use crate::verify::{format_table, run_suite, Suite, VerifyOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bei",
    version,
    about = "Binomial edge ideals: families, b(G), Gröbner bases, regularity"
)]
pub struct Cli {
    /// Worker threads (falls back to BEI_THREADS, then all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a family member and print its graph JSON.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Regularity of S/J_G.
    Reg {
        #[command(flatten)]
        input: Input,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = RegMethod::Auto)]
        method: RegMethod,
    },
    /// The invariant b(G) with its witness.
    Breg {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = BMode::Both)]
        mode: BMode,
    },
    /// Initial ideal of J_G from admissible paths.
    Groebner {
        #[command(flatten)]
        input: Input,
        /// Also list the admissible paths.
        #[arg(long)]
        paths: bool,
        /// Cross-check against Buchberger's algorithm (at most 6 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Maximum induced matching of a monomial ideal (or of in(J_G) with --graph).
    Matching {
        #[command(flatten)]
        input: Input,
        /// Treat the input as a graph and use its initial ideal.
        #[arg(long)]
        graph: bool,
    },
    /// Chordality, block-graph and Cohen-Macaulay block-graph checks.
    CmCheck {
        #[command(flatten)]
        input: Input,
    },
    /// Run reproduction suites and print a pass/fail table.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
        /// Print outcomes as JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; stdin when omitted or "-".
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenFamily {
    /// Whiskered K_m ⋆_r K_n.
    Star {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = LabelingArg::Original)]
        labeling: LabelingArg,
        /// Omit the whiskers.
        #[arg(long)]
        bare: bool,
    },
    /// Whiskered chain of cycles from a spec file.
    Chain {
        #[arg(long)]
        spec: PathBuf,
        /// Report violated structural conditions on stderr.
        #[arg(long)]
        validate: bool,
        /// Omit the whiskers.
        #[arg(long)]
        bare: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LabelingArg {
    Original,
    Groebner,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum RegMethod {
    Auto,
    Hochster,
    Gluing,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BMode {
    CutVertex,
    General,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Chain,
    Star,
    Lemma37,
    Matching,
    Oracle,
    All,
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        Error::Internal(_) => EXIT_VERIFY,
        _ => EXIT_INPUT,
    }
}

impl Input {
    fn uses_stdin(&self) -> bool {
        self.file.as_ref().is_none_or(|p| p.as_os_str() == "-")
    }
}

fn read_input(input: &Input, stdin: &Option<String>) -> Result<String> {
    match &input.file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        _ => Ok(stdin.clone().unwrap_or_default()),
    }
}

fn input_of(command: &Command) -> Option<&Input> {
    match command {
        Command::Reg { input, .. }
        | Command::Breg { input, .. }
        | Command::Groebner { input, .. }
        | Command::Matching { input, .. }
        | Command::CmCheck { input } => Some(input),
        Command::Gen { .. } | Command::Verify { .. } => None,
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

#[derive(Serialize)]
struct BothModes {
    cut_vertex: Option<BInvariant>,
    general: BInvariant,
}

#[derive(Serialize)]
struct CmCheck {
    chordal: bool,
    block_graph: bool,
    cm_block_graph: bool,
    block_count: Option<usize>,
}

#[derive(Serialize)]
struct GroebnerOut {
    ideal: MonomialIdeal,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_agrees: Option<bool>,
}

/// Runs one command, writing results to `out` and diagnostics to `err`. Returns the
/// exit code.
pub fn run_with(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let threads = match resolve_threads(cli.threads) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    let stdin_text = match input_of(&cli.command).filter(|i| i.uses_stdin()) {
        Some(_) => {
            let mut text = String::new();
            if let Err(e) = stdin.read_to_string(&mut text) {
                let _ = writeln!(err, "error: stdin: {e}");
                return EXIT_INPUT;
            }
            Some(text)
        }
        None => None,
    };
    let (mut out_buf, mut err_buf) = (Vec::new(), Vec::new());
    let result = with_threads(threads, || {
        dispatch(cli.command, &stdin_text, &mut out_buf, &mut err_buf)
    })
    .and_then(|r| r);
    let _ = out.write_all(&out_buf);
    let _ = err.write_all(&err_buf);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &Option<String>,
    out: &mut Vec<u8>,
    err: &mut Vec<u8>,
) -> Result<i32> {
    let io = |e: std::io::Error| Error::Internal(format!("write failed: {e}"));
    match command {
        Command::Gen { family } => {
            let g = match family {
                GenFamily::Star {
                    m,
                    n,
                    r,
                    labeling,
                    bare,
                } => {
                    let mut p = StarParams::new(m, n, r);
                    if matches!(labeling, LabelingArg::Groebner) {
                        p.labeling = Labeling::Groebner;
                    }
                    if bare {
                        star_product(&p)?
                    } else {
                        whiskered_star(&p)?
                    }
                }
                GenFamily::Chain {
                    spec,
                    validate,
                    bare,
                } => {
                    let text = std::fs::read_to_string(&spec)
                        .map_err(|e| Error::Parse(format!("{}: {e}", spec.display())))?;
                    let spec: ChainSpec = serde_json::from_str(&text)
                        .map_err(|e| Error::Parse(format!("chain spec: {e}")))?;
                    if validate {
                        for v in validate_setup(&spec) {
                            writeln!(err, "violation ({}): {}", v.condition, v.detail)
                                .map_err(io)?;
                        }
                    }
                    if bare {
                        chain_of_cycles(&spec)?
                    } else {
                        whiskered_chain(&spec)?
                    }
                }
            };
            writeln!(out, "{}", g.to_json()).map_err(io)?;
        }
        Command::Reg {
            input,
            characteristic,
            method,
        } => {
            let g = Graph::parse(&read_input(&input, stdin)?)?;
            let field = PrimeField::new(characteristic)?;
            let report = match method {
                RegMethod::Auto => regularity_auto(&g, field)?,
                RegMethod::Hochster => regularity_bei(&g, field)?,
                RegMethod::Gluing => regularity_via_gluing(&g, field)?,
                RegMethod::ClosedForm => regularity_block_closed_form(&g)?,
            };
            writeln!(out, "{}", report.to_json()).map_err(io)?;
        }
        Command::Breg { input, mode } => {
            let g = Graph::parse(&read_input(&input, stdin)?)?;
            let text = match mode {
                BMode::CutVertex => json(&b_invariant(&g, Mode::CutVertex)?),
                BMode::General => json(&b_invariant(&g, Mode::General)?),
                BMode::Both => {
                    let general = b_invariant(&g, Mode::General)?;
                    let cut_vertex = match b_invariant(&g, Mode::CutVertex) {
                        Ok(b) => Some(b),
                        Err(e @ Error::CapExceeded { .. }) => return Err(e),
                        Err(_) => None,
                    };
                    json(&BothModes {
                        cut_vertex,
                        general,
                    })
                }
            };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Groebner {
            input,
            paths,
            oracle,
        } => {
            let g = Graph::parse(&read_input(&input, stdin)?)?;
            let ideal = initial_ideal(&g)?;
            let oracle_agrees = if oracle {
                Some(buchberger_oracle(&g, PrimeField::GF32003)? == ideal)
            } else {
                None
            };
            let paths = paths.then(|| {
                enumerate_admissible_paths(&g)
                    .into_iter()
                    .map(|p| p.vertices)
                    .collect()
            });
            writeln!(
                out,
                "{}",
                json(&GroebnerOut {
                    ideal,
                    paths,
                    oracle_agrees
                })
            )
            .map_err(io)?;
            if oracle_agrees == Some(false) {
                writeln!(err, "initial ideal differs from the Buchberger result").map_err(io)?;
                return Ok(EXIT_VERIFY);
            }
        }
        Command::Matching { input, graph } => {
            let text = read_input(&input, stdin)?;
            let ideal = if graph {
                initial_ideal(&Graph::parse(&text)?)?
            } else {
                serde_json::from_str::<MonomialIdeal>(&text)
                    .map_err(|e| Error::Parse(format!("ideal: {e}")))?
            };
            writeln!(out, "{}", json(&max_induced_matching(&ideal)?)).map_err(io)?;
        }
        Command::CmCheck { input } => {
            let g = Graph::parse(&read_input(&input, stdin)?)?;
            let report = CmCheck {
                chordal: is_chordal(&g),
                block_graph: is_block_graph(&g),
                cm_block_graph: is_cm_block_graph(&g),
                block_count: block_count(&g).ok(),
            };
            writeln!(out, "{}", json(&report)).map_err(io)?;
        }
        Command::Verify {
            suite,
            characteristic,
            json: as_json,
        } => {
            let field = PrimeField::new(characteristic)?;
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Chain => vec![Suite::Chain],
                SuiteArg::Star => vec![Suite::Star],
                SuiteArg::Lemma37 => vec![Suite::Lemma37],
                SuiteArg::Matching => vec![Suite::Matching],
                SuiteArg::Oracle => vec![Suite::Oracle],
            };
            let mut all: Vec<VerifyOutcome> = Vec::new();
            for s in suites {
                let outcomes = run_suite(s, field)?;
                if !as_json {
                    write!(out, "{}", format_table(&outcomes)).map_err(io)?;
                }
                all.extend(outcomes);
            }
            let failed = all.iter().filter(|o| !o.pass).count();
            if as_json {
                writeln!(out, "{}", json(&all)).map_err(io)?;
            } else {
                writeln!(out, "{} passed, {failed} failed", all.len() - failed).map_err(io)?;
            }
            if failed > 0 {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `std::env::args` and runs against the process streams.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(
        cli,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}
