use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use quotring::arith::parse_rational;
use quotring::biquotient::{is_free, relation_polys, TorusActionMatrix};
use quotring::graded_ring::{GradedQuotient, HomPoly};
use quotring::harness::{scan, verify, Family, ScanMode, Suite};
use quotring::invariants::{t1_invariant, t1_pipeline, t2_det_class, t3_discriminant_class, t3_membership_quadratic};
use quotring::{Error, Rational};

#[derive(Parser)]
#[command(name = "quotring", version, about = "Invariants of torus biquotient cohomology rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Scan a family over an integer grid and count distinct invariants.
    Scan {
        #[arg(value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        radius: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compute every row from the ring instead of the closed form.
        #[arg(long)]
        pipeline: bool,
    },
    /// Invariant of a single family member.
    Invariant {
        #[command(subcommand)]
        family: InvariantCommand,
    },
    /// Graded dimensions of Q[x1..xk]/(x_i * sum_j a_ij x_j).
    Ring {
        #[arg(long, value_parser = parse_matrix)]
        matrix: TorusActionMatrix,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Whether the torus action is free.
    Free {
        #[arg(long, value_parser = parse_matrix)]
        matrix: TorusActionMatrix,
    },
    /// Run a property and oracle suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 20_260_101)]
        seed: u64,
        /// Write counterexamples as JSON here.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum InvariantCommand {
    T1 {
        #[arg(long, allow_hyphen_values = true)]
        b1: i64,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        /// Compute from the ring and print the intermediate data.
        #[arg(long)]
        pipeline: bool,
    },
    T2 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        a0: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        a1: Rational,
    },
    T3 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        a: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        b: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_q)]
        c: Rational,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_matrix(s: &str) -> Result<TorusActionMatrix, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Error>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Scan { family, radius, format, out, pipeline } => {
            let mode = if pipeline { ScanMode::Pipeline } else { ScanMode::ClosedForm };
            let report = scan(family, radius, mode)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv()?,
            };
            emit(&text, out.as_ref())?;
            if out.is_some() {
                eprintln!("{family} radius {radius}: {} rows, {} distinct", report.rows.len(), report.distinct_count);
            }
        }
        Command::Invariant { family } => match family {
            InvariantCommand::T1 { b1, c1, pipeline: false } => println!("{}", t1_invariant(b1, c1)?),
            InvariantCommand::T1 { b1, c1, pipeline: true } => {
                let d = t1_pipeline(b1, c1)?;
                println!("cubic: {}", d.cubic);
                println!("node: [{}, {}, {}]", d.node[0], d.node[1], d.node[2]);
                println!("normalized: {}", d.normalized);
                println!("alpha: {}", d.alpha);
                println!("beta: {}", d.beta);
                println!("invariant: {}", d.invariant);
            }
            InvariantCommand::T2 { a0, a1 } => println!("{}", t2_det_class(&a0, &a1)?),
            InvariantCommand::T3 { a, b, c } => {
                let class = t3_discriminant_class(&a, &b, &c)?;
                println!("quadratic: {}", t3_membership_quadratic(&a, &b, &c)?);
                println!("class: {class}");
            }
        },
        Command::Ring { matrix, max_degree } => {
            let k = matrix.size();
            let max = max_degree.unwrap_or(2 * k + 2);
            let free = is_free(&matrix);
            let rels = relation_polys(&matrix).into_iter().map(HomPoly::new).collect::<Result<Vec<_>, _>>()?;
            let ring = GradedQuotient::new(k, rels, max)?;
            println!("free: {free}");
            for r in ring.relations() {
                println!("relation: {r}");
            }
            let dims: Vec<String> = ring.hilbert_function().iter().map(ToString::to_string).collect();
            println!("graded dimensions (degrees 0, 2, ..., {}): {}", ring.max_degree(), dims.join(" "));
            println!("complete intersection: {}", ring.is_complete_intersection());
        }
        Command::Free { matrix } => println!("{}", if is_free(&matrix) { "free" } else { "not free" }),
        Command::Verify { suite, seed, dump } => {
            let report = verify(suite, seed)?;
            println!("{report}");
            if let Some(path) = dump {
                fs::write(&path, report.counterexamples_json() + "\n")
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            if !report.success() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
