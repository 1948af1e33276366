//! `effpcm`: check, construct and export efficient weight vectors of
//! pairwise comparison matrices.
//!
//! Exit codes: 0 success or efficient, 1 inefficient / disagreement, 2 input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use effpcm::bcc::{bcc_digraph, format_arcs, format_pairs};
use effpcm::generate::generate_pcm;
use effpcm::geometry::{
    barycentric, canonical_rearrangement, classify, contains_cycle_region, efficient_set, embed_exact,
    triad_rearrangement, EmbeddedPoint, PerturbTag,
};
use effpcm::io::{read_matrix, read_weights, to_obj, GeometryDocument, MatrixDocument};
use effpcm::pcm::format_labels;
use effpcm::sample::run_sample;
use effpcm::{Error, Rational};

/// `println!` that ignores a closed stdout (e.g. piping into `head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "effpcm", version, about = "Pareto-efficient weight vectors of pairwise comparison matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a matrix file.
    Validate { matrix: PathBuf },
    /// Decide whether a weight vector is efficient.
    Check {
        matrix: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Perturbation class from the consistent triad and 4-cycle counts (4×4 only).
    Classify {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Reindex alternatives into the standard cycle or triad form (4×4 only).
    Rearrange {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Cycles)]
        mode: Mode,
    },
    /// The 12 tetrahedron vertices, exact and embedded (4×4 only).
    Vertices {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Region verdicts and barycentric coefficients for a weight vector (4×4 only).
    Member {
        matrix: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the efficient-set geometry as JSON or an OBJ mesh (4×4 only).
    Export {
        matrix: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare graph and geometric efficiency on random instances.
    Sample {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// A class name (triple, double_triad, …) or `all`.
        #[arg(long, default_value = "all", value_parser = parse_classes)]
        class: ClassList,
        /// Also write the report to this file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a random matrix of the given class.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        class: PerturbTag,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cycles,
    Triads,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Obj,
}

#[derive(Clone)]
struct ClassList(Vec<PerturbTag>);

fn parse_classes(text: &str) -> Result<ClassList, String> {
    if text.eq_ignore_ascii_case("all") {
        Ok(ClassList(PerturbTag::ALL.to_vec()))
    } else {
        Ok(ClassList(vec![text.parse()?]))
    }
}

enum Outcome {
    Positive,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Positive) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Validate { matrix } => {
            let pcm = read_matrix(&matrix)?;
            out!("valid {n}x{n} matrix", n = pcm.n());
            Ok(Outcome::Positive)
        }
        Command::Check { matrix, weights, json } => check(&matrix, &weights, json),
        Command::Classify { matrix, json } => {
            let pcm = read_matrix(&matrix)?;
            let class = classify(&pcm)?;
            let triads: Vec<String> = pcm.consistent_triads()?.iter().map(|t| format_labels(t)).collect();
            let cycles: Vec<String> = pcm.consistent_four_cycles()?.iter().map(|c| c.label().to_string()).collect();
            if json {
                print_json(&json!({
                    "class": class.tag,
                    "consistent_triad_count": class.consistent_triad_count,
                    "consistent_cycle_count": class.consistent_cycle_count,
                    "consistent_triads": triads,
                    "consistent_cycles": cycles,
                }));
            } else {
                out!("{}", class.tag);
                out!("consistent triads: {} [{}]", class.consistent_triad_count, triads.join(" "));
                out!("consistent 4-cycles: {} [{}]", class.consistent_cycle_count, cycles.join(" "));
            }
            Ok(Outcome::Positive)
        }
        Command::Rearrange { matrix, mode } => {
            let pcm = read_matrix(&matrix)?;
            let doc = match mode {
                Mode::Cycles => {
                    let out = canonical_rearrangement(&pcm)?;
                    json!({
                        "mode": "cycles",
                        "permutation": out.permutation.labels(),
                        "case": out.case,
                        "matrix": MatrixDocument::from_pcm(&out.matrix),
                    })
                }
                Mode::Triads => {
                    let out = triad_rearrangement(&pcm)?;
                    json!({
                        "mode": "triads",
                        "permutation": out.permutation.labels(),
                        "case": out.case.number(),
                        "matrix": MatrixDocument::from_pcm(&out.matrix),
                    })
                }
            };
            print_json(&doc);
            Ok(Outcome::Positive)
        }
        Command::Vertices { matrix, json } => vertices(&matrix, json),
        Command::Member { matrix, weights, json } => member(&matrix, &weights, json),
        Command::Export { matrix, output, format } => {
            let pcm = read_matrix(&matrix)?;
            let set = efficient_set(&pcm)?;
            let text = match format {
                Format::Json => GeometryDocument::new(&pcm, &set)?.to_json(),
                Format::Obj => to_obj(&set),
            };
            std::fs::write(&output, text)?;
            Ok(Outcome::Positive)
        }
        Command::Sample { seed, trials, class, output } => sample(seed, trials as usize, &class.0, output.as_deref()),
        Command::Generate { seed, class } => {
            let pcm = generate_pcm(seed, class)?;
            print_json(&serde_json::to_value(MatrixDocument::from_pcm(&pcm)).expect("serializable"));
            Ok(Outcome::Positive)
        }
    }
}

fn print_json(value: &Value) {
    out!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn embedded_triple(w: &[Rational]) -> [f64; 3] {
    EmbeddedPoint::from_exact(&embed_exact(w).expect("four components")).to_array()
}

fn arc_strings(arcs: &[(usize, usize)]) -> Vec<String> {
    arcs.iter().map(|&(i, j)| format!("{}->{}", i + 1, j + 1)).collect()
}

fn pair_strings(pairs: &[(usize, usize)]) -> Vec<String> {
    pairs.iter().map(|&(i, j)| format!("{},{}", i + 1, j + 1)).collect()
}

fn check(matrix: &Path, weights: &Path, json: bool) -> Result<Outcome, Error> {
    let pcm = read_matrix(matrix)?;
    let w = read_weights(weights)?;
    let graph = bcc_digraph(&pcm, &w)?;
    let efficient = graph.is_strongly_connected();
    let verdict = if efficient { "efficient" } else { "inefficient" };
    if json {
        print_json(&json!({
            "verdict": verdict,
            "efficient": efficient,
            "arcs": arc_strings(&graph.arcs()),
            "equality_pairs": pair_strings(graph.equality_pairs()),
        }));
    } else {
        out!("{verdict}");
        out!("arcs: {}", format_arcs(&graph.arcs()));
        out!("equality pairs: {}", format_pairs(graph.equality_pairs()));
    }
    Ok(if efficient { Outcome::Positive } else { Outcome::Negative })
}

fn vertices(matrix: &Path, json: bool) -> Result<Outcome, Error> {
    let pcm = read_matrix(matrix)?;
    let set = efficient_set(&pcm)?;
    if json {
        let tetrahedra: Vec<Value> = set
            .tetrahedra
            .iter()
            .map(|t| {
                json!({
                    "cycle": t.cycle(),
                    "orientation": t.orientation().direction,
                    "rank": t.rank(),
                    "paths": t.paths().iter().map(|p| p.labels()).collect::<Vec<_>>(),
                    "vertices_exact": t.vertices().iter().map(|v| v.to_vec()).collect::<Vec<_>>(),
                    "vertices_embedded": t.vertices().iter().map(|v| embedded_triple(v)).collect::<Vec<_>>(),
                })
            })
            .collect();
        print_json(&json!({ "tetrahedra": tetrahedra }));
        return Ok(Outcome::Positive);
    }
    for t in &set.tetrahedra {
        out!("cycle {} {} rank {}", t.cycle(), t.orientation().direction, t.rank());
        for (path, v) in t.paths().iter().zip(t.vertices()) {
            let exact: Vec<String> = v.iter().map(ToString::to_string).collect();
            let [x, y, z] = embedded_triple(v);
            out!("  {path}: ({}) -> ({x:.9}, {y:.9}, {z:.9})", exact.join(", "));
        }
    }
    Ok(Outcome::Positive)
}

fn member(matrix: &Path, weights: &Path, json: bool) -> Result<Outcome, Error> {
    let pcm = read_matrix(matrix)?;
    let w = read_weights(weights)?;
    let set = efficient_set(&pcm)?;
    let mut any = false;
    let mut rows = Vec::new();
    for t in &set.tetrahedra {
        let inside = contains_cycle_region(&pcm, &t.orientation(), &w)?;
        any |= inside;
        let lambda = if inside { barycentric(t, &w)? } else { None };
        rows.push((t, inside, lambda));
    }
    if json {
        let regions: Vec<Value> = rows
            .iter()
            .map(|(t, inside, lambda)| {
                json!({
                    "cycle": t.cycle(),
                    "orientation": t.orientation().direction,
                    "inside": inside,
                    "barycentric": lambda.as_ref().map(|l| l.to_vec()),
                })
            })
            .collect();
        print_json(&json!({ "efficient": any, "regions": regions }));
    } else {
        for (t, inside, lambda) in &rows {
            let status = if *inside { "inside" } else { "outside" };
            match lambda {
                Some(l) => {
                    let parts: Vec<String> = l.iter().map(ToString::to_string).collect();
                    out!("{} {}: {status}, lambda = ({})", t.cycle(), t.orientation().direction, parts.join(", "));
                }
                None => out!("{} {}: {status}", t.cycle(), t.orientation().direction),
            }
        }
        out!("{}", if any { "efficient" } else { "inefficient" });
    }
    Ok(if any { Outcome::Positive } else { Outcome::Negative })
}

fn sample(seed: u64, trials: usize, classes: &[PerturbTag], output: Option<&Path>) -> Result<Outcome, Error> {
    let mut reports = Vec::new();
    for &tag in classes {
        reports.push(run_sample(seed, trials, tag)?);
    }
    let text = serde_json::to_string_pretty(&reports).expect("serializable");
    if let Some(path) = output {
        std::fs::write(path, &text)?;
    }
    out!("{text}");
    for r in &reports {
        eprintln!("{}: {} trials, {} agreements, {} disagreements", r.class, r.trials, r.agreements, r.disagreements.len());
    }
    Ok(if reports.iter().all(|r| r.passed()) { Outcome::Positive } else { Outcome::Negative })
}
