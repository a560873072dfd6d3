use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rotation_atlas::dynamics::{detect_cycle, LatticePoint, OrbitOutcome, ParamSpec, Side, DEFAULT_CYCLE_CAP};
use rotation_atlas::partition::{compute_atlas, sweep_with, verify_atlas, Limits, DEFAULT_PROBES};
use rotation_atlas::report::{self, TableFormat};
use rotation_atlas::{interval_for_cycle, tail_of, Cycle, Rational};

#[derive(Parser)]
#[command(version, about = "Exact parameter partitions for the discretized rotation")]
struct Cli {
    /// Step cap for a single orbit.
    #[arg(long, global = true, default_value_t = DEFAULT_CYCLE_CAP)]
    cap: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for written files.
    #[arg(long, global = true, env = "ROTATION_ATLAS_OUT")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Args)]
struct Point {
    #[arg(long, allow_hyphen_values = true)]
    a0: i64,
    #[arg(long, allow_hyphen_values = true)]
    a1: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Detect the cycle through (a0, a1).
    Orbit {
        #[command(flatten)]
        point: Point,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, default_value = "exact")]
        side: Side,
    },
    /// Print the parameter interval on which a word is a cycle.
    CycleInterval {
        #[arg(long, allow_hyphen_values = true)]
        word: Cycle,
    },
    /// Describe the closed-form part of the partition near -2.
    Tail {
        #[command(flatten)]
        point: Point,
        /// Number of triangular pieces to list.
        #[arg(long, default_value_t = 3)]
        k_max: usize,
    },
    /// Compute and verify the partition for one point.
    Partition {
        #[command(flatten)]
        point: Point,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        #[arg(long, default_value_t = DEFAULT_PROBES)]
        probes: usize,
    },
    /// Compute and verify every partition with max(|a0|,|a1|) <= M.
    Sweep {
        #[arg(long)]
        max_m: i64,
        #[arg(long, default_value_t = DEFAULT_PROBES)]
        probes: usize,
    },
    /// Print the per-ring summary tables of a sweep.
    Tables {
        #[arg(long)]
        max_m: i64,
    },
    /// Write an SVG figure of one partition.
    Diagram {
        #[command(flatten)]
        point: Point,
    },
}

type Outcome = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits { cycle_cap: cli.cap, ..Limits::default() }
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Orbit { point, lambda, side } => orbit(cli, point, lambda, *side),
        Command::CycleInterval { word } => {
            match interval_for_cycle(word) {
                Some(i) => println!("{i}"),
                None => println!("infeasible"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tail { point, k_max } => tail(point, *k_max),
        Command::Partition { point, json, table, probes } => partition(cli, point, *json, *table, *probes),
        Command::Sweep { max_m, probes } => sweep(cli, *max_m, *probes),
        Command::Tables { max_m } => tables(cli, *max_m),
        Command::Diagram { point } => {
            let atlas = compute_atlas(point.a0, point.a1, &limits(cli)).map_err(|e| e.to_string())?;
            let svg = report::emit_diagram(&atlas);
            match &cli.out {
                Some(dir) => write_file(dir, &format!("atlas_{}_{}.svg", point.a0, point.a1), &svg)?,
                None => print!("{svg}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn orbit(cli: &Cli, point: &Point, lambda: &Rational, side: Side) -> Outcome {
    let spec = ParamSpec::new(side, lambda.clone()).map_err(|e| e.to_string())?;
    let result = detect_cycle(&spec, LatticePoint::new(point.a0, point.a1), cli.cap);
    let (status, word) = match &result.outcome {
        OrbitOutcome::Cycle(c) => ("cycle", Some(c)),
        OrbitOutcome::CapExceeded => ("cap_exceeded", None),
        OrbitOutcome::Diverged => ("diverged", None),
    };
    if cli.format == Some(Format::Json) {
        let v = serde_json::json!({
            "lambda": spec.to_string(),
            "outcome": status,
            "cycle": word.map(|c| c.word()),
            "length": word.map(Cycle::len),
            "steps": result.steps_used,
            "max_abs": result.max_abs,
        });
        println!("{v}");
    } else {
        match word {
            Some(c) => println!("{c}"),
            None => println!("{status}"),
        }
        println!("length {}", word.map_or(0, Cycle::len));
        println!("steps {}", result.steps_used);
        println!("max_abs {}", result.max_abs);
    }
    Ok(if result.outcome == OrbitOutcome::CapExceeded { ExitCode::FAILURE } else { ExitCode::SUCCESS })
}

fn tail(point: &Point, pieces: usize) -> Outcome {
    let t = tail_of(point.a0, point.a1);
    println!("label s={} d={} K={}", t.label.s, t.label.d, t.label.k_min);
    println!("kind {}", t.kind.as_str());
    println!("tail {}", t.interval);
    if let Some(c) = t.constant_cycle() {
        println!("cycle {c}");
    }
    if let Some(b) = t.bridge_range() {
        println!("k_start {} (bridge {b})", t.k_start);
    }
    for (k, (z, c)) in (t.k_start..).zip(t.pieces().take(pieces)) {
        println!("k={k} {z} {c}");
    }
    Ok(ExitCode::SUCCESS)
}

fn partition(cli: &Cli, point: &Point, json: bool, table: bool, probes: usize) -> Outcome {
    match cli.format {
        Some(Format::Csv) => return usage("partition supports --format json or table"),
        Some(Format::Json) if table => return usage("--table conflicts with --format json"),
        Some(Format::Table) if json => return usage("--json conflicts with --format table"),
        _ => {}
    }
    let atlas = compute_atlas(point.a0, point.a1, &limits(cli)).map_err(|e| e.to_string())?;
    let verdict = verify_atlas(&atlas, probes);
    let as_json = json || (!table && cli.format == Some(Format::Json));
    let text = if as_json {
        report::atlas_to_json(&atlas)
    } else {
        let mut s = format!(
            "({},{}) s={} d={} K={} tail {}\n",
            atlas.a0, atlas.a1, atlas.tail.label.s, atlas.tail.label.d, atlas.tail.label.k_min, atlas.tail.interval
        );
        for e in atlas.bridge.iter().chain(&atlas.body) {
            s.push_str(&format!("{} {} {}\n", e.interval, e.cycle.len(), e.cycle));
        }
        s.push_str(&format!(
            "intervals {} singletons {} max_len {}\n",
            atlas.stats.intervals, atlas.stats.singletons, atlas.stats.max_len
        ));
        s.push_str(&report::render_endpoint_listing(&atlas));
        s.push('\n');
        s
    };
    match &cli.out {
        Some(dir) if as_json => write_file(dir, &format!("atlas_{}_{}.json", atlas.a0, atlas.a1), &text)?,
        _ => print!("{text}"),
    }
    match verdict.failure {
        None => Ok(ExitCode::SUCCESS),
        Some(f) => {
            eprintln!("verification failed: {f}");
            Ok(ExitCode::FAILURE)
        }
    }
}

fn usage(msg: &str) -> Outcome {
    eprintln!("error: {msg}");
    Ok(ExitCode::from(2))
}

fn sweep(cli: &Cli, m: i64, probes: usize) -> Outcome {
    if m < 1 {
        return usage("--max-m must be at least 1");
    }
    let out = cli.out.as_deref();
    let report = sweep_with(m, &limits(cli), probes, |atlas, _| {
        if let Some(dir) = out {
            let name = format!("atlas_{}_{}.json", atlas.a0, atlas.a1);
            if let Err(e) = write_file(dir, &name, &report::atlas_to_json(atlas)) {
                eprintln!("error: {e}");
            }
        }
    })
    .map_err(|e| e.to_string())?;
    let csv = report::render_sweep_csv(&report);
    match out {
        Some(dir) => {
            write_file(dir, "sweep.csv", &csv)?;
            write_file(dir, "tables.txt", &report::render_tables(&report, TableFormat::Text))?;
        }
        None => print!("{csv}"),
    }
    match report.first_failure() {
        None => {
            eprintln!("periodicity verified for all {} points with max(|a0|,|a1|) <= {m}", report.summaries.len());
            Ok(ExitCode::SUCCESS)
        }
        Some(s) => {
            eprintln!("verification failed at ({},{}): {}", s.a0, s.a1, s.failure.as_deref().unwrap_or(""));
            Ok(ExitCode::FAILURE)
        }
    }
}

fn tables(cli: &Cli, m: i64) -> Outcome {
    if m < 1 {
        return usage("--max-m must be at least 1");
    }
    let format = match cli.format {
        Some(Format::Csv) => TableFormat::Csv,
        Some(Format::Json) => return usage("tables support --format table or csv"),
        _ => TableFormat::Text,
    };
    let report = sweep_with(m, &limits(cli), DEFAULT_PROBES, |_, _| {}).map_err(|e| e.to_string())?;
    print!("{}", report::render_tables(&report, format));
    Ok(if report.all_verified() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
