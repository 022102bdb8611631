//! `twistcube` command-line front end.
//!
//! Exit status: 0 untwisted / success, 1 twisted / counterexamples found,
//! 2 malformed input or any other error.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use twistcube::harness::{atlas, verify_equivalence, SweepSpec};
use twistcube::io::{census_lines, check_instance, parse_instance, InstanceFile};
use twistcube::render::render_svg;
use twistcube::twistedcube::{lattice_points_capped, DEFAULT_MAX_N};

#[derive(Debug, Parser)]
#[command(name = "twistcube")]
#[command(about = "Decide untwistedness of Grossberg-Karshon twisted cubes")]
struct Cli {
    /// Cap on the word length / cube dimension (the sign sweep is 2^n).
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Human,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide one instance; exit 0 if untwisted, 1 if twisted.
    Check {
        /// Instance file (`-` for stdin).
        #[arg(long)]
        instance: PathBuf,
    },
    /// Print the signed lattice points as JSON lines.
    Lattice {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Draw a two-dimensional cube as SVG.
    Render {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep instances and cross-check the equivalence; exit 1 on counterexamples.
    Verify {
        /// Sweep spec; the built-in default sweep when omitted.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count avoiding words per type, weight and length.
    Atlas {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type CliResult<T> = Result<T, String>;

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load_instance(path: &Path, max_n: usize) -> CliResult<InstanceFile> {
    let inst = parse_instance(&read_input(path)?).map_err(|e| e.to_string())?;
    if inst.n() > max_n {
        return Err(format!("n = {} exceeds --max-n {max_n}", inst.n()));
    }
    Ok(inst)
}

fn load_spec(path: Option<&Path>) -> CliResult<SweepSpec> {
    match path {
        None => Ok(SweepSpec::default_sweep()),
        Some(p) => serde_json::from_str(&read_input(p)?).map_err(|e| format!("spec: {e}")),
    }
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Check { instance } => {
            let inst = load_instance(instance, cli.max_n)?;
            let report = check_instance(&inst, cli.max_n).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                Format::Human => print!("{}", report.human()),
            }
            Ok(if report.untwisted { 0 } else { 1 })
        }
        Command::Lattice { instance } => {
            let inst = load_instance(instance, cli.max_n)?;
            let d = inst.twist_data().map_err(|e| e.to_string())?;
            let census = lattice_points_capped(&d, cli.max_n).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    for line in census_lines(&census) {
                        println!("{line}");
                    }
                }
                Format::Human => {
                    for p in &census.points {
                        println!("{:?} {:+}", p.x, p.rho);
                    }
                    println!(
                        "positive {} negative {} signed {}",
                        census.positive,
                        census.negative,
                        census.signed()
                    );
                }
            }
            Ok(0)
        }
        Command::Render { instance, out } => {
            let inst = load_instance(instance, cli.max_n)?;
            let d = inst.twist_data().map_err(|e| e.to_string())?;
            let svg = render_svg(&d).map_err(|e| e.to_string())?;
            emit(Some(out), &svg)?;
            Ok(0)
        }
        Command::Verify { spec, out } => {
            let spec = load_spec(spec.as_deref())?;
            spec.validate(cli.max_n).map_err(|e| e.to_string())?;
            let report = verify_equivalence(&spec, cli.jobs).map_err(|e| e.to_string())?;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
                Format::Human => format!(
                    "instances {}\nuntwisted {}\ntwisted {}\ncounterexamples {}\nwall_ms {}\n",
                    report.instances,
                    report.untwisted_count,
                    report.twisted_count,
                    report.counterexamples.len(),
                    report.wall_ms
                ),
            };
            emit(out.as_deref(), &text)?;
            Ok(if report.counterexamples.is_empty() { 0 } else { 1 })
        }
        Command::Atlas { spec, out } => {
            let spec = load_spec(spec.as_deref())?;
            spec.validate(cli.max_n).map_err(|e| e.to_string())?;
            let report = atlas(&spec, cli.jobs).map_err(|e| e.to_string())?;
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
                Format::Human => report
                    .rows
                    .iter()
                    .map(|r| {
                        format!(
                            "{} {:?} n={} avoiding {}/{}\n",
                            r.lie_type,
                            r.weight.coefficients(),
                            r.length,
                            r.avoiding,
                            r.words
                        )
                    })
                    .collect(),
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
