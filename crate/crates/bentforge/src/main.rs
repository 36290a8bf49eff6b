use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bentforge::report::{analyze, construct, reproduce};
use bentforge::search::{binomial_sweep, monomial_sweep, nwr_sweep, summarize, Family, Row};
use bentforge::spec::{max_domain, ElemSpec, FunctionSpec, RecipeFile};
use bentforge::CliError;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bentforge", version, about = "Exact analysis and construction of p-ary bent functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Monomial,
    Binomial,
    Nwr,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild a bundled example and compare it with its golden data.
    Reproduce {
        #[arg(value_parser = ["ex1", "ex2", "ex3a", "ex3b"])]
        name: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Spectrum, linear space, classification and polynomial of a function.
    Analyze {
        #[arg(short = 'f', long = "file")]
        file: PathBuf,
        /// Inner product parameter, `log:k` or a prime-field integer.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a recipe and write its artifacts.
    Construct {
        #[arg(short = 'r', long = "recipe")]
        recipe: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Sweep a family and write a JSON-lines catalog.
    Search {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        p: u32,
        #[arg(long, num_args = 1.., required = true)]
        n: Vec<u32>,
        #[arg(long, num_args = 1.., default_values_t = [1u32])]
        kappa: Vec<u32>,
        #[arg(short = 'o', long = "out")]
        out: PathBuf,
    },
}

fn parse_delta(s: &str) -> Result<ElemSpec, CliError> {
    if let Some(k) = s.strip_prefix("log:") {
        return k
            .parse()
            .map(|log| ElemSpec::Log { log })
            .map_err(|_| CliError::Validation(format!("bad delta {s:?}")));
    }
    s.parse()
        .map(ElemSpec::Scalar)
        .map_err(|_| CliError::Validation(format!("bad delta {s:?}; expected log:k or an integer")))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    let limit = max_domain();
    match cli.command {
        Command::Reproduce { name, format } => {
            let r = reproduce(&name, limit)?;
            match format {
                Format::Json => print_json(&r.report)?,
                Format::Text => print!("{}", r.report.to_text()),
            }
            if r.diffs.is_empty() {
                println!("{name}: all goldens match");
                Ok(())
            } else {
                Err(CliError::GoldenMismatch { name, diffs: r.diffs })
            }
        }
        Command::Analyze { file, delta, format } => {
            let spec: FunctionSpec = serde_json::from_str(&std::fs::read_to_string(&file)?)?;
            let delta = delta.as_deref().map(parse_delta).transpose()?;
            let report = analyze(&spec, delta.as_ref(), limit)?;
            match format {
                Format::Json => print_json(&report),
                Format::Text => {
                    print!("{}", report.to_text());
                    Ok(())
                }
            }
        }
        Command::Construct { recipe, out, format } => {
            let recipe: RecipeFile = serde_json::from_str(&std::fs::read_to_string(&recipe)?)?;
            let c = construct(&recipe, limit)?;
            c.write_to(&out)?;
            match format {
                Format::Json => print_json(&c.report),
                Format::Text => {
                    print!("{}", c.report.to_text());
                    Ok(())
                }
            }
        }
        Command::Search { family, p, n, kappa, out } => {
            let family = match family {
                FamilyArg::Monomial => Family::Monomial,
                FamilyArg::Binomial => Family::Binomial,
                FamilyArg::Nwr => Family::Nwr,
            };
            let mut rows: Vec<Row> = Vec::new();
            match family {
                Family::Monomial => {
                    for &n in &n {
                        rows.extend(monomial_sweep(p, n, limit)?);
                    }
                }
                Family::Binomial => rows = binomial_sweep(p, &n, &kappa, limit)?,
                Family::Nwr => {
                    for &n in &n {
                        for &k in &kappa {
                            rows.extend(nwr_sweep(p, n, k, limit)?);
                        }
                    }
                }
            }
            let mut file = std::io::BufWriter::new(std::fs::File::create(&out)?);
            for row in &rows {
                writeln!(file, "{}", serde_json::to_string(row)?)?;
            }
            file.flush()?;
            let s = summarize(&rows);
            println!("cells: {}, agree: {}, disagree: {}", s.cells, s.agree, s.cells - s.agree);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
