use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qriver::cfrac::{cf_of_rational, cf_of_surd};
use qriver::exact::{parse_rational, QuadraticSurd};
use qriver::forms::BinaryQuadraticForm;
use qriver::report::{analyze, river_report, sail_report, verify_report};
use qriver::topograph::{river, to_dot, Direction, DEFAULT_DOT_DEPTH};
use qriver::Error;
use serde::Serialize;

const MAX_TERMS_VAR: &str = "QRIVER_MAX_TERMS";

/// Sails, LLS sequences and Conway rivers of binary quadratic forms.
///
/// Forms are written `a,h,b` for a·x² + h·xy + b·y², with rational
/// components such as `1,-2,-5` or `1/2,3,-7/3`.
#[derive(Parser)]
#[command(name = "qriver", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction of a rational `p/q` or a surd `(p+sqrt(d))/q`.
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Largest number of terms searched for the period.
        #[arg(long, default_value_t = 10_000)]
        terms: usize,
    },
    /// Sail vertices and LLS window.
    Sail {
        #[arg(allow_hyphen_values = true)]
        form: String,
        /// Terms before and after the anchor, as `L,R`.
        #[arg(long, default_value = "4,4")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Walk the river of the topograph.
    River {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value_t = 12)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Topograph layers drawn around the river in DOT output.
        #[arg(long, default_value_t = DEFAULT_DOT_DEPTH)]
        depth: usize,
        /// Walk against the default direction.
        #[arg(long)]
        backward: bool,
    },
    /// Match LLS terms against river turn runs; exit 1 on mismatch.
    Verify {
        #[arg(allow_hyphen_values = true)]
        form: String,
        /// LLS terms taken on each side of the anchor.
        #[arg(long, default_value_t = 6)]
        window: usize,
    },
    /// Everything at once, ending with the LLS/river match.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value_t = 6)]
        window: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

enum Failure {
    Mismatch(String),
    Parse(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::SquareRadicand(_) | Error::NegativeRadicand(_) | Error::ZeroDenominator => {
                Failure::Parse(e.to_string())
            }
            other => Failure::Domain(other.to_string()),
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
    out.push('\n');
    out
}

fn max_terms(requested: usize) -> Result<usize, Failure> {
    match std::env::var(MAX_TERMS_VAR) {
        Ok(cap) => cap
            .trim()
            .parse::<usize>()
            .map(|cap| requested.min(cap))
            .map_err(|_| Failure::Parse(format!("{MAX_TERMS_VAR} must be a count, got `{cap}`"))),
        Err(_) => Ok(requested),
    }
}

fn parse_window(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Parse(format!("window must be `L,R`, got `{text}`"));
    let (l, r) = text.split_once(',').ok_or_else(bad)?;
    Ok((
        l.trim().parse().map_err(|_| bad())?,
        r.trim().parse().map_err(|_| bad())?,
    ))
}

fn cf_text(value: &str, terms: usize) -> Result<String, Failure> {
    let terms = max_terms(terms)?;
    let cf = if value.contains("sqrt") {
        let s: QuadraticSurd = value.parse()?;
        cf_of_surd(&s, terms)?
    } else {
        cf_of_rational(&parse_rational(value)?)
    };
    Ok(format!("{cf}\n"))
}

fn run(command: Command) -> Result<String, Failure> {
    let form = |text: &str| text.parse::<BinaryQuadraticForm>().map_err(Failure::from);
    match command {
        Command::Cf { value, terms } => cf_text(&value, terms),
        Command::Sail { form: f, window, format } => {
            if format == Format::Dot {
                return Err(Failure::Parse("sail output is JSON only".into()));
            }
            let (l, r) = parse_window(&window)?;
            Ok(json(&sail_report(&form(&f)?, l, r)?))
        }
        Command::River {
            form: f,
            steps,
            format,
            depth,
            backward,
        } => {
            let q = form(&f)?;
            let direction = if backward {
                Direction::Backward
            } else {
                Direction::Forward
            };
            match format {
                Format::Json => Ok(json(&river_report(&q, steps, direction)?)),
                Format::Dot => Ok(to_dot(&q, &river(&q, steps, direction)?.edges, depth)),
            }
        }
        Command::Verify { form: f, window } => {
            let report = verify_report(&form(&f)?, window)?;
            let out = json(&report);
            if report.result.matched {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
        Command::Analyze { form: f, window } => Ok(json(&analyze(&form(&f)?, window)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            eprintln!("error: LLS sequence and river turns disagree");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
