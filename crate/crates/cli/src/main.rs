use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use stanley_critical::homological::{betti_numbers, sdepth_search};
use stanley_critical::{
    build_canonical, hilbert_series_numerator, ideal_direct_sum, is_critical, lex_ideal_of, parse_ideal_any,
    parse_spec, stanley_decomposition, stanleyize, verify_partition, CanonicalCriticalSpec, Error, ErrorKind,
    Limits, Mode, MonomialIdeal,
};

mod report;

use report::{Pretty, Report};

/// Stanley depth, lex ideals and Stanley decompositions of monomial ideals.
///
/// Every command prints one JSON document on stdout. Exit codes: 0 success,
/// 1 parse or validation error, 2 precondition violation, 3 resource limit,
/// 4 internal invariant failure.
#[derive(Debug, Parser)]
#[command(name = "stanley-critical", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Flags {
    /// Highest degree the lex ideal construction may reach.
    #[arg(long, global = true, default_value_t = Limits::default().degree_ceiling)]
    degree_ceiling: u32,
    /// Characteristic of the prime field used for depth.
    #[arg(long = "char", global = true, default_value_t = Limits::default().prime)]
    prime: u64,
    /// Interval placements allowed in one Stanley depth search.
    #[arg(long, global = true, default_value_t = Limits::default().node_budget)]
    node_budget: u64,
    /// Largest characteristic poset the Stanley depth search accepts.
    #[arg(long, global = true, default_value_t = Limits::default().poset_cap)]
    poset_cap: usize,
    /// Largest lcm lattice the Betti computation accepts.
    #[arg(long, global = true, default_value_t = Limits::default().lcm_cap)]
    lcm_cap: usize,
    /// Largest exponent accepted in the input.
    #[arg(long, global = true, default_value_t = Limits::default().exponent_cap)]
    exp_cap: u32,
    /// Print a human-readable table after the JSON.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Args)]
struct IdealInput {
    /// Inline ideal, e.g. "n=2; x1^2, x1*x2".
    #[arg(conflicts_with = "input")]
    ideal: Option<String>,
    /// Read the ideal from a file (text form or JSON record).
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SpecInput {
    /// Inline spec, e.g. "n=3; m1=x2; m2=x3".
    #[arg(long, conflicts_with = "spec_file")]
    spec: Option<String>,
    /// Read the spec from a file.
    #[arg(long)]
    spec_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Quotient,
    Ideal,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Quotient => Mode::Quotient,
            ModeArg::Ideal => Mode::Ideal,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert series numerator and Hilbert function of S/I.
    Hilbert {
        #[command(flatten)]
        input: IdealInput,
        /// Last degree of the listed Hilbert function.
        #[arg(long, default_value_t = 10)]
        max_degree: u32,
    },
    /// The lex ideal with the Hilbert function of S/I.
    Lex {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Whether I^lex is a universal lexsegment ideal.
    IsCritical {
        #[command(flatten)]
        input: IdealInput,
    },
    /// Canonical critical ideals and their Stanley decompositions.
    Critical {
        #[command(subcommand)]
        command: CriticalCommand,
    },
    /// Stanley depth by exhaustive interval-partition search.
    Sdepth {
        #[command(flatten)]
        input: IdealInput,
        #[arg(long, value_enum, default_value = "quotient")]
        mode: ModeArg,
    },
    /// Depth and multigraded Betti numbers over GF(p).
    Depth {
        #[command(flatten)]
        input: IdealInput,
    },
    /// A Stanley ideal with the depth and Hilbert function of a non-critical I.
    Stanleyize {
        #[command(flatten)]
        input: IdealInput,
    },
}

#[derive(Debug, Subcommand)]
enum CriticalCommand {
    /// The ideal I_(m1, ..., mt).
    Build {
        #[command(flatten)]
        spec: SpecInput,
    },
    /// The explicit Stanley decomposition of S/I or I.
    Decompose {
        #[command(flatten)]
        spec: SpecInput,
        #[arg(long, value_enum, default_value = "quotient")]
        mode: ModeArg,
        /// Check the partition exhaustively.
        #[arg(long)]
        verify: bool,
    },
    /// Check both decompositions exhaustively.
    Verify {
        #[command(flatten)]
        spec: SpecInput,
    },
}

impl Flags {
    fn limits(&self) -> Limits {
        Limits {
            degree_ceiling: self.degree_ceiling,
            prime: self.prime,
            node_budget: self.node_budget,
            poset_cap: self.poset_cap,
            lcm_cap: self.lcm_cap,
            exponent_cap: self.exp_cap,
        }
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Hilbert { .. } => "hilbert",
            Command::Lex { .. } => "lex",
            Command::IsCritical { .. } => "is-critical",
            Command::Critical {
                command: CriticalCommand::Build { .. },
            } => "critical build",
            Command::Critical {
                command: CriticalCommand::Decompose { .. },
            } => "critical decompose",
            Command::Critical {
                command: CriticalCommand::Verify { .. },
            } => "critical verify",
            Command::Sdepth { .. } => "sdepth",
            Command::Depth { .. } => "depth",
            Command::Stanleyize { .. } => "stanleyize",
        }
    }
}

fn validate(limits: &Limits) -> Result<(), Error> {
    if !stanley_critical::homological::is_prime(limits.prime) {
        return Err(Error::InvalidArgument(format!("--char {} is not prime", limits.prime)));
    }
    if limits.degree_ceiling == 0 {
        return Err(Error::InvalidArgument("--degree-ceiling must be positive".into()));
    }
    Ok(())
}

fn read_source(inline: &Option<String>, path: &Option<PathBuf>, what: &str) -> Result<String, Error> {
    match (inline, path) {
        (Some(s), _) => Ok(s.clone()),
        (None, Some(p)) => {
            fs::read_to_string(p).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", p.display())))
        }
        (None, None) => Err(Error::InvalidArgument(format!("no {what} given"))),
    }
}

fn check_cap(max: u32, cap: u32) -> Result<(), Error> {
    if max > cap {
        return Err(Error::ExponentCap { exponent: max, cap });
    }
    Ok(())
}

fn load_ideal(input: &IdealInput, limits: &Limits) -> Result<MonomialIdeal, Error> {
    let text = read_source(&input.ideal, &input.input, "ideal")?;
    let ideal = parse_ideal_any(text.trim())?;
    check_cap(ideal.max_exponent(), limits.exponent_cap)?;
    Ok(ideal)
}

fn load_spec(input: &SpecInput, limits: &Limits) -> Result<CanonicalCriticalSpec, Error> {
    let text = read_source(&input.spec, &input.spec_file, "spec")?;
    let spec = parse_spec(text.trim())?;
    let max = spec.ms().iter().map(|m| m.max_exponent()).max().unwrap_or(0);
    check_cap(max, limits.exponent_cap)?;
    Ok(spec)
}

fn run(command: &Command, limits: &Limits) -> Result<(serde_json::Value, Pretty), Error> {
    validate(limits)?;
    match command {
        Command::Hilbert { input, max_degree } => {
            let ideal = load_ideal(input, limits)?;
            let series = hilbert_series_numerator(&ideal);
            let values = series.values(*max_degree)?;
            report::hilbert(&ideal, &series, values)
        }
        Command::Lex { input } => {
            let ideal = load_ideal(input, limits)?;
            report::lex(&ideal, &lex_ideal_of(&ideal, limits.degree_ceiling)?)
        }
        Command::IsCritical { input } => {
            let ideal = load_ideal(input, limits)?;
            let lex = lex_ideal_of(&ideal, limits.degree_ceiling)?;
            let critical = is_critical(&ideal, limits.degree_ceiling)?;
            report::is_critical(&ideal, &lex, critical)
        }
        Command::Critical { command } => match command {
            CriticalCommand::Build { spec } => {
                let spec = load_spec(spec, limits)?;
                report::build(&spec, &build_canonical(&spec)?)
            }
            CriticalCommand::Decompose { spec, mode, verify } => {
                let spec = load_spec(spec, limits)?;
                let ideal = build_canonical(&spec)?;
                let d = match Mode::from(*mode) {
                    Mode::Quotient => stanley_decomposition(&spec)?,
                    Mode::Ideal => ideal_direct_sum(&spec)?,
                };
                let check = if *verify {
                    let check = verify_partition(&d, &ideal)?;
                    if !check.ok {
                        return Err(Error::Internal(format!(
                            "{} decomposition of {spec} fails at {}",
                            d.mode(),
                            check.counterexample.map(|m| m.to_string()).unwrap_or_default()
                        )));
                    }
                    Some(check)
                } else {
                    None
                };
                report::decompose(&spec, &ideal, &d, check.as_ref())
            }
            CriticalCommand::Verify { spec } => {
                let spec = load_spec(spec, limits)?;
                let ideal = build_canonical(&spec)?;
                let mut rows = Vec::new();
                for d in [stanley_decomposition(&spec)?, ideal_direct_sum(&spec)?] {
                    let check = verify_partition(&d, &ideal)?;
                    if let Some(m) = &check.counterexample {
                        return Err(Error::Internal(format!("{} decomposition of {spec} fails at {m}", d.mode())));
                    }
                    rows.push((d, check));
                }
                report::verify(&spec, &ideal, &rows)
            }
        },
        Command::Sdepth { input, mode } => {
            let ideal = load_ideal(input, limits)?;
            report::sdepth(&ideal, &sdepth_search(&ideal, (*mode).into(), limits)?)
        }
        Command::Depth { input } => {
            let ideal = load_ideal(input, limits)?;
            report::depth(&ideal, &betti_numbers(&ideal, limits.prime, limits)?)
        }
        Command::Stanleyize { input } => {
            let ideal = load_ideal(input, limits)?;
            report::stanleyize(&stanleyize(&ideal, limits)?)
        }
    }
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Validation => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Resource => 3,
        ErrorKind::Internal => 4,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let limits = cli.flags.limits();
    let command = cli.command.name();
    let mut out = io::stdout().lock();
    let (report, code) = match run(&cli.command, &limits) {
        Ok((result, pretty)) => (Report::ok(command, limits, result, pretty), 0),
        Err(e) => {
            let code = exit_code(e.kind());
            eprintln!("error: {e}");
            (Report::error(command, limits, &e), code)
        }
    };
    let written = report.write(&mut out, cli.flags.pretty).and_then(|_| out.flush());
    if written.is_err() {
        return ExitCode::from(4);
    }
    ExitCode::from(code)
}
