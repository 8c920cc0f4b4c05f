use std::fs::File;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use jetworks::curves::{CurveConfig, PlaneCurve, DEFAULT_MAX_COMPONENT_DEGREE};
use jetworks::error::{Error, ErrorClass};
use jetworks::jet::Jet;
use jetworks::joris::recover_jet;
use jetworks::numsg::{bezout_neg_pos, frobenius, represent_paper, represent_search};
use jetworks::parse::{parse_poly_with_limit, DEFAULT_MAX_DEGREE};
use jetworks::probe::{analyze_pair, read_csv, ProbeConfig};
use jetworks::real_roots::Interval;
use jetworks::taxonomy::{catalog_entries, catalog_entry, classify_curve, classify_monomial};

mod render;

use render::Output;

#[derive(Parser)]
#[command(name = "jetworks", version, about = "Exact jets, Joris reconstruction and curve classification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on truncated power series.
    #[command(subcommand)]
    Jet(JetCommand),
    /// The numerical semigroup generated by two coprime integers.
    #[command(subcommand)]
    Semigroup(SemigroupCommand),
    /// Exact tests on polynomial plane curves.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Rule-based classification of monomial curves.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Reference curves with known classifications.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Recover g from sampled g^m, g^n (CSV with header t,gm,gn) and check smoothness.
    Probe {
        #[arg(long)]
        input: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

#[derive(Subcommand)]
enum JetCommand {
    /// Recover the jet of g from the jets of g^m and g^n.
    Recover {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Coefficients of g^m, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Coefficients of g^n, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Order of both jets; shorter inputs are padded with zeros. Defaults to the smaller input order.
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Subcommand)]
enum SemigroupCommand {
    /// Bezout coefficients a < 0 < b with a*m + b*n = 1.
    Bezout { m: u64, n: u64 },
    /// Largest integer not of the form c1*m + c2*n with c1, c2 >= 0.
    Frobenius { m: u64, n: u64 },
    /// Write r as c1*m + c2*n with c1, c2 >= 0.
    Represent { m: u64, n: u64, r: u64 },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Immersion and injectivity tests plus the implied facts.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        /// Parameter domain LO..HI, e.g. 0..inf or [-1..1]; unbracketed ends are open.
        #[arg(long, allow_hyphen_values = true)]
        domain: Option<String>,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// The curve t -> (t^A, t^B) on the real line.
    Monomial { a: u64, b: u64 },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the reference curves.
    List,
    /// Re-derive one entry's closure and run its check.
    Check { name: String },
}

/// Failure of a command: a library error or a failed check.
enum Failure {
    Lib(Error),
    Contradiction(String),
    CheckFailed(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Inconsistent => 2,
                ErrorClass::ResourceLimit => 3,
            },
            Failure::Contradiction(_) | Failure::CheckFailed(_) => 2,
            Failure::Usage(_) => 1,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Lib(e) => format!("{}: {e}", e.tag()),
            Failure::Contradiction(m) => format!("contradiction: {m}"),
            Failure::CheckFailed(m) => format!("check_failed: {m}"),
            Failure::Usage(m) => format!("usage: {m}"),
        }
    }
}

fn max_degree() -> Result<usize, Failure> {
    match std::env::var("JETWORKS_MAX_DEGREE") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("JETWORKS_MAX_DEGREE must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_COMPONENT_DEGREE),
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Jet(JetCommand::Recover { m, n, a, b, order }) => {
            let (a, b) = (Jet::parse(&a)?, Jet::parse(&b)?);
            let order = order.unwrap_or(a.order().min(b.order()));
            let r = recover_jet(&a.resize(order), &b.resize(order), m, n)?;
            Ok(Output::Recovered(r))
        }
        Command::Semigroup(SemigroupCommand::Bezout { m, n }) => Ok(Output::Bezout(bezout_neg_pos(m, n)?)),
        Command::Semigroup(SemigroupCommand::Frobenius { m, n }) => {
            Ok(Output::Frobenius { m, n, frobenius: frobenius(m, n)? })
        }
        Command::Semigroup(SemigroupCommand::Represent { m, n, r }) => {
            let found = match represent_paper(m, n, r) {
                Ok(rep) => Some((rep, "closed_form")),
                Err(Error::BelowThreshold { .. }) => represent_search(m, n, r).map(|rep| (rep, "search")),
                Err(e) => return Err(e.into()),
            };
            Ok(Output::Represent { m, n, r, found })
        }
        Command::Curve(CurveCommand::Classify { x, y, domain }) => {
            let cap = max_degree()?;
            let parse_cap = cap.max(DEFAULT_MAX_DEGREE);
            let (xp, yp) = (parse_poly_with_limit(&x, parse_cap)?, parse_poly_with_limit(&y, parse_cap)?);
            let domain: Interval = match domain {
                Some(d) => d.parse()?,
                None => Interval::real_line(),
            };
            let curve = PlaneCurve::new(xp, yp, domain);
            let result = classify_curve(&curve, &CurveConfig { max_degree: cap })?;
            if let Err(c) = &result.closure {
                return Err(Failure::Contradiction(c.to_string()));
            }
            Ok(Output::Curve(curve, result))
        }
        Command::Classify(ClassifyCommand::Monomial { a, b }) => {
            Ok(Output::Monomial { a, b, facts: classify_monomial(a, b)? })
        }
        Command::Catalog(CatalogCommand::List) => Ok(Output::CatalogList(catalog_entries())),
        Command::Catalog(CatalogCommand::Check { name }) => {
            let entry =
                catalog_entry(&name).ok_or_else(|| Failure::Usage(format!("no catalog entry named {name:?}")))?;
            let check = render::check_entry(&entry, max_degree()?)?;
            if !check.passed {
                return Err(Failure::CheckFailed(format!("{name}: {}", check.summary())));
            }
            Ok(Output::CatalogCheck(check))
        }
        Command::Probe { input, m, n, max_order } => {
            let cfg = ProbeConfig::default();
            let file = File::open(&input).map_err(|e| Failure::Usage(format!("cannot open {input}: {e}")))?;
            let (gm, gn) = read_csv(file, &cfg)?;
            let (analysis, _) = analyze_pair(&gm, &gn, m, n, max_order, &cfg)?;
            Ok(Output::Probe(analysis))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("error: usage: {}", first.trim_start_matches("error: "));
            return ExitCode::from(1);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Json => println!("{}", out.to_json()),
                Format::Text => print!("{}", out.to_text()),
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.line());
            ExitCode::from(f.exit_code())
        }
    }
}
