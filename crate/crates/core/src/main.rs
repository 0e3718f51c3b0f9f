//! `deficit-takagi` command-line front end.
//!
//! Exit codes: 0 success, 1 verified mismatch or counterexample, 2 usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::One;

use deficit_takagi::identities::{self, IdentityReport, Limits, Profile};
use deficit_takagi::{
    cardinality_s, compute_via_lemma2, compute_via_recurrence, compute_via_takagi,
    cumulative_naive, deficient_digit_sum, takagi_dyadic, takagi_enclosure, takagi_rational,
    Dyadic, Rational, SeqIndex, SeqValue,
};

/// Largest index accepted by the O(n) methods without `--force`.
const LINEAR_GUARD: u64 = 1 << 26;

#[derive(Parser)]
#[command(
    name = "deficit-takagi",
    version,
    about = "Cumulated deficient binary digit sum (A268289) and the Takagi function"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute A(n).
    Compute {
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        /// Allow the O(n) methods beyond 2^26.
        #[arg(long)]
        force: bool,
    },
    /// Emit A(a)..=A(b).
    Range {
        a: u64,
        b: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Bfile)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = Method::Recurrence)]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        force: bool,
    },
    /// Evaluate tau(p/q), or tau(p/2^e) with --exp.
    Takagi {
        #[arg(allow_negative_numbers = true)]
        p: i128,
        #[arg(allow_negative_numbers = true)]
        q: Option<i128>,
        #[arg(long)]
        exp: Option<u32>,
        /// Print an enclosure from this many series terms instead.
        #[arg(long)]
        enclose: Option<u32>,
    },
    /// Sweep catalog identities (`all` for every entry).
    Verify {
        id: String,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        mmax: Option<u32>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Negative control: shift every right-hand side by one.
        #[arg(long)]
        corrupt: bool,
    },
    /// Print a special index sequence.
    Special {
        #[arg(value_enum)]
        which: Special,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long)]
        kmax: Option<u32>,
        #[arg(long)]
        mmax: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Sets,
    Recurrence,
    Lemma2,
    Takagi,
    All,
}

impl Method {
    const SINGLE: [Method; 5] = [
        Method::Naive,
        Method::Sets,
        Method::Recurrence,
        Method::Lemma2,
        Method::Takagi,
    ];

    fn is_linear(self) -> bool {
        matches!(self, Method::Naive | Method::Sets | Method::All)
    }

    fn eval(self, n: SeqIndex) -> SeqValue {
        match self {
            Method::Naive => cumulative_naive(n),
            Method::Sets => cardinality_s(n),
            Method::Recurrence => compute_via_recurrence(n),
            Method::Lemma2 => compute_via_lemma2(n),
            Method::Takagi => compute_via_takagi(n),
            Method::All => unreachable!("`all` is expanded by the caller"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Bfile,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Special {
    A026644,
    A000975,
    Power4,
    Minima,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Io(err)
    }
}

impl From<deficit_takagi::Error> for Failure {
    fn from(err: deficit_takagi::Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(err)) if err.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute { n, method, force } => compute(n, method, force),
        Command::Range {
            a,
            b,
            format,
            method,
            out,
            force,
        } => range(a, b, format, method, out, force),
        Command::Takagi { p, q, exp, enclose } => takagi(p, q, exp, enclose),
        Command::Verify {
            id,
            kmax,
            mmax,
            format,
            corrupt,
        } => verify(&id, kmax, mmax, format, corrupt),
        Command::Special {
            which,
            count,
            limit,
            kmax,
            mmax,
        } => special(which, count, limit, kmax, mmax),
    }
}

fn guard(n: u64, method: Method, force: bool) -> Result<SeqIndex, Failure> {
    let index = SeqIndex::new(n)?;
    if method.is_linear() && n > LINEAR_GUARD && !force {
        return Err(Failure::Usage(format!(
            "method {} is O(n); n = {n} exceeds 2^26 (pass --force to run anyway)",
            method.to_possible_value().expect("named").get_name()
        )));
    }
    Ok(index)
}

fn compute(n: u64, method: Method, force: bool) -> Outcome {
    let index = guard(n, method, force)?;
    let mut out = io::stdout().lock();
    if method != Method::All {
        writeln!(out, "{}", method.eval(index))?;
        return Ok(true);
    }
    let values: Vec<SeqValue> = Method::SINGLE.iter().map(|m| m.eval(index)).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    let joined: Vec<String> = values.iter().map(ToString::to_string).collect();
    writeln!(
        out,
        "{} {}",
        joined.join(" "),
        if agree { "MATCH" } else { "MISMATCH" }
    )?;
    Ok(agree)
}

fn range(
    a: u64,
    b: u64,
    format: OutputFormat,
    method: Method,
    out: Option<PathBuf>,
    force: bool,
) -> Outcome {
    if method == Method::All {
        return Err(Failure::Usage("range takes a single method".into()));
    }
    if a > b {
        return Err(Failure::Usage(format!("empty range {a}..{b}")));
    }
    SeqIndex::new(a)?;
    guard(b, method, force)?;
    let sink: Box<dyn Write> = match &out {
        Some(path) => Box::new(
            File::create(path)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    match format {
        OutputFormat::Bfile => {}
        OutputFormat::Csv => writeln!(w, "n,value")?,
        OutputFormat::Json => writeln!(w, "[")?,
    }
    let mut running =
        (method == Method::Naive).then(|| cumulative_naive(SeqIndex::new(a).expect("checked")));
    for n in a..=b {
        let v = match running.as_mut() {
            Some(acc) => {
                if n > a {
                    *acc += deficient_digit_sum(n).expect("n > a >= 0");
                }
                *acc
            }
            None => method.eval(SeqIndex::new(n).expect("checked")),
        };
        match format {
            OutputFormat::Bfile => writeln!(w, "{n} {v}")?,
            OutputFormat::Csv => writeln!(w, "{n},{v}")?,
            OutputFormat::Json => {
                let sep = if n < b { "," } else { "" };
                writeln!(w, "  {{\"n\": {n}, \"value\": {v}}}{sep}")?
            }
        }
    }
    if format == OutputFormat::Json {
        writeln!(w, "]")?;
    }
    w.flush()?;
    Ok(true)
}

/// Dyadic exponents beyond this go through the rational evaluator.
const DYADIC_EXP_MAX: u32 = 120;

fn takagi(p: i128, q: Option<i128>, exp: Option<u32>, enclose: Option<u32>) -> Outcome {
    let x = match (q, exp) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give either a denominator or --exp, not both".into(),
            ))
        }
        (Some(q), None) => Rational::new(p, q)?,
        (None, Some(e)) => Rational::new(p, BigInt::one() << e as usize)?,
        (None, None) => Rational::from(p),
    };
    if !x.in_unit_interval() {
        return Err(Failure::Usage(format!("argument {x} lies outside [0, 1]")));
    }
    let mut out = io::stdout().lock();
    if let Some(terms) = enclose {
        writeln!(out, "{}", takagi_enclosure(&x, terms)?)?;
        return Ok(true);
    }
    let value = match exp {
        Some(e) if e <= DYADIC_EXP_MAX => takagi_dyadic(Dyadic::new(p, e))?.to_rational(),
        _ => takagi_rational(&x)?,
    };
    writeln!(out, "{value}")?;
    Ok(true)
}

fn verify(
    id: &str,
    kmax: Option<u32>,
    mmax: Option<u32>,
    format: ReportFormat,
    corrupt: bool,
) -> Outcome {
    let profile = Profile::from_env()?;
    let descriptors = if id == "all" {
        identities::catalog()
    } else {
        vec![identities::lookup(id)?]
    };
    let mut reports: Vec<IdentityReport> = Vec::with_capacity(descriptors.len());
    for desc in descriptors {
        let desc = if corrupt { desc.corrupted() } else { desc };
        let defaults = desc.limits(profile);
        let limits = Limits::new(kmax.unwrap_or(defaults.kmax), mmax.unwrap_or(defaults.mmax));
        reports.push(identities::verify(&desc, limits)?);
    }
    let mut out = io::stdout().lock();
    match format {
        ReportFormat::Json if id != "all" => writeln!(out, "{}", reports[0].to_json())?,
        ReportFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        )?,
        ReportFormat::Text => {
            for r in &reports {
                write_report_line(&mut out, r)?;
            }
        }
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn write_report_line(out: &mut impl Write, r: &IdentityReport) -> io::Result<()> {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let ranges: Vec<String> = r
        .ranges
        .iter()
        .map(|p| format!("{}={}..{}", p.name, p.lo, p.hi))
        .collect();
    write!(
        out,
        "{verdict} {} cases={} {}",
        r.id,
        r.cases,
        ranges.join(" ")
    )?;
    if r.is_vacuous() {
        write!(out, " (no cases in range)")?;
    }
    if let Some(c) = r.counterexamples.first() {
        write!(
            out,
            " counterexamples={} first={} lhs={} rhs={}{}",
            r.counterexamples.len(),
            serde_json::to_string(&c.params).expect("params serialize"),
            c.lhs,
            c.rhs,
            if c.boundary { " [boundary]" } else { "" }
        )?;
    }
    writeln!(out)
}

fn special(
    which: Special,
    count: Option<usize>,
    limit: Option<u64>,
    kmax: Option<u32>,
    mmax: Option<u32>,
) -> Outcome {
    let mut out = io::stdout().lock();
    let join = |v: &[u64]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    match which {
        Special::A026644 => {
            let terms = match limit {
                Some(limit) => identities::half_value_indices(limit)?,
                None => identities::a026644_recurrence(count.unwrap_or(10))?,
            };
            writeln!(out, "{}", join(&terms))?;
            Ok(true)
        }
        Special::A000975 => {
            writeln!(
                out,
                "{}",
                join(&identities::lichtenberg(count.unwrap_or(10))?)
            )?;
            Ok(true)
        }
        Special::Power4 => {
            let points = identities::power4_fixed_points(mmax.unwrap_or(4))?;
            let cells: Vec<String> = points
                .iter()
                .map(|p| {
                    if p.holds() {
                        format!("({},{})", p.index, p.value)
                    } else {
                        format!("({},{}!={})", p.index, p.value, p.expected)
                    }
                })
                .collect();
            writeln!(out, "{}", cells.join(" "))?;
            Ok(points.iter().all(|p| p.holds()))
        }
        Special::Minima => {
            for k in 1..=kmax.unwrap_or(8) {
                let m = identities::interval_minimum(k)?;
                writeln!(out, "{} {} {}", m.k, m.argmin, m.min)?;
            }
            Ok(true)
        }
    }
}
