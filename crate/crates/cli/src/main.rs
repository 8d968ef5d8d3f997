use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use mzv_core::derivations::{cyclic_c_bar_poly, cyclic_c_poly, Derivation};
use mzv_core::numerics::{
    Evaluator, StSeries, DEFAULT_CUTOFF, DEFAULT_DIGITS, DEFAULT_SLACK, DEFAULT_ST_CUTOFF,
};
use mzv_core::parse::{parse_composition_or_word, parse_poly, parse_word};
use mzv_core::products::{harmonic, shuffle};
use mzv_core::qsym::{
    act, complete_h, elementary_e, exp_partial_t, phi_bar_sigma, power_p, sigma_t,
};
use mzv_core::relations::{generate, rank_report};
use mzv_core::{Error, Family, Poly, Relation, TruncatedSeries};

#[derive(Parser)]
#[command(
    name = "mzv",
    version,
    about = "Multiple zeta values: word algebra, relations and numerics"
)]
struct Cli {
    /// Output format; `dual` and `eval` default to text, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeriveOp {
    #[value(name = "D")]
    D,
    #[value(name = "Dn")]
    Dn,
    #[value(name = "Dbar")]
    Dbar,
    #[value(name = "partial_n")]
    PartialN,
    #[value(name = "C")]
    C,
    #[value(name = "Cbar")]
    Cbar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Elem {
    Pn,
    En,
    Hn,
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    Sigma,
    ExpPartial,
    Phi,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvalKind {
    Zeta,
    T,
    S,
}

#[derive(clap::Args)]
struct FamilyArgs {
    /// Weight of the relations.
    #[arg(long)]
    weight: usize,

    /// Comma-separated family names, or `all`.
    #[arg(long, default_value = "all")]
    families: String,
}

#[derive(clap::Args)]
struct NumericArgs {
    /// Summation cutoff N (largest n1).
    #[arg(long)]
    cutoff: Option<u64>,

    /// Working precision in significant decimal digits.
    #[arg(long, env = "MZV_PRECISION", default_value_t = DEFAULT_DIGITS)]
    precision: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Dual of an admissible composition or word.
    Dual { input: String },
    /// Shuffle product of two words or polynomials.
    Shuffle { left: String, right: String },
    /// Harmonic (stuffle) product of two words or polynomials.
    Harmonic { left: String, right: String },
    /// Apply a derivation or a cyclic derivation.
    Derive {
        #[arg(long, value_enum)]
        op: DeriveOp,
        #[arg(long, default_value_t = 1)]
        n: usize,
        input: String,
    },
    /// Action of a quasi-symmetric function on a word.
    Act {
        #[arg(long, value_enum)]
        elem: Elem,
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// The acting element when `--elem word`.
        #[arg(long)]
        u: Option<String>,
        input: String,
    },
    /// Truncated t-series automorphisms.
    Series {
        #[arg(long, value_enum)]
        op: SeriesOp,
        #[arg(long, default_value_t = 6)]
        order: usize,
        input: String,
    },
    /// Emit relations as JSON lines.
    Relations {
        #[command(flatten)]
        families: FamilyArgs,
        /// Accepted for compatibility; output is always produced in generation order.
        #[arg(long)]
        unordered: bool,
    },
    /// Exact ranks of relation families.
    Rank {
        #[command(flatten)]
        families: FamilyArgs,
    },
    /// Check relations numerically; exits 1 if any fails.
    Verify {
        #[command(flatten)]
        families: FamilyArgs,
        /// Include every weight from 2 up to `--weight`.
        #[arg(long)]
        up_to: bool,
        #[command(flatten)]
        numeric: NumericArgs,
        #[arg(long, default_value_t = DEFAULT_SLACK)]
        slack: f64,
        #[arg(long)]
        unordered: bool,
    },
    /// Evaluate zeta of a composition, word or polynomial, or a T/S series.
    Eval {
        input: String,
        #[arg(long, value_enum, default_value = "zeta")]
        kind: EvalKind,
        /// Last exponent of an S series.
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[command(flatten)]
        numeric: NumericArgs,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(usize),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

/// A word in any notation, or a polynomial in letter notation.
fn parse_input(s: &str) -> Result<Poly, Error> {
    match parse_word(s) {
        Ok(w) => Ok(Poly::from(w)),
        Err(word_err) => {
            if s.contains(['+', '-', '/', ' '])
                || s.trim().starts_with(|c: char| c.is_ascii_digit())
            {
                parse_poly(s)
            } else {
                Err(word_err)
            }
        }
    }
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    order: usize,
    coeffs: &'a [Poly],
}

fn series_json(s: &TruncatedSeries) -> SeriesOut<'_> {
    SeriesOut {
        order: s.order(),
        coeffs: s.coeffs(),
    }
}

struct Output {
    sink: Box<dyn Write>,
    format: Format,
}

impl Output {
    fn line(&mut self, text: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.sink, "{text}")
    }

    fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.sink, value)?;
        writeln!(self.sink)
    }

    fn emit<T: Serialize>(&mut self, value: &T, text: impl std::fmt::Display) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(value),
            Format::Text => self.line(text),
        }
    }
}

fn selected_families(args: &FamilyArgs) -> Result<Vec<Family>, Failure> {
    Ok(Family::parse_list(&args.families)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let default_format = match cli.command {
        Command::Dual { .. } | Command::Eval { .. } => Format::Text,
        _ => Format::Json,
    };
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut out = Output {
        sink,
        format: cli.format.unwrap_or(default_format),
    };
    match cli.command {
        Command::Dual { input } => {
            let c = parse_composition_or_word(&input)?;
            let d = c.dual()?;
            let value = json!({ "input": c.to_string(), "dual": d.to_string(), "word": d.to_word().to_string() });
            out.emit(&value, &d)?;
        }
        Command::Shuffle { left, right } => {
            let p = shuffle(&parse_input(&left)?, &parse_input(&right)?);
            out.emit(&p, &p)?;
        }
        Command::Harmonic { left, right } => {
            let p = harmonic(&parse_input(&left)?, &parse_input(&right)?);
            out.emit(&p, &p)?;
        }
        Command::Derive { op, n, input } => {
            let p = parse_input(&input)?;
            let r = match op {
                DeriveOp::D => Derivation::d().apply(&p),
                DeriveOp::Dn => Derivation::d_n(n)?.apply(&p),
                DeriveOp::Dbar => Derivation::d().conjugate().apply(&p),
                DeriveOp::PartialN => Derivation::ihara_kaneko(n)?.apply(&p),
                DeriveOp::C => cyclic_c_poly(&p),
                DeriveOp::Cbar => cyclic_c_bar_poly(&p),
            };
            out.emit(&r, &r)?;
        }
        Command::Act { elem, n, u, input } => {
            let acting = match elem {
                Elem::Pn => power_p(n)?,
                Elem::En => elementary_e(n),
                Elem::Hn => complete_h(n),
                Elem::Word => {
                    let u = u.ok_or_else(|| Failure::Usage("--elem word needs --u".into()))?;
                    parse_input(&u)?
                }
            };
            let r = act(&acting, &parse_input(&input)?)?;
            out.emit(&r, &r)?;
        }
        Command::Series { op, order, input } => {
            let p = parse_input(&input)?;
            let s = match op {
                SeriesOp::Sigma => sigma_t(&p, order),
                SeriesOp::ExpPartial => exp_partial_t(&p, order),
                SeriesOp::Phi => phi_bar_sigma(&p, order),
            };
            out.emit(&series_json(&s), &s)?;
        }
        Command::Relations { families, .. } => {
            for f in selected_families(&families)? {
                for r in generate(f, families.weight)? {
                    out.emit(&r, format!("{}: {}", r.id(), r.element))?;
                }
            }
        }
        Command::Rank { families } => {
            let report = rank_report(families.weight, &selected_families(&families)?)?;
            let mut text = format!(
                "weight {}: {} words, rank {}, nullity {}",
                report.weight,
                report.basis.len(),
                report.rank,
                report.nullity
            );
            for f in &report.families {
                text.push_str(&format!(
                    "\n  {}: {} relations, rank {}",
                    f.family, f.relations, f.rank
                ));
            }
            out.emit(&report, text)?;
        }
        Command::Verify {
            families,
            up_to,
            numeric,
            slack,
            ..
        } => {
            let fams = selected_families(&families)?;
            let weights = if up_to {
                2..=families.weight
            } else {
                families.weight..=families.weight
            };
            let mut relations: Vec<Relation> = Vec::new();
            for w in weights {
                for &f in &fams {
                    relations.extend(generate(f, w)?);
                }
            }
            let ev = Evaluator::new(numeric.precision);
            let reports = ev.verify(&relations, numeric.cutoff.unwrap_or(DEFAULT_CUTOFF), slack)?;
            let mut failed = 0;
            for r in &reports {
                failed += usize::from(!r.pass);
                let verdict = if r.pass { "pass" } else { "FAIL" };
                out.emit(
                    r,
                    format!(
                        "{verdict} {} residual {:.3e} threshold {:.3e}",
                        r.id, r.residual, r.threshold
                    ),
                )?;
            }
            out.sink.flush()?;
            if failed > 0 {
                return Err(Failure::Verification(failed));
            }
        }
        Command::Eval {
            input,
            kind,
            m,
            numeric,
        } => {
            let ev = Evaluator::new(numeric.precision);
            let r = match kind {
                EvalKind::Zeta => {
                    let p = match parse_composition_or_word(&input) {
                        Ok(c) if input.trim().starts_with('(') => Poly::from(c.to_word()),
                        _ => parse_input(&input)?,
                    };
                    ev.zeta_of_poly(&p, numeric.cutoff.unwrap_or(DEFAULT_CUTOFF))?
                }
                EvalKind::T | EvalKind::S => {
                    let c = parse_composition_or_word(&input)?;
                    let series = match kind {
                        EvalKind::T => StSeries::T(c),
                        _ => StSeries::S(c, m),
                    };
                    ev.st_batch(&[series], numeric.cutoff.unwrap_or(DEFAULT_ST_CUTOFF))?
                        .remove(0)
                }
            };
            out.emit(&r, &r)?;
        }
    }
    out.sink.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(n)) => {
            eprintln!("mzv: {n} relation(s) failed verification");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("mzv: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("mzv: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("mzv: {e}");
            ExitCode::from(4)
        }
    }
}
