//! Front end for `sskein`: parse one word, compute its classes, and
//! optionally run the isotopy and skein-relation checks.

use std::io::Write;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use singular_skein::class::{ClassBasis, ClassPolynomial};
use singular_skein::markov::{self, MAX_DEGREE, MAX_STRANDS};
use singular_skein::skein::{self, skein_triple_check_with};
use singular_skein::verify::verify_moves;
use singular_skein::{Error, Limits, MoveConfig, SingularBraidWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_THEORY: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "sskein",
    version,
    about = "HOMFLYPT skein-module class of a closed singular braid"
)]
pub struct Args {
    /// Word in s<i> (positive crossing), S<i> (negative), t<i> (singular).
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Strand count; defaults to one more than the largest index.
    #[arg(long)]
    pub strands: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Check invariance along a seeded random walk of moves.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, default_value_t = 25)]
    pub moves: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check the skein relation at crossing index i.
    #[arg(long, value_name = "I")]
    pub skein_check: Option<usize>,
    #[arg(long, default_value_t = MAX_DEGREE)]
    pub max_degree: usize,
    #[arg(long, default_value_t = MAX_STRANDS)]
    pub max_strands: usize,
    /// Worker threads for the library's parallel loops; 0 picks a default.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Print the elapsed time on standard error.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkovTerm {
    pub x: u32,
    pub y: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinTerm {
    pub xhat: u32,
    pub yhat: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveFailure {
    pub step: usize,
    #[serde(rename = "move")]
    pub applied: String,
    pub word: String,
    pub strands: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub requested: usize,
    pub applied: usize,
    pub passed: usize,
    pub all_passed: bool,
    pub failures: Vec<MoveFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinCheckSummary {
    pub index: usize,
    pub holds: bool,
    pub plus: String,
    pub minus: String,
    pub zero: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub word: String,
    pub strands: usize,
    pub degree: usize,
    pub writhe: i64,
    pub components: usize,
    pub markov_class: Vec<MarkovTerm>,
    pub skein_class: Vec<SkeinTerm>,
    pub markov_text: String,
    pub skein_text: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verify: Option<VerifySummary>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub skein_check: Option<SkeinCheckSummary>,
    /// Kept off standard output so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

fn terms<B: ClassBasis>(c: &ClassPolynomial<B>) -> Vec<(u32, u32, String)> {
    c.terms().map(|((a, b), v)| (a, b, v.to_string())).collect()
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::DegreeCapExceeded { .. } | Error::StrandCapExceeded { .. } => EXIT_CAP,
        Error::Braid(_) | Error::InvalidLimits(_) | Error::IndexOutOfRange { .. } => EXIT_INVALID,
        _ => EXIT_THEORY,
    }
}

/// Runs the pipeline for parsed arguments.
pub fn report(args: &Args) -> Result<RunReport, Error> {
    let start = Instant::now();
    let limits = Limits::new(args.max_degree, args.max_strands)?;
    let w = SingularBraidWord::parse(&args.word, args.strands)?;
    limits.check(&w)?;
    let markov_class = markov::markov_class_with(&w, &limits)?;
    let skein_class = skein::skein_from_markov(&markov_class, w.strands(), w.exponent_sum())?;

    let verify = if args.verify {
        let config = MoveConfig {
            max_strands: limits.max_strands().min(w.strands().max(7)),
            max_length: w.len().max(12) + 4,
        };
        let r = verify_moves(&w, args.moves, args.seed, &config, &limits)?;
        Some(VerifySummary {
            seed: args.seed,
            requested: args.moves,
            applied: r.outcomes.len(),
            passed: r.passed(),
            all_passed: r.all_passed(),
            failures: r
                .outcomes
                .iter()
                .filter(|o| !o.holds)
                .map(|o| MoveFailure {
                    step: o.step,
                    applied: o.applied.to_string(),
                    word: o.word.to_string(),
                    strands: o.word.strands(),
                })
                .collect(),
        })
    } else {
        None
    };

    let skein_check = match args.skein_check {
        Some(i) => {
            let c = skein_triple_check_with(&w, i, &limits)?;
            Some(SkeinCheckSummary {
                index: i,
                holds: c.holds,
                plus: c.plus.to_string(),
                minus: c.minus.to_string(),
                zero: c.zero.to_string(),
            })
        }
        None => None,
    };

    Ok(RunReport {
        word: w.to_string(),
        strands: w.strands(),
        degree: w.degree(),
        writhe: w.exponent_sum(),
        components: w.components(),
        markov_class: terms(&markov_class)
            .into_iter()
            .map(|(x, y, coeff)| MarkovTerm { x, y, coeff })
            .collect(),
        skein_class: terms(&skein_class)
            .into_iter()
            .map(|(xhat, yhat, coeff)| SkeinTerm { xhat, yhat, coeff })
            .collect(),
        markov_text: markov_class.to_string(),
        skein_text: skein_class.to_string(),
        verify,
        skein_check,
        elapsed: start.elapsed(),
    })
}

fn render_text(r: &RunReport) -> String {
    let mut s = String::new();
    let word = if r.word.is_empty() { "(empty)" } else { &r.word };
    s.push_str(&format!("word:        {word}\n"));
    s.push_str(&format!("strands:     {}\n", r.strands));
    s.push_str(&format!("degree:      {}\n", r.degree));
    s.push_str(&format!("writhe:      {}\n", r.writhe));
    s.push_str(&format!("components:  {}\n", r.components));
    s.push_str(&format!("markov:      {}\n", r.markov_text));
    s.push_str(&format!("skein:       {}\n", r.skein_text));
    if let Some(v) = &r.verify {
        s.push_str(&format!(
            "verify:      {}/{} moves preserve the class (seed {}, {} requested)\n",
            v.passed, v.applied, v.seed, v.requested
        ));
        for f in &v.failures {
            s.push_str(&format!(
                "  FAIL step {}: {} -> [{}] on {} strands\n",
                f.step, f.applied, f.word, f.strands
            ));
        }
    }
    if let Some(c) = &r.skein_check {
        let verdict = if c.holds { "holds" } else { "FAILS" };
        s.push_str(&format!("skein check: relation at index {} {verdict}\n", c.index));
        s.push_str(&format!("  plus:  {}\n  minus: {}\n  zero:  {}\n", c.plus, c.minus, c.zero));
    }
    s
}

fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    #[cfg(feature = "parallel")]
    {
        if threads > 0 {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                return pool.install(f);
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    f()
}

/// Runs the command line `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = with_threads(args.threads, || report(&args));
    let r = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    let text = match args.format {
        Format::Text => render_text(&r),
        Format::Json => serde_json::to_string_pretty(&r).expect("report serializes") + "\n",
    };
    let _ = out.write_all(text.as_bytes());
    if args.timing {
        let _ = writeln!(err, "elapsed: {:.3?}", r.elapsed);
    }
    EXIT_OK
}
