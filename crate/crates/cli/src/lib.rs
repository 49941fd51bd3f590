//! Command-line front end: parses arguments, loads a presentation file and
//! renders reports as stable line-oriented text.
//!
//! Exit codes: 0 for a positive verdict or success, 1 for a negative
//! verdict, 2 for usage and input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ncgb::gbcheck::{check_gb, membership, try_complete, CertifiedBasis, CompletionLimits, CompletionStatus, GbReport};
use ncgb::lhx::{lh_presentation, LhMode};
use ncgb::pbw::{count_normal_words_by_degree, normal_words, pbw_verdict, Bound};
use ncgb::presets::preset;
use ncgb::reduce::divide;
use ncgb::{Error, Presentation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ncgb", version, about = "Monic Groebner bases in free algebras over commutative rings")]
struct Cli {
    /// Worker threads for overlap reduction.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the overlap criterion on the relations.
    Check { file: PathBuf },
    /// Reduce a polynomial modulo the relations.
    Nf {
        file: PathBuf,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        trace: bool,
    },
    /// Ideal membership, for relations that form a Groebner basis.
    Member {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Words avoiding every leading monomial, up to a weighted degree.
    NormalWords {
        file: PathBuf,
        #[arg(long = "max-deg")]
        max_deg: u64,
        #[arg(long)]
        count_only: bool,
    },
    /// List overlaps and their overlap elements.
    Overlaps { file: PathBuf },
    /// PBW verdict and ordered-product basis.
    Pbw { file: PathBuf },
    /// Leading-homogeneous presentation.
    Lh {
        file: PathBuf,
        #[arg(long)]
        mode: LhMode,
    },
    /// Best-effort completion.
    Complete {
        file: PathBuf,
        #[arg(long = "max-rounds", default_value_t = 10)]
        max_rounds: usize,
        #[arg(long = "max-deg")]
        max_deg: Option<u64>,
    },
    /// Emit a preset family as a presentation file.
    Preset {
        name: String,
        /// Family parameters as `--key value` or `--key=value`.
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// Exit code and the text for each output stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(code, text) } else { Outcome::usage(text) };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return Outcome::usage("error: --threads must be at least 1\n".into());
        }
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    match pool.install(|| execute(cli.command)) {
        Ok((code, text)) => Outcome::ok(code, text),
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

fn load(path: &Path) -> Result<Presentation, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    Presentation::parse(&text).map_err(|source| CliError::Input { path: shown, source })
}

fn verdict_code(yes: bool) -> i32 {
    if yes {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Summary line plus one key-value line per removed relation and overlap.
pub fn render_check(p: &Presentation, report: &GbReport) -> String {
    let names = p.names();
    let mut out = String::new();
    if report.verdict {
        let _ = writeln!(
            out,
            "GROEBNER yes | overlaps {} | nontrivial {} | all reduced to 0",
            report.overlaps.len(),
            report.nontrivial_count()
        );
    } else if let Some(r) = report.failing_removed().next() {
        let _ = writeln!(
            out,
            "GROEBNER no | witness relation rel#{} | remainder {}",
            r.index,
            p.display_poly(&r.reduction.remainder)
        );
    } else if let Some(r) = report.failing_overlaps().next() {
        let _ = writeln!(
            out,
            "GROEBNER no | witness overlap {} | remainder {}",
            r.overlap.label(names),
            p.display_poly(&r.reduction.remainder)
        );
    }
    let status = |zero: bool| if zero { "zero" } else { "nonzero" };
    for r in &report.removed {
        let rem = &r.reduction.remainder;
        let _ = writeln!(
            out,
            "removed=rel#{} divisor=rel#{} status={} remainder={}",
            r.index,
            r.divisor,
            status(rem.is_zero()),
            p.display_poly(rem)
        );
    }
    for r in &report.overlaps {
        let _ = writeln!(
            out,
            "overlap={} status={} remainder={}",
            r.overlap.label(names),
            status(r.reduced_to_zero()),
            p.display_poly(&r.reduction.remainder)
        );
    }
    out
}

/// Splits `--key value` / `--key=value` pairs.
fn preset_params(raw: &[String]) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    let mut it = raw.iter();
    while let Some(arg) = it.next() {
        let Some(key) = arg.strip_prefix("--") else {
            return Err(CliError::Usage(format!("expected --key value, got {arg}")));
        };
        match key.split_once('=') {
            Some((k, v)) => out.push((k.to_string(), v.to_string())),
            None => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::Usage(format!("missing value for --{key}")))?;
                out.push((key.to_string(), v.clone()));
            }
        }
    }
    Ok(out)
}

fn execute(command: Command) -> Result<(i32, String), CliError> {
    let mut out = String::new();
    match command {
        Command::Check { file } => {
            let p = load(&file)?;
            let report = check_gb(p.relations())?;
            Ok((verdict_code(report.verdict), render_check(&p, &report)))
        }
        Command::Nf { file, poly, trace } => {
            let p = load(&file)?;
            let f = p.poly(&poly)?;
            let r = divide(&f, p.relations())?;
            let _ = writeln!(out, "{}", p.display_poly(&r.remainder));
            if trace {
                for line in r.render_trace(p.names()) {
                    let _ = writeln!(out, "{line}");
                }
            }
            Ok((EXIT_OK, out))
        }
        Command::Member { file, poly } => {
            let p = load(&file)?;
            let f = p.poly(&poly)?;
            let basis = CertifiedBasis::certify(p.relations())?;
            let (member, r) = membership(&f, &basis)?;
            let _ = writeln!(out, "MEMBER {} | remainder {}", yes_no(member), p.display_poly(&r.remainder));
            Ok((verdict_code(member), out))
        }
        Command::NormalWords {
            file,
            max_deg,
            count_only,
        } => {
            let p = load(&file)?;
            let lms = p.relations().iter().map(|g| g.lm().cloned()).collect::<ncgb::Result<Vec<_>>>()?;
            if count_only {
                for (k, c) in count_normal_words_by_degree(&lms, p.weights(), max_deg)?.iter().enumerate() {
                    let _ = writeln!(out, "deg {k}: {c}");
                }
            } else {
                for w in normal_words(&lms, p.order(), Bound::MaxDegree(max_deg))? {
                    let _ = writeln!(out, "{}", w.display(p.names()));
                }
            }
            Ok((EXIT_OK, out))
        }
        Command::Overlaps { file } => {
            let p = load(&file)?;
            let report = check_gb(p.relations())?;
            let _ = writeln!(
                out,
                "overlaps {} | nontrivial {}",
                report.overlaps.len(),
                report.nontrivial_count()
            );
            for r in &report.overlaps {
                let _ = writeln!(
                    out,
                    "overlap={} element={}",
                    r.overlap.label(p.names()),
                    p.display_poly(&r.element)
                );
            }
            Ok((EXIT_OK, out))
        }
        Command::Pbw { file } => {
            let p = load(&file)?;
            let v = pbw_verdict(&p)?;
            let _ = writeln!(out, "PBW {} | basis {}", yes_no(v.pbw), v.display(p.names()));
            let _ = writeln!(out, "shape_ok={}", v.shape_ok);
            let _ = writeln!(out, "gb_ok={}", v.gb_ok);
            let names = p.names();
            let missing: Vec<String> = v
                .missing_pairs
                .iter()
                .map(|&(a, b)| format!("{}*{}", names[b as usize], names[a as usize]))
                .collect();
            let _ = writeln!(out, "missing={}", missing.join(", "));
            let others: Vec<String> = v.other_lms.iter().map(|w| w.display(names).to_string()).collect();
            let _ = writeln!(out, "other_lms={}", others.join(", "));
            Ok((verdict_code(v.pbw), out))
        }
        Command::Lh { file, mode } => {
            let p = load(&file)?;
            Ok((EXIT_OK, lh_presentation(&p, mode)?.to_string()))
        }
        Command::Complete {
            file,
            max_rounds,
            max_deg,
        } => {
            let p = load(&file)?;
            let c = try_complete(
                p.relations(),
                CompletionLimits {
                    max_rounds,
                    max_degree: max_deg,
                },
            )?;
            let completed = c.status == CompletionStatus::Completed;
            match &c.status {
                CompletionStatus::Completed => {
                    let _ = writeln!(out, "COMPLETE yes | rounds {} | relations {}", c.rounds, c.relations.len());
                }
                CompletionStatus::AbortedNonUnit { remainder } => {
                    let _ = writeln!(
                        out,
                        "COMPLETE no | non-unit leading coefficient | remainder {}",
                        p.display_poly(remainder)
                    );
                }
                CompletionStatus::AbortedLimit => {
                    let _ = writeln!(out, "COMPLETE no | limit reached | rounds {}", c.rounds);
                }
            }
            out.push_str(&p.with_relations(c.relations)?.to_string());
            Ok((verdict_code(completed), out))
        }
        Command::Preset { name, params } => {
            let params = preset_params(&params)?;
            Ok((EXIT_OK, preset(&name, &params)?.to_string()))
        }
    }
}
