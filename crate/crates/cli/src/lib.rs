//! Argument handling for the `kabelian` binary. [`run`] takes the argument
//! list and the two output streams and returns the process exit code.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kabelian::analysis::{self, Status, VerificationReport, WitnessSearch};
use kabelian::{
    k_abelian_eq, profile, BlockSequence, Level, WindowPolicy, Word, WordSpec,
};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "kabelian", version, about = "Prefixes of infinite words and their k-Abelian complexity")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a prefix of a word.
    Generate {
        #[arg(long)]
        word: WordSpec,
        #[arg(long)]
        length: usize,
    },
    /// Decide whether two finite words are k-Abelian equivalent.
    Equiv {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Class counts for n = 1..=n-max.
    Complexity {
        #[arg(long)]
        word: WordSpec,
        /// A positive integer or `inf`.
        #[arg(long)]
        k: Level,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Run a named check, or `all` of them at their default parameters.
    Verify {
        check: String,
        #[command(flatten)]
        params: CheckArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Find the first (k, n) where the class count drops below the Sturmian profile.
    Witness {
        #[arg(long)]
        word: WordSpec,
        #[arg(long)]
        k_max: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        window: WindowArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args, Debug)]
struct WindowArgs {
    #[arg(long, default_value_t = WindowPolicy::default().start)]
    window_start: usize,
    #[arg(long, default_value_t = WindowPolicy::default().cap)]
    window_cap: usize,
}

impl WindowArgs {
    fn policy(&self) -> WindowPolicy {
        WindowPolicy {
            start: self.window_start,
            cap: self.window_cap,
        }
    }
}

/// Overrides for a single check; each check reads the ones it uses.
#[derive(Args, Debug, Default)]
struct CheckArgs {
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_max: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    /// Power of the morphism for `uniform-scaling`.
    #[arg(long)]
    power: Option<u32>,
    #[arg(long)]
    word: Option<WordSpec>,
    /// Block sizes for U-word checks, e.g. `3` or `2,3`.
    #[arg(long)]
    blocks: Option<String>,
    #[arg(long)]
    j_max: Option<usize>,
    #[arg(long)]
    horizon: Option<usize>,
    #[arg(long)]
    sample_length: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

/// What a command produced and the exit code it maps to.
struct Outcome {
    text: String,
    code: u8,
}

fn usage(message: impl std::fmt::Display) -> Result<Outcome, String> {
    Err(message.to_string())
}

/// Parses `args` (program name first), executes the command, and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_PASS
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.text.as_bytes());
            let _ = out.flush();
            outcome.code
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            let _ = writeln!(err, "run `kabelian --help` for usage");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command) -> Result<Outcome, String> {
    match command {
        Command::Generate { word, length } => {
            let w = word.expand(length).map_err(|e| e.to_string())?;
            Ok(Outcome {
                text: format!("{w}\n"),
                code: EXIT_PASS,
            })
        }
        Command::Equiv { k, u, v } => {
            if k == 0 {
                return usage("--k must be at least 1");
            }
            let u = Word::parse(&u).map_err(|e| e.to_string())?;
            let v = Word::parse(&v).map_err(|e| e.to_string())?;
            let verdict = if k_abelian_eq(&u, &v, k) { "equivalent" } else { "not equivalent" };
            Ok(Outcome {
                text: format!("{verdict}\n"),
                code: EXIT_PASS,
            })
        }
        Command::Complexity {
            word,
            k,
            n_max,
            format,
            window,
        } => {
            let p = profile(&word, k, n_max, &window.policy()).map_err(|e| e.to_string())?;
            let text = match format {
                Format::Csv => p.to_csv(),
                Format::Json => format!("{}\n", p.to_json()),
                Format::Text => {
                    let mut s = format!("{} k={} window={}\n", p.spec(), p.level(), p.window_length());
                    for n in 1..=n_max {
                        let flag = if p.is_converged(n) { "" } else { " (unconverged)" };
                        s.push_str(&format!("{n:>6} {}{flag}\n", p.value(n)));
                    }
                    s
                }
            };
            let code = if p.all_converged() { EXIT_PASS } else { EXIT_INCONCLUSIVE };
            Ok(Outcome { text, code })
        }
        Command::Verify {
            check,
            params,
            format,
            window,
        } => {
            let policy = window.policy();
            let reports = if check == "all" {
                analysis::run_all(&policy).map_err(|e| e.to_string())?
            } else {
                run_check(&check, &params, &policy)?
            };
            Ok(render_reports(&reports, format))
        }
        Command::Witness {
            word,
            k_max,
            n_max,
            format,
            window,
        } => {
            let found = analysis::find_periodicity_witness(&word, k_max, n_max, &window.policy())
                .map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => format!("{}\n", serde_json::to_value(found).expect("serializable")),
                _ => match found {
                    WitnessSearch::Found(w) => format!(
                        "k={} n={} observed={} threshold={}\n",
                        w.k, w.n, w.observed, w.threshold
                    ),
                    WitnessSearch::None => "none\n".to_owned(),
                    WitnessSearch::Inconclusive { k, n } => {
                        format!("inconclusive at k={k} n={n}\n")
                    }
                },
            };
            let code = match found {
                WitnessSearch::Inconclusive { .. } => EXIT_INCONCLUSIVE,
                _ => EXIT_PASS,
            };
            Ok(Outcome { text, code })
        }
    }
}

fn render_reports(reports: &[VerificationReport], format: Format) -> Outcome {
    let text = match format {
        Format::Json => {
            let all: Vec<_> = reports.iter().map(VerificationReport::to_json).collect();
            let value = match all.as_slice() {
                [one] => one.clone(),
                _ => serde_json::Value::Array(all),
            };
            format!("{value}\n")
        }
        _ => reports.iter().map(|r| format!("{r}\n")).collect(),
    };
    let code = match analysis::overall(reports) {
        Status::Pass => EXIT_PASS,
        Status::Fail => EXIT_FAIL,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
    };
    Outcome { text, code }
}

fn blocks(params: &CheckArgs, default: u64) -> Result<BlockSequence, String> {
    let sizes = match &params.blocks {
        None => vec![default],
        Some(text) => text
            .split(',')
            .map(|b| b.trim().parse::<u64>().map_err(|e| format!("bad block size {b:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?,
    };
    BlockSequence::new(sizes).map_err(|e| e.to_string())
}

fn run_check(name: &str, a: &CheckArgs, policy: &WindowPolicy) -> Result<Vec<VerificationReport>, String> {
    use analysis::*;

    let overridden = a.n_max.is_some()
        || a.m_max.is_some()
        || a.k.is_some()
        || a.k_max.is_some()
        || a.power.is_some()
        || a.word.is_some()
        || a.blocks.is_some()
        || a.j_max.is_some()
        || a.horizon.is_some()
        || a.sample_length.is_some()
        || a.trials.is_some()
        || a.seed.is_some();
    if !overridden {
        return match run_default(name, policy) {
            Some(r) => r.map_err(|e| e.to_string()),
            None => Err(unknown(name)),
        };
    }

    let n = |default: usize| a.n_max.unwrap_or(default);
    let word = |default: WordSpec| a.word.clone().unwrap_or(default);
    let result = match name {
        "srec" => verify_srec(n(512), policy),
        "s-special-values" => verify_s_special_values(a.m_max.unwrap_or(6), policy),
        "tm-sandwich" => verify_tm_sandwich(n(256), policy),
        "tm-bounds" => verify_tm_bounds(a.m_max.unwrap_or(14), policy),
        "tm-balance" => verify_tm_balance(n(64), a.trials.unwrap_or(1000), a.seed.unwrap_or(BALANCE_SEED), policy),
        "phi-classes" => verify_phi_classes(n(64), policy),
        "phi-identity" => verify_phi_identity(n(10_000)),
        "uniform-scaling" => {
            let spec = word(WordSpec::ThueMorse);
            let Some((morphism, _)) = spec.uniform_generator() else {
                return Err(format!("{spec} is not a known fixed point of a uniform morphism"));
            };
            verify_uniform_scaling(&spec, &morphism, a.k.unwrap_or(3), a.power.unwrap_or(1), n(32), policy)
        }
        "sturmian-profile" => {
            sturmian_profile_check(&word(WordSpec::Fibonacci), a.k_max.or(a.k).unwrap_or(3), n(64), policy)
        }
        "tau-champernowne" => verify_tau_champernowne(n(512), policy),
        "u-bounds" => {
            let b = blocks(a, 3)?;
            let j_max = a.j_max.unwrap_or(4);
            let horizon = match a.horizon {
                Some(h) => h,
                None => b
                    .product(j_max + 1)
                    .and_then(|m| usize::try_from(m).ok())
                    .ok_or("m_{j_max + 1} overflows; pass --horizon")?,
            };
            verify_u_bounds(&b, j_max, horizon, policy)
        }
        "uniform-recurrence" => {
            verify_uniform_recurrence(&blocks(a, 2)?, a.sample_length.unwrap_or(8), a.horizon.unwrap_or(4096))
        }
        "perlin" => verify_perlin(a.k.unwrap_or(1), &word(WordSpec::Staircase), n(32), policy),
        "sparse-ones" => {
            let spec = match &a.word {
                Some(w) => w.clone(),
                None => WordSpec::UWord(blocks(a, 3)?),
            };
            verify_sparse_ones(&spec, a.k.unwrap_or(3), n(64), policy)
        }
        _ => return Err(unknown(name)),
    };
    result.map(|r| vec![r]).map_err(|e| e.to_string())
}

fn unknown(name: &str) -> String {
    format!("unknown check {name:?}; expected `all` or one of {}", analysis::CHECKS.join(", "))
}
