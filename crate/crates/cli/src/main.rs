//! `centres` — analyze squares and overlaps in binary words, build the
//! extremal constructions, enumerate word classes, and run verification
//! sweeps. Output is machine-readable and byte-identical across runs for
//! identical arguments; only `bench` emits wall-clock numbers.
//!
//! Exit codes: 0 on success and passing verifications, 1 when a
//! verification sweep reports counterexamples, 2 on usage or input errors.

use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use centres_core::constructions::build_wn;
use centres_core::enumerate::{
    check_all_binary_length, check_overlap_free_length, enumerate_overlap_free, stats, Limits,
    WordClass,
};
use centres_core::repetition::{analyze, centres, centres_bruteforce, AnalysisReport};
use centres_core::thue_morse::{alpha, tm_prefix};
use centres_core::verify::{
    verify_construction, verify_lemma_compose, verify_min_centres, verify_pansiot, verify_tm_even,
    verify_upper_bound,
};
use centres_core::{Error, Word};

#[derive(Parser)]
#[command(
    name = "centres",
    version,
    about = "Square centres and overlaps in binary words"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report centres, minimal squares and the 2M <= |w|+3 status of words.
    Analyze(AnalyzeArgs),
    /// Build the extremal words and Thue-Morse fragments.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// List words of one length, or summarize the distribution of M over them.
    Enumerate(EnumerateArgs),
    /// Run a verification sweep and print its report.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Time one centre-computation tier on generated inputs.
    Bench(BenchArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("input").required(true))]
struct AnalyzeArgs {
    /// Word over {0,1} to analyze.
    #[arg(long, group = "input")]
    word: Option<String>,
    /// File with one word per line; blank lines and lines starting with `#` are skipped.
    #[arg(long, group = "input")]
    file: Option<PathBuf>,
    /// Output format, one report per word per line.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Extremal word 00 α_n ᾱ_n of length 6·2ⁿ+1, printed with its report.
    Wn {
        /// Family index, n >= 1.
        #[arg(long)]
        n: u32,
    },
    /// Factor α_n of t: length 3·2ⁿ, starting at letter index 5.
    Alpha {
        /// Family index, n >= 1.
        #[arg(long)]
        n: u32,
    },
    /// Prefix of the Thue-Morse word t.
    Tm {
        /// Prefix length.
        #[arg(long)]
        length: usize,
    },
}

#[derive(Args)]
struct EnumerateArgs {
    /// Word length to enumerate.
    #[arg(long)]
    length: usize,
    /// Which words of that length to include.
    #[arg(long, value_enum)]
    class: ClassArg,
    /// Print a JSON summary of M over the class instead of the words.
    #[arg(long, conflicts_with = "witnesses")]
    stats: bool,
    /// Print only the lexicographically least witnesses of one extreme of M.
    #[arg(long, value_enum)]
    witnesses: Option<Extreme>,
    /// Override the length cap of the chosen word class.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Copy, Clone, ValueEnum)]
enum ClassArg {
    /// Every binary word.
    All,
    /// Only overlap-free words.
    OverlapFree,
}

#[derive(Copy, Clone, ValueEnum)]
enum Extreme {
    Min,
    Max,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Compare the least M over all words of each length in a range to ⌈n/2⌉-2.
    MinCentres {
        /// First length of the sweep, at least 3.
        #[arg(long)]
        from: usize,
        /// Last length of the sweep.
        #[arg(long)]
        to: usize,
        /// Override the all-binary length cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check 2M <= length+3 over every overlap-free word up to a length,
    /// and the odd-length a·u·u / u·u·a shape of the equality witnesses.
    UpperBound {
        /// Largest length swept.
        #[arg(long)]
        max_length: usize,
        /// Override the overlap-free length cap.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Check w_1..w_N: overlap-free, special prefix, bound tight; also
    /// record where μ(α_n) first occurs in t.
    Construction {
        /// Largest family index checked.
        #[arg(long)]
        max_n: u32,
        /// Override the family-index cap.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Check the composition x w (w s⁻¹) over all small hypothesis-satisfying pairs.
    LemmaCompose {
        /// Largest |x| swept.
        #[arg(long)]
        max_x: usize,
        /// Largest |w| swept.
        #[arg(long)]
        max_w: usize,
    },
    /// Check even-start even-length factors of t: even centres, M = n/2-1.
    TmEven {
        /// Largest (even) factor length swept.
        #[arg(long)]
        max_length: usize,
    },
    /// Check frames of a prefix of t: roots in {0,1,01,10}, no adjacent centres.
    Pansiot {
        /// Prefix length examined.
        #[arg(long)]
        prefix_length: usize,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Centre-computation tier to time.
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    /// Target input length.
    #[arg(long)]
    length: usize,
    /// Timed repetitions per input.
    #[arg(long)]
    trials: u32,
    /// Seed for the random inputs.
    #[arg(long)]
    seed: u64,
}

#[derive(Copy, Clone, ValueEnum)]
enum Algorithm {
    Bruteforce,
    Fast,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze(args) => run_analyze(args),
        Command::Construct(cmd) => run_construct(cmd),
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Bench(args) => run_bench(args),
    }
}

/// Default limits with the worker count taken from `CENTRES_MAX_WORKERS`.
fn effective_limits() -> Result<Limits, Error> {
    Ok(Limits {
        max_workers: workers_from_env()?,
        ..Limits::default()
    })
}

fn workers_from_env() -> Result<Option<usize>, Error> {
    let text = match std::env::var("CENTRES_MAX_WORKERS") {
        Ok(text) => text,
        Err(std::env::VarError::NotPresent) => return Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            return Err(Error::InvalidParameter {
                name: "CENTRES_MAX_WORKERS",
                message: "expected a positive integer".into(),
            })
        }
    };
    match text.trim().parse::<usize>() {
        Ok(workers) if workers > 0 => Ok(Some(workers)),
        _ => Err(Error::InvalidParameter {
            name: "CENTRES_MAX_WORKERS",
            message: format!("expected a positive integer, got {text:?}"),
        }),
    }
}

fn run_analyze(args: AnalyzeArgs) -> Result<ExitCode, Error> {
    let words = match (&args.word, &args.file) {
        (Some(text), None) => vec![Word::from_text(text)?],
        (None, Some(path)) => read_words(path)?,
        _ => unreachable!("clap enforces exactly one input source"),
    };
    let mut out = BufWriter::new(io::stdout().lock());
    for word in &words {
        let report = analyze(word);
        match args.format {
            Format::Json => emit(&mut out, &to_json(&report)),
            Format::Tsv => emit(&mut out, &tsv_row(&report)),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_words(path: &Path) -> Result<Vec<Word>, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter {
        name: "file",
        message: format!("{}: {e}", path.display()),
    })?;
    let mut words = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word = Word::from_text(line).map_err(|e| Error::InvalidParameter {
            name: "file",
            message: format!("line {}: {e}", i + 1),
        })?;
        words.push(word);
    }
    Ok(words)
}

/// One analyzer report as a tab row: word, length, overlap_free, M, and
/// the centres joined by commas.
fn tsv_row(report: &AnalysisReport) -> String {
    let centre_list: Vec<String> = report
        .centres
        .iter()
        .map(|p| p.index().to_string())
        .collect();
    format!(
        "{}\t{}\t{}\t{}\t{}",
        report.word,
        report.length,
        report.overlap_free,
        report.m,
        centre_list.join(",")
    )
}

fn run_construct(cmd: ConstructCmd) -> Result<ExitCode, Error> {
    let mut out = BufWriter::new(io::stdout().lock());
    match cmd {
        ConstructCmd::Wn { n } => emit(&mut out, &to_json(&build_wn(n)?)),
        ConstructCmd::Alpha { n } => emit(&mut out, &alpha(n)?.to_string()),
        ConstructCmd::Tm { length } => emit(&mut out, &tm_prefix(length).to_string()),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let class = match args.class {
        ClassArg::All => WordClass::AllBinary,
        ClassArg::OverlapFree => WordClass::OverlapFree,
    };
    let mut limits = effective_limits()?;
    if let Some(cap) = args.cap {
        match class {
            WordClass::AllBinary => limits.all_binary_max = cap,
            WordClass::OverlapFree => limits.overlap_free_max = cap,
        }
    }
    let mut out = BufWriter::new(io::stdout().lock());
    if args.stats || args.witnesses.is_some() {
        let summary = stats(args.length, class, &limits)?;
        match args.witnesses {
            None => emit(&mut out, &to_json(&summary)),
            Some(Extreme::Min) => {
                for word in &summary.min_witnesses {
                    emit(&mut out, &word.to_string());
                }
            }
            Some(Extreme::Max) => {
                for word in &summary.max_witnesses {
                    emit(&mut out, &word.to_string());
                }
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    match class {
        WordClass::AllBinary => {
            check_all_binary_length(args.length, &limits)?;
            for value in 0..1u64 << args.length {
                let word =
                    Word::from_symbols((0..args.length).rev().map(|j| ((value >> j) & 1) as u8));
                emit(&mut out, &word.to_string());
            }
        }
        WordClass::OverlapFree => {
            check_overlap_free_length(args.length, &limits)?;
            enumerate_overlap_free(args.length, |word| emit(&mut out, &word.to_string()));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(cmd: VerifyCmd) -> Result<ExitCode, Error> {
    let mut limits = effective_limits()?;
    let report = match cmd {
        VerifyCmd::MinCentres { from, to, cap } => {
            if let Some(c) = cap {
                limits.all_binary_max = c;
            }
            verify_min_centres(from, to, &limits)?
        }
        VerifyCmd::UpperBound { max_length, cap } => {
            if let Some(c) = cap {
                limits.overlap_free_max = c;
            }
            verify_upper_bound(max_length, &limits)?
        }
        VerifyCmd::Construction { max_n, cap } => {
            if let Some(c) = cap {
                limits.construction_max = c;
            }
            verify_construction(max_n, &limits)?
        }
        VerifyCmd::LemmaCompose { max_x, max_w } => verify_lemma_compose(max_x, max_w)?,
        VerifyCmd::TmEven { max_length } => verify_tm_even(max_length)?,
        VerifyCmd::Pansiot { prefix_length } => verify_pansiot(prefix_length)?,
    };
    let mut out = BufWriter::new(io::stdout().lock());
    emit(&mut out, &to_json(&report));
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_bench(args: BenchArgs) -> Result<ExitCode, Error> {
    let inputs = bench_inputs(args.length, args.seed)?;
    let algorithm = match args.algorithm {
        Algorithm::Bruteforce => "bruteforce",
        Algorithm::Fast => "fast",
    };
    let mut out = BufWriter::new(io::stdout().lock());
    emit(
        &mut out,
        "# algorithm\tinput\tlength\ttrial\tmicros (wall-clock, non-deterministic)",
    );
    for (label, word) in &inputs {
        let fast = centres(word);
        let brute = centres_bruteforce(word);
        assert_eq!(fast, brute, "centre tiers disagree on input {label}");
        for trial in 1..=args.trials {
            let started = Instant::now();
            let result = match args.algorithm {
                Algorithm::Bruteforce => centres_bruteforce(word),
                Algorithm::Fast => centres(word),
            };
            let micros = started.elapsed().as_micros();
            std::hint::black_box(&result);
            emit(
                &mut out,
                &format!("{algorithm}\t{label}\t{}\t{trial}\t{micros}", word.len()),
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// The bench corpus: a Thue-Morse prefix of the target length, the
/// largest extremal word not exceeding it (always at least w_1), and
/// three seeded random words of the target length.
fn bench_inputs(length: usize, seed: u64) -> Result<Vec<(String, Word)>, Error> {
    let mut inputs = vec![("tm-prefix".to_string(), tm_prefix(length))];
    let target = length.max(13);
    let mut n = 1u32;
    while n < 40 && (6usize << (n + 1)) < target {
        n += 1;
    }
    inputs.push((format!("w{n}"), build_wn(n)?.word));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 1..=3 {
        let word = Word::from_symbols((0..length).map(|_| rng.gen_range(0..=1u8)));
        inputs.push((format!("random-{i}"), word));
    }
    Ok(inputs)
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn emit(out: &mut impl Write, line: &str) {
    writeln!(out, "{line}").expect("write to stdout");
}
