//! Command line front end for the framed block codec.
//!
//! Exit codes follow the conventional scheme so shell pipelines can tell
//! failure classes apart: 0 success, 2 malformed input stream, 64 usage
//! error, 74 I/O failure. `bench` additionally exits 1 when a measured
//! operation count diverges from its closed-form prediction.

use std::fmt;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use hamcode::channel::{self, ChannelSpec, SplitMix64};
use hamcode::matrix::{self, Pass};
use hamcode::sets;
use hamcode::stream;
use hamcode::{
    code, CodeError, CodeParams, Codeword, DecodeStatus, Form, FormatError, InfoBits, OpCounts,
};

const EXIT_BENCH_MISMATCH: u8 = 1;
const EXIT_FORMAT: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

/// Fixed seed for bench inputs: identical invocations print identical tables.
const BENCH_SEED: u64 = 0x4841_4D31;

#[derive(Parser)]
#[command(
    name = "hamcode",
    version,
    about = "Single-error block codec over framed byte streams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode raw bytes into a framed block stream.
    Encode {
        /// Check bits per block (2..=16).
        #[arg(long)]
        k: u32,
        /// Enumeration schedule for the parity sums.
        #[arg(long, value_enum, default_value_t = FormArg::U)]
        form: FormArg,
        /// Input path, or - for standard input.
        #[arg(long)]
        input: String,
        /// Output path, or - for standard output.
        #[arg(long)]
        output: String,
    },
    /// Decode a framed stream back to raw bytes, correcting one flip per block.
    Decode {
        /// Input path, or - for standard input.
        #[arg(long)]
        input: String,
        /// Output path, or - for standard output.
        #[arg(long)]
        output: String,
        /// Where to write per-block status lines (default: standard error).
        #[arg(long)]
        report: Option<String>,
    },
    /// Flip bits in the blocks of a framed stream; the header is untouched.
    Corrupt {
        /// Input path, or - for standard input.
        #[arg(long)]
        input: String,
        /// Output path, or - for standard output.
        #[arg(long)]
        output: String,
        /// Block index to hit (requires --bit).
        #[arg(long, requires = "bit", conflicts_with_all = ["prob", "seed"])]
        block: Option<usize>,
        /// 1-based bit position to flip in that block.
        #[arg(long, requires = "block")]
        bit: Option<usize>,
        /// Per-block flip probability in [0, 1] (requires --seed).
        #[arg(long, requires = "seed", conflicts_with_all = ["block", "bit"])]
        prob: Option<f64>,
        /// Seed for the reproducible flip schedule.
        #[arg(long, requires = "prob")]
        seed: Option<u64>,
    },
    /// Print one check set, one position per line, ascending.
    Tables {
        /// Check bits per block (2..=16).
        #[arg(long)]
        k: u32,
        /// Check index, 0-based.
        #[arg(long)]
        j: u32,
        /// How to produce the set: the definitional filter or a schedule.
        #[arg(long, value_enum, default_value_t = SetFormArg::U)]
        form: SetFormArg,
    },
    /// Compare predicted and measured operation counts for all four passes.
    Bench {
        /// Check bits per block (2..=16).
        #[arg(long)]
        k: u32,
        /// Measurement repetitions per pass; every one must match.
        #[arg(long)]
        trials: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormArg {
    T,
    U,
    Floor,
}

impl From<FormArg> for Form {
    fn from(arg: FormArg) -> Form {
        match arg {
            FormArg::T => Form::T,
            FormArg::U => Form::U,
            FormArg::Floor => Form::Floor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SetFormArg {
    S,
    T,
    U,
    Floor,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io { path: String, source: io::Error },
    Format(FormatError),
    BenchMismatch,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
            CliError::Format(_) => EXIT_FORMAT,
            CliError::BenchMismatch => EXIT_BENCH_MISMATCH,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Format(err) => write!(f, "{err}"),
            CliError::BenchMismatch => f.write_str("measured counts diverged from predictions"),
        }
    }
}

// Parameter problems triggered by flag values are usage errors.
impl From<CodeError> for CliError {
    fn from(err: CodeError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<FormatError> for CliError {
    fn from(err: FormatError) -> Self {
        CliError::Format(err)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            // clap renders help to stdout, errors with usage to stderr.
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("hamcode: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Encode {
            k,
            form,
            input,
            output,
        } => cmd_encode(k, form.into(), &input, &output),
        Command::Decode {
            input,
            output,
            report,
        } => cmd_decode(&input, &output, report.as_deref()),
        Command::Corrupt {
            input,
            output,
            block,
            bit,
            prob,
            seed,
        } => cmd_corrupt(&input, &output, block, bit, prob, seed),
        Command::Tables { k, j, form } => cmd_tables(k, j, form),
        Command::Bench { k, trials } => cmd_bench(k, trials),
    }
}

fn stream_name(path: &str, fallback: &str) -> String {
    if path == "-" {
        fallback.to_string()
    } else {
        path.to_string()
    }
}

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    let result = if path == "-" {
        let mut buf = Vec::new();
        io::stdin().lock().read_to_end(&mut buf).map(|_| buf)
    } else {
        fs::read(path)
    };
    result.map_err(|source| CliError::Io {
        path: stream_name(path, "standard input"),
        source,
    })
}

fn write_output(path: &str, bytes: &[u8]) -> Result<(), CliError> {
    let result = if path == "-" {
        let mut stdout = io::stdout().lock();
        stdout.write_all(bytes).and_then(|()| stdout.flush())
    } else {
        fs::write(path, bytes)
    };
    result.map_err(|source| CliError::Io {
        path: stream_name(path, "standard output"),
        source,
    })
}

fn cmd_encode(k: u32, form: Form, input: &str, output: &str) -> Result<(), CliError> {
    let params = CodeParams::new(k)?;
    let payload = read_input(input)?;
    write_output(output, &stream::encode_stream(&payload, params, form))
}

fn cmd_decode(input: &str, output: &str, report: Option<&str>) -> Result<(), CliError> {
    let framed = read_input(input)?;
    let (payload, statuses) = stream::decode_stream(&framed, Form::default())?;
    write_output(output, &payload)?;

    let mut lines = String::new();
    for (block, status) in statuses.iter().enumerate() {
        match status {
            DecodeStatus::Clean => writeln!(lines, "block={block} status=clean"),
            DecodeStatus::Corrected(position) => {
                writeln!(lines, "block={block} status=corrected pos={position}")
            }
        }
        .expect("writing to a String cannot fail");
    }
    match report {
        Some(path) => write_output(path, lines.as_bytes()),
        None => {
            eprint!("{lines}");
            Ok(())
        }
    }
}

fn cmd_corrupt(
    input: &str,
    output: &str,
    block: Option<usize>,
    bit: Option<usize>,
    prob: Option<f64>,
    seed: Option<u64>,
) -> Result<(), CliError> {
    let spec = match (block, bit, prob, seed) {
        (Some(block), Some(position), None, None) => ChannelSpec::FlipExact { block, position },
        (None, None, Some(prob), Some(seed)) => ChannelSpec::Bernoulli { prob, seed },
        // clap's requires/conflicts rules leave only the all-absent case.
        _ => {
            return Err(CliError::Usage(
                "corrupt needs either --block with --bit, or --prob with --seed".into(),
            ))
        }
    };
    let framed = read_input(input)?;
    let (header, blocks) = stream::split_blocks(&framed)?;
    let (damaged, log) = channel::corrupt_stream(&blocks, &spec)?;
    write_output(output, &stream::join_blocks(&header, &damaged))?;
    // One buffered writer: the log can run to one line per block.
    let mut lines = String::new();
    for (block, position) in log {
        writeln!(lines, "block={block} pos={position}").expect("writing to a String cannot fail");
    }
    eprint!("{lines}");
    Ok(())
}

fn cmd_tables(k: u32, j: u32, form: SetFormArg) -> Result<(), CliError> {
    let params = CodeParams::new(k)?;
    let set = match form {
        SetFormArg::S => sets::index_set_s(params, j)?,
        SetFormArg::T => sets::index_set(params, j, Form::T)?,
        SetFormArg::U => sets::index_set(params, j, Form::U)?,
        SetFormArg::Floor => sets::index_set(params, j, Form::Floor)?,
    };
    let mut lines = String::new();
    for member in set.members() {
        writeln!(lines, "{member}").expect("writing to a String cannot fail");
    }
    write_output("-", lines.as_bytes())
}

fn random_info(params: CodeParams, rng: &mut SplitMix64) -> InfoBits {
    let bits = (0..params.m())
        .map(|_| (rng.next_u64() & 1) as u8)
        .collect();
    InfoBits::from_bits(params, bits).expect("generated bits are valid")
}

fn random_word(params: CodeParams, rng: &mut SplitMix64) -> Codeword {
    let bits = (0..params.n())
        .map(|_| (rng.next_u64() & 1) as u8)
        .collect();
    Codeword::from_bits(params, bits).expect("generated bits are valid")
}

fn cmd_bench(k: u32, trials: u64) -> Result<(), CliError> {
    let params = CodeParams::new(k)?;
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let g = matrix::build_g(params);
    let h = matrix::build_h(params);
    let mut rng = SplitMix64::new(BENCH_SEED);

    let mut measure = |pass: Pass| -> OpCounts {
        let mut counts = OpCounts::new();
        match pass {
            Pass::MatrixEncode => {
                let info = random_info(params, &mut rng);
                matrix::matrix_encode(&info, &g, &mut counts).expect("parameters match");
            }
            Pass::MatrixSyndrome => {
                let word = random_word(params, &mut rng);
                matrix::matrix_syndrome(&word, &h, &mut counts).expect("parameters match");
            }
            Pass::CoreEncode => {
                let info = random_info(params, &mut rng);
                code::encode_counted(&info, Form::U, &mut counts);
            }
            Pass::CoreDecode => {
                let word = random_word(params, &mut rng);
                code::decode_counted(&word, Form::U, &mut counts);
            }
        }
        counts
    };

    let passes = [
        (Pass::MatrixEncode, "matrix-encode"),
        (Pass::MatrixSyndrome, "matrix-syndrome"),
        (Pass::CoreEncode, "core-encode"),
        (Pass::CoreDecode, "core-decode"),
    ];

    let mut table = String::new();
    writeln!(
        table,
        "{:<16} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}  status",
        "pass", "pred-add", "pred-mul", "pred-cmp", "meas-add", "meas-mul", "meas-cmp"
    )
    .expect("writing to a String cannot fail");

    let mut all_match = true;
    for (pass, label) in passes {
        let predicted = matrix::predicted_counts(params, pass);
        // Counts must not depend on the input data, so every trial has to
        // land on the prediction exactly.
        let measured = measure(pass);
        let mut matches = measured == predicted;
        for _ in 1..trials {
            matches &= measure(pass) == predicted;
        }
        all_match &= matches;
        writeln!(
            table,
            "{:<16} {:>12} {:>12} {:>12} {:>12} {:>12} {:>12}  {}",
            label,
            predicted.additions,
            predicted.multiplications,
            predicted.comparisons,
            measured.additions,
            measured.multiplications,
            measured.comparisons,
            if matches { "ok" } else { "MISMATCH" }
        )
        .expect("writing to a String cannot fail");
    }
    write_output("-", table.as_bytes())?;
    if all_match {
        Ok(())
    } else {
        Err(CliError::BenchMismatch)
    }
}
