use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use clutterlab::clutter::parse_clutter_detailed;
use clutterlab::cm::Field;
use clutterlab::harness::{
    check_clutter, emit_report, scan_conforti_cornuejols, verify_theorems, Bounds, CheckOptions, CorpusSpec, Prop,
    ReportFormat,
};
use clutterlab::transform::{adjoin_whisker_edge, duplicate, graft, minor_by_labels, parallelization};
use clutterlab::{Clutter, Error};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_TOO_LARGE: u8 = 4;

#[derive(Parser)]
#[command(name = "clutterlab", version, about = "Exact checks for clutters and their edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate properties of the clutter in a file (`-` for stdin)
    Check(CheckArgs),
    /// Apply a transformation and print the resulting clutter
    Transform {
        #[command(subcommand)]
        op: TransformOp,
    },
    /// Scan packing-property clutters for max-flow min-cut failures
    Scan(CorpusArgs),
    /// Check the implications between properties over a corpus
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CheckArgs {
    /// Comma-separated properties (default: all)
    #[arg(long, value_delimiter = ',')]
    props: Vec<Prop>,
    #[arg(long, default_value_t = 3)]
    max_w: u32,
    #[arg(long, default_value_t = 3)]
    max_power: u32,
    #[arg(long, default_value = "q")]
    field: Field,
    #[arg(long, default_value = "json", value_parser = parse_format)]
    format: ReportFormat,
    /// Exit with status 1 when any property is negative
    #[arg(long)]
    strict: bool,
    file: PathBuf,
}

#[derive(Subcommand)]
enum TransformOp {
    Graft {
        file: PathBuf,
    },
    Parallelize {
        /// Comma-separated weights, one per vertex
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<u32>,
        file: PathBuf,
    },
    Minor {
        #[arg(long, value_delimiter = ',')]
        delete: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<String>,
        file: PathBuf,
    },
    Duplicate {
        #[arg(long)]
        vertex: String,
        file: PathBuf,
    },
    Whisker {
        #[arg(long)]
        vertex: String,
        #[arg(long, default_value_t = 1)]
        len: usize,
        file: PathBuf,
    },
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    qmax: Option<usize>,
    /// Keep one clutter per isomorphism class
    #[arg(long)]
    iso: bool,
    #[arg(long, default_value_t = 2)]
    max_w: u32,
    #[arg(long, default_value_t = 2)]
    max_power: u32,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        CorpusSpec { n: self.n, d: self.d, q_max: self.qmax, iso_reject: self.iso }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Weight range for the parallelization stages
    #[arg(long, default_value_t = 2)]
    parallel_w: u32,
    /// Stages to skip: weights, parallel, whiskers, graft
    #[arg(long, value_delimiter = ',')]
    skip: Vec<String>,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_input(path: &Path) -> Result<String, Error> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?)
    }
}

fn load(path: &Path) -> Result<(Clutter, Vec<String>), Error> {
    parse_clutter_detailed(&read_input(path)?)
}

fn write_out(out: Option<&Path>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            if !bytes.ends_with(b"\n") {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Check(a) => {
            let (c, dropped) = load(&a.file)?;
            let opts = CheckOptions {
                props: if a.props.is_empty() { Prop::ALL.to_vec() } else { a.props },
                max_w: a.max_w,
                max_power: a.max_power,
                field: a.field,
                ..CheckOptions::default()
            };
            let report = check_clutter(&c, &dropped, &opts)?;
            write_out(None, &emit_report(std::slice::from_ref(&report), a.format)?)?;
            Ok(if a.strict && report.any_negative() { EXIT_NEGATIVE } else { 0 })
        }
        Command::Transform { op } => {
            let out = match op {
                TransformOp::Graft { file } => graft(&load(&file)?.0)?,
                TransformOp::Parallelize { w, file } => parallelization(&load(&file)?.0, &w)?,
                TransformOp::Minor { delete, contract, file } => minor_by_labels(&load(&file)?.0, &delete, &contract)?,
                TransformOp::Duplicate { vertex, file } => {
                    let c = load(&file)?.0;
                    duplicate(&c, c.index_of(&vertex)?)?
                }
                TransformOp::Whisker { vertex, len, file } => {
                    let c = load(&file)?.0;
                    adjoin_whisker_edge(&c, c.index_of(&vertex)?, len)?
                }
            };
            write_out(None, out.to_text().as_bytes())?;
            Ok(0)
        }
        Command::Scan(a) => {
            let r = scan_conforti_cornuejols(&a.spec(), a.max_w, a.max_power)?;
            eprintln!("{} clutters, {} with the packing property, {} candidates", r.total, r.pp_count, r.candidates);
            let json = serde_json::to_vec_pretty(&r).map_err(|e| Error::Report(e.to_string()))?;
            write_out(a.out.as_deref(), &json)?;
            Ok(0)
        }
        Command::Verify(a) => {
            let mut bounds = Bounds {
                max_w: a.corpus.max_w,
                max_power: a.corpus.max_power,
                parallel_w: a.parallel_w,
                parallel_power: a.corpus.max_power,
                ..Bounds::default()
            };
            for s in &a.skip {
                match s.as_str() {
                    "weights" => bounds.weights = false,
                    "parallel" => bounds.parallel = false,
                    "whiskers" => bounds.whiskers = false,
                    "graft" => bounds.graft = false,
                    other => return Err(Error::InvalidArgument(format!("unknown stage '{other}'"))),
                }
            }
            let r = verify_theorems(&a.corpus.spec(), &bounds)?;
            for (name, t) in &r.tallies {
                eprintln!("{name:<28} checked {:>6}  violations {}", t.checked, t.violations);
            }
            let json = serde_json::to_vec_pretty(&r).map_err(|e| Error::Report(e.to_string()))?;
            write_out(a.corpus.out.as_deref(), &json)?;
            Ok(if r.ok() { 0 } else { EXIT_VIOLATION })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, Error::TooLarge { .. }) { EXIT_TOO_LARGE } else { EXIT_USAGE })
        }
    }
}
