use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lpaf::af::{self, stable_extensions, stable_kernel};
use lpaf::caf::{self, caf_union, induced_af, stable_claim_extensions};
use lpaf::dynamics::{self, UpdateMode};
use lpaf::equivalence::{kernel_sanity, lp_kernel, oracle_se, rr_se_atomic, rr_se_hunique, standard_se, OracleBudget};
use lpaf::format::{self, Document, Format};
use lpaf::generate::{generate, ClassFlags, RandomSpec};
use lpaf::translate::{af_to_lp, caf_to_lp, lp_to_af, lp_to_caf};
use lpaf::{lp, ArgFramework, ClaimFramework, Program, SeVerdict};

#[derive(Parser)]
#[command(
    name = "lpaf",
    version,
    about = "Logic programs, argumentation frameworks and their strong equivalence"
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer sets of a program, stable (claim) extensions of a framework.
    Solve { file: PathBuf },
    /// Translate between programs and frameworks.
    Translate {
        /// Input kind; detected from the file when omitted.
        #[arg(long, value_enum)]
        from: Option<Kind>,
        #[arg(long, value_enum)]
        to: Kind,
        file: PathBuf,
    },
    /// Kernel of a program or stable kernel of a framework.
    Kernel {
        /// Check the kernel laws on the program instead.
        #[arg(long)]
        check: bool,
        file: PathBuf,
    },
    /// Apply an update program (or join two frameworks).
    Update {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        delta: PathBuf,
        #[arg(long, value_enum, default_value = "union")]
        mode: Mode,
    },
    /// Decide strong equivalence.
    Se {
        #[arg(long, value_enum)]
        mode: SeMode,
        left: PathBuf,
        right: PathBuf,
    },
    /// Search bounded update programs for one that separates two programs.
    Oracle(OracleArgs),
    /// Print a random instance.
    Gen(GenArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Lp,
    Af,
    Caf,
}

impl From<Kind> for Format {
    fn from(kind: Kind) -> Format {
        match kind {
            Kind::Lp => Format::Lp,
            Kind::Af => Format::Af,
            Kind::Caf => Format::Caf,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Union,
    Head,
    Id,
}

impl From<Mode> for UpdateMode {
    fn from(mode: Mode) -> UpdateMode {
        match mode {
            Mode::Union => UpdateMode::Union,
            Mode::Head => UpdateMode::Head,
            Mode::Id => UpdateMode::Id,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeMode {
    Standard,
    RrHead,
    RrId,
    Af,
    Caf,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long, default_value_t = 1)]
    fresh_atoms: usize,
    #[arg(long, default_value_t = 2)]
    max_rules: usize,
    #[arg(long, default_value_t = 2)]
    max_body: usize,
    #[arg(long, default_value_t = 1)]
    fresh_ids: usize,
    left: PathBuf,
    right: PathBuf,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum ClassFlag {
    Atomic,
    Strict,
    HUnique,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    size: usize,
    #[arg(long, default_value_t = 0.3)]
    density: f64,
    /// Class flags to enforce, comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    class: Vec<ClassFlag>,
}

/// Failure modes that end with exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn read(path: &Path) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    format::parse_any(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_as(path: &Path, format: Format) -> CliResult<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    format::parse(&text, format).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn expect_program(path: &Path) -> CliResult<Program> {
    match read(path)? {
        Document::Program(p) => Ok(p),
        _ => Err(Failure(format!("{}: expected a logic program", path.display()))),
    }
}

fn framework_of(path: &Path) -> CliResult<ArgFramework> {
    match read(path)? {
        Document::Framework(f) => Ok(f),
        Document::Program(p) => Ok(lp_to_af(&p)?),
        Document::Claims(_) => Err(Failure(format!("{}: expected a framework or program", path.display()))),
    }
}

fn claims_of(path: &Path) -> CliResult<ClaimFramework> {
    match read(path)? {
        Document::Claims(f) => Ok(f),
        Document::Program(p) => Ok(lp_to_caf(&p)?),
        Document::Framework(_) => Err(Failure(format!(
            "{}: expected a claim-augmented framework or program",
            path.display()
        ))),
    }
}

struct Output {
    json: bool,
}

impl Output {
    fn emit<T: Serialize + Display>(&self, value: &T) -> CliResult<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value)?);
        } else {
            print!("{value}");
        }
        Ok(())
    }
}

fn translate(doc: Document, to: Format) -> CliResult<Document> {
    Ok(match (doc, to) {
        (doc, to) if doc.format() == to => doc,
        (Document::Program(p), Format::Af) => Document::Framework(lp_to_af(&p)?),
        (Document::Program(p), Format::Caf) => Document::Claims(lp_to_caf(&p)?),
        (Document::Framework(f), Format::Lp) => Document::Program(af_to_lp(&f)),
        (Document::Framework(f), Format::Caf) => Document::Claims(lp_to_caf(&af_to_lp(&f))?),
        (Document::Claims(c), Format::Lp) => Document::Program(caf_to_lp(&c)?),
        (Document::Claims(c), Format::Af) => Document::Framework(induced_af(&c)?),
        _ => unreachable!("every pair of distinct formats is covered"),
    })
}

fn verdict(out: &Output, v: &SeVerdict) -> CliResult<ExitCode> {
    out.emit(v)?;
    Ok(if v.is_equivalent() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let out = Output { json: cli.json };
    match cli.command {
        Command::Solve { file } => {
            let sets = match read(&file)? {
                Document::Program(p) => lp::answer_sets(&p),
                Document::Framework(f) => stable_extensions(&f),
                Document::Claims(c) => stable_claim_extensions(&c),
            };
            out.emit(&sets)?;
        }
        Command::Translate { from, to, file } => {
            let doc = match from {
                Some(kind) => read_as(&file, kind.into())?,
                None => read(&file)?,
            };
            out.emit(&translate(doc, to.into())?)?;
        }
        Command::Kernel { check, file } => match read(&file)? {
            Document::Program(p) if check => {
                let r = kernel_sanity(&p)?;
                out.emit(&r)?;
                if !r.all_pass() {
                    return Ok(ExitCode::from(1));
                }
            }
            Document::Program(p) => out.emit(&Document::Program(lp_kernel(&p)?))?,
            Document::Framework(f) if !check => out.emit(&Document::Framework(stable_kernel(&f)))?,
            _ => {
                return Err(Failure(
                    "kernels are defined for programs and frameworks; --check needs a program".into(),
                ))
            }
        },
        Command::Update { base, delta, mode } => {
            let result = match (read(&base)?, read(&delta)?) {
                (Document::Program(p), Document::Program(r)) => {
                    Document::Program(dynamics::apply(mode.into(), &p, &r)?)
                }
                (Document::Framework(f), Document::Framework(g)) => Document::Framework(af::union(&f, &g)),
                (Document::Claims(f), Document::Claims(g)) => Document::Claims(caf_union(&f, &g)),
                _ => return Err(Failure("base and delta must be of the same kind".into())),
            };
            out.emit(&result)?;
        }
        Command::Se { mode, left, right } => {
            let v = match mode {
                SeMode::Standard => standard_se(&expect_program(&left)?, &expect_program(&right)?)?,
                SeMode::RrHead => rr_se_hunique(&expect_program(&left)?, &expect_program(&right)?)?,
                SeMode::RrId => rr_se_atomic(&expect_program(&left)?, &expect_program(&right)?)?,
                SeMode::Af => af::af_strongly_equivalent(&framework_of(&left)?, &framework_of(&right)?),
                SeMode::Caf => caf::caf_strongly_equivalent(&claims_of(&left)?, &claims_of(&right)?),
            };
            return verdict(&out, &v);
        }
        Command::Oracle(args) => {
            let budget = OracleBudget {
                fresh_atoms: args.fresh_atoms,
                max_rules: args.max_rules,
                max_body: args.max_body,
                fresh_ids: args.fresh_ids,
            };
            let (p, q) = (expect_program(&args.left)?, expect_program(&args.right)?);
            return verdict(&out, &oracle_se(&p, &q, args.mode.into(), budget)?);
        }
        Command::Gen(args) => {
            let spec = RandomSpec {
                kind: args.kind.into(),
                size: args.size,
                density: args.density,
                flags: ClassFlags {
                    atomic: args.class.contains(&ClassFlag::Atomic),
                    strict: args.class.contains(&ClassFlag::Strict),
                    h_unique: args.class.contains(&ClassFlag::HUnique),
                },
                seed: args.seed,
            };
            out.emit(&generate(&spec)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
