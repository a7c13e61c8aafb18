//! Command-line surface over the cwforest library. Every subcommand is a
//! thin adapter: parse arguments, call the library, print in the stable
//! text formats. Exit codes: 0 success, 1 domain errors or failed
//! verification, 2 argument and syntax errors.

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cwforest::division::{depth_det1, euclid_cf, rational_cf_string, rational_depth};
use cwforest::exactnum::Rational;
use cwforest::fieldroots::root_viability;
use cwforest::forest::{class_number, enumerate_orphans, verify_partition};
use cwforest::generalized::{gen_children, gen_classify, gen_locate, gen_parent, GenRule};
use cwforest::plft::{ChildKind, Plft};
use cwforest::treenav::{
    check_den_num, check_depth_rows, check_successor_bfs, check_symmetry, factor_sl2, locate,
    row_iter, ROW_MATERIALIZE_CAP,
};
use cwforest::Error;

#[derive(Parser)]
#[command(
    name = "cwforest",
    version,
    about = "Calkin-Wilf trees of rationals and matrices: rows, continued fractions, orphan forests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print row n of the tree rooted at a matrix, one vertex per line
    Row {
        /// Root matrix in `[a b; c d]` format
        #[arg(long)]
        root: Plft,
        /// Row number (row n has 2^n vertices)
        #[arg(long)]
        n: u32,
        /// Stop after this many vertices
        #[arg(long)]
        limit: Option<u64>,
        /// Evaluate each vertex at a rational and print the values instead
        #[arg(long, allow_hyphen_values = true)]
        eval_at: Option<Rational>,
    },
    /// Climb to the orphan root above a matrix
    Locate { matrix: Plft },
    /// Continued fraction: `[q0, ..., qk; root]` for a matrix,
    /// `[a0, ..., ak]` for a positive rational
    Cf {
        #[arg(allow_hyphen_values = true)]
        value: MatrixOrRational,
    },
    /// Row index of a determinant-1 matrix or of a positive rational
    Depth {
        #[arg(allow_hyphen_values = true)]
        value: MatrixOrRational,
    },
    /// List the orphan matrices of a determinant, sorted
    Orphans {
        #[arg(long, allow_hyphen_values = true)]
        det: i64,
        /// Stop after this many matrices
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Table of class numbers h(D) for D = 1..=max
    Hd {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max: i64,
    },
    /// Factor a determinant-1 matrix into its generator word
    Factor { matrix: Plft },
    /// Brute-force verification suites
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
    /// Can this rational root an infinite binary tree?
    FieldRoot {
        #[arg(allow_hyphen_values = true)]
        value: Rational,
    },
    /// Trees under the generalized rule w -> w/(uw+1), vw+1
    Gen {
        #[arg(long, default_value_t = 1)]
        u: u64,
        #[arg(long, default_value_t = 1)]
        v: u64,
        #[command(subcommand)]
        action: GenCommand,
    },
    /// Graphviz DOT export of the first rows of a tree
    Dot {
        #[arg(long)]
        root: Plft,
        #[arg(long)]
        depth: u32,
        /// Materialization cap guarding against runaway output
        #[arg(long, default_value_t = ROW_MATERIALIZE_CAP)]
        cap: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check the forest partition for one determinant up to a height
    Partition {
        #[arg(long, allow_hyphen_values = true)]
        det: i64,
        #[arg(long)]
        height: u32,
    },
    /// Run the four row-property suites on the identity-rooted tree
    Formulas {
        #[arg(long)]
        rows: u32,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Left and right child of a positive rational
    Children(GenValue),
    /// Orphan, or child kind with its parent
    Classify(GenValue),
    /// Orphan root and word of a positive rational
    Locate(GenValue),
}

#[derive(Args)]
struct GenValue {
    #[arg(allow_hyphen_values = true)]
    value: Rational,
}

/// Argument that may be a matrix (leading `[`) or a rational.
#[derive(Clone)]
enum MatrixOrRational {
    Matrix(Plft),
    Rational(Rational),
}

impl FromStr for MatrixOrRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim_start().starts_with('[') {
            Ok(MatrixOrRational::Matrix(s.parse()?))
        } else {
            Ok(MatrixOrRational::Rational(s.parse()?))
        }
    }
}

enum CliError {
    Lib(Error),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "error: {e}"),
            CliError::Failed(msg) => write!(f, "{msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // clap exits 2 on usage errors and 0 for --help/--version.
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            let code = match err {
                CliError::Lib(Error::Parse(_)) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Row {
            root,
            n,
            limit,
            eval_at,
        } => {
            let cap = limit.unwrap_or(u64::MAX);
            for (i, vertex) in row_iter(&root, n).enumerate() {
                if i as u64 >= cap {
                    break;
                }
                match &eval_at {
                    Some(x) => writeln!(&mut out, "{}", vertex.eval(x)?),
                    None => writeln!(&mut out, "{vertex}"),
                }
                .map_err(io_error)?;
            }
        }
        Command::Locate { matrix } => {
            let (root, word) = locate(&matrix);
            writeln!(&mut out, "root={root} word={word} depth={}", word.len()).map_err(io_error)?;
        }
        Command::Cf { value } => {
            let rendered = match value {
                MatrixOrRational::Matrix(m) => euclid_cf(&m).to_string(),
                MatrixOrRational::Rational(x) => rational_cf_string(&x)?,
            };
            writeln!(&mut out, "{rendered}").map_err(io_error)?;
        }
        Command::Depth { value } => {
            let depth = match value {
                MatrixOrRational::Matrix(m) => depth_det1(&m)?,
                MatrixOrRational::Rational(x) => rational_depth(&x)?,
            };
            writeln!(&mut out, "{depth}").map_err(io_error)?;
        }
        Command::Orphans { det, limit } => {
            let set = enumerate_orphans(det)?;
            let cap = limit.unwrap_or(u64::MAX);
            for orphan in set.orphans.iter().take(cap as usize) {
                writeln!(&mut out, "{orphan}").map_err(io_error)?;
            }
        }
        Command::Hd { max } => {
            for d in 1..=max {
                writeln!(&mut out, "{d}\t{}", class_number(d)?).map_err(io_error)?;
            }
        }
        Command::Factor { matrix } => {
            writeln!(&mut out, "{}", factor_sl2(&matrix)?).map_err(io_error)?;
        }
        Command::Verify { what } => return verify(&mut out, what),
        Command::FieldRoot { value } => {
            let verdict = root_viability(&value);
            if verdict.viable {
                writeln!(&mut out, "viable").map_err(io_error)?;
            } else {
                let witness = verdict.witness.expect("blocked verdicts carry a witness");
                writeln!(&mut out, "blocked {witness}").map_err(io_error)?;
            }
        }
        Command::Gen { u, v, action } => {
            let rule = GenRule::new(u, v)?;
            match action {
                GenCommand::Children(arg) => {
                    let (left, right) = gen_children(rule, &arg.value)?;
                    writeln!(&mut out, "{left}").map_err(io_error)?;
                    writeln!(&mut out, "{right}").map_err(io_error)?;
                }
                GenCommand::Classify(arg) => match gen_classify(rule, &arg.value)? {
                    ChildKind::Orphan => writeln!(&mut out, "orphan").map_err(io_error)?,
                    ChildKind::Left => {
                        let parent = gen_parent(rule, &arg.value)?;
                        writeln!(&mut out, "left parent={parent}").map_err(io_error)?;
                    }
                    ChildKind::Right => {
                        let parent = gen_parent(rule, &arg.value)?;
                        writeln!(&mut out, "right parent={parent}").map_err(io_error)?;
                    }
                },
                GenCommand::Locate(arg) => {
                    let (root, word) = gen_locate(rule, &arg.value)?;
                    writeln!(&mut out, "root={root} word={word} depth={}", word.len())
                        .map_err(io_error)?;
                }
            }
        }
        Command::Dot { root, depth, cap } => {
            if depth > cap {
                return Err(Error::DepthCapExceeded.into());
            }
            write_dot(&mut out, &root, depth).map_err(io_error)?;
        }
    }
    Ok(())
}

fn verify(out: &mut impl Write, what: VerifyCommand) -> Result<(), CliError> {
    match what {
        VerifyCommand::Partition { det, height } => {
            let report = verify_partition(det, height)?;
            #[derive(Serialize)]
            struct TreeJson {
                root: String,
                count: u64,
            }
            #[derive(Serialize)]
            struct ReportJson {
                det: i64,
                height: u32,
                trees: Vec<TreeJson>,
                pass: bool,
            }
            let json = ReportJson {
                det: report.det,
                height: report.height,
                trees: report
                    .trees
                    .iter()
                    .map(|t| TreeJson {
                        root: t.root.to_string(),
                        count: t.count,
                    })
                    .collect(),
                pass: report.pass,
            };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json).expect("report serializes")
            )
            .map_err(io_error)?;
            if !report.pass {
                return Err(CliError::Failed(format!(
                    "partition verification failed for det {det}"
                )));
            }
        }
        VerifyCommand::Formulas { rows } => {
            let identity = Plft::identity();
            let den_num = (0..=rows).all(|n| check_den_num(&identity, n));
            let mut symmetry = true;
            let mut successor = true;
            let mut depth_ok = true;
            for n in 0..=rows {
                symmetry &= check_symmetry(n)?;
                successor &= check_successor_bfs(&identity, n)?;
                depth_ok &= check_depth_rows(n)?;
            }
            let suites = [
                ("denominator-numerator", den_num),
                ("symmetry", symmetry),
                ("successor-vs-expansion", successor),
                ("depth-formula", depth_ok),
            ];
            for (name, ok) in suites {
                writeln!(
                    out,
                    "{name} (rows 0..={rows}): {}",
                    if ok { "pass" } else { "FAIL" }
                )
                .map_err(io_error)?;
            }
            if suites.iter().any(|(_, ok)| !ok) {
                return Err(CliError::Failed("formula verification failed".into()));
            }
        }
    }
    Ok(())
}

/// DOT digraph of rows `0..=depth`: nodes are labelled with the function
/// rendering and identified by `row:index`, each inner vertex pointing at
/// its left then right child.
fn write_dot(out: &mut impl Write, root: &Plft, depth: u32) -> io::Result<()> {
    writeln!(out, "digraph tree {{")?;
    for n in 0..=depth {
        for (i, vertex) in row_iter(root, n).enumerate() {
            let j = i as u64 + 1;
            writeln!(
                out,
                "  \"{n}:{j}\" [label=\"{}\"];",
                vertex.to_function_string()
            )?;
            if n < depth {
                writeln!(out, "  \"{n}:{j}\" -> \"{}:{}\";", n + 1, 2 * j - 1)?;
                writeln!(out, "  \"{n}:{j}\" -> \"{}:{}\";", n + 1, 2 * j)?;
            }
        }
    }
    writeln!(out, "}}")
}

fn io_error(e: io::Error) -> CliError {
    CliError::Failed(format!("error: output failed: {e}"))
}
