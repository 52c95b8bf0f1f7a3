//! The `smx` command line.
//!
//! Exit codes: 0 success, 1 unreadable input, parse or usage error,
//! 2 incompatible operands, 3 an improper union found by `check`.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::Side;
use crate::classify::union_class;
use crate::error::Error;
use crate::rational::Rational;
use crate::textio;
use crate::union::{self, SuperNMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub u8);

impl ExitStatus {
    pub const OK: ExitStatus = ExitStatus(0);
    pub const INPUT: ExitStatus = ExitStatus(1);
    pub const INCOMPATIBLE: ExitStatus = ExitStatus(2);
    pub const IMPROPER: ExitStatus = ExitStatus(3);

    pub fn code(self) -> u8 {
        self.0
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "smx",
    version,
    about = "Exact arithmetic on partitioned matrices and their unions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a file and print its classification; exit 3 if the union is not proper
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the classification of a file
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// A + B
    Add {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A - B
    Sub {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// λA for a rational λ such as 3, -1/2
    Scale {
        #[arg(allow_hyphen_values = true)]
        lambda: Rational,
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Transpose every component, swapping its partitions
    Transpose {
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Block product AB
    Mul {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A A^T (right) or A^T A (left)
    Gram {
        a: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Drop all partitions
    Flatten {
        a: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print whether A equals B
    Eq {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum SideArg {
    Left,
    Right,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Mode {
    Strict,
    Value,
}

enum Failure {
    Io(String),
    Smx { path: Option<PathBuf>, error: Error },
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Smx { path: None, error }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Runs one command. `-` as a file name reads standard input.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                ExitStatus::INPUT
            } else {
                let _ = stdout.write_all(text.as_bytes());
                ExitStatus::OK
            };
        }
    };
    let mut io = Io {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(status) => status,
        Err(Failure::Io(message)) => {
            let _ = writeln!(io.stderr, "error: {message}");
            ExitStatus::INPUT
        }
        Err(Failure::Smx { path, error }) => {
            let status = if error.is_incompatibility() {
                ExitStatus::INCOMPATIBLE
            } else {
                ExitStatus::INPUT
            };
            let _ = match path {
                Some(p) => writeln!(io.stderr, "error: {}: {error}", p.display()),
                None => writeln!(io.stderr, "error: {error}"),
            };
            status
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<ExitStatus, Failure> {
    match command {
        Command::Check { file, json } => {
            let u = load(&file, io)?;
            report(&u, json, io)?;
            if let Some((i, j)) = union::first_identical_pair(&u).filter(|_| !union::is_proper(&u))
            {
                let _ = writeln!(
                    io.stderr,
                    "error: components {i} and {j} are identical components (same entries and partitions); the union is not proper"
                );
                return Ok(ExitStatus::IMPROPER);
            }
            Ok(ExitStatus::OK)
        }
        Command::Classify { file, json } => {
            let u = load(&file, io)?;
            report(&u, json, io)?;
            Ok(ExitStatus::OK)
        }
        Command::Add { a, b, output } => binary(&a, &b, output, io, union::union_add),
        Command::Sub { a, b, output } => binary(&a, &b, output, io, union::union_sub),
        Command::Mul { a, b, output } => binary(&a, &b, output, io, union::union_mul),
        Command::Scale { lambda, a, output } => {
            let u = load(&a, io)?;
            emit(&union::union_scale(&lambda, &u), output, io)
        }
        Command::Transpose { a, output } => {
            let u = load(&a, io)?;
            emit(&union::union_transpose(&u), output, io)
        }
        Command::Gram { a, side, output } => {
            let u = load(&a, io)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            emit(&union::union_gram(&u, side), output, io)
        }
        Command::Flatten { a, output } => {
            let u = load(&a, io)?;
            emit(&union::union_flatten(&u), output, io)
        }
        Command::Eq { a, b, mode } => {
            let (u, v) = (load(&a, io)?, load(&b, io)?);
            let equal = match mode {
                Mode::Strict => union::union_strict_eq(&u, &v),
                Mode::Value => union::union_value_eq(&u, &v),
            };
            writeln!(io.stdout, "{equal}")
                .map_err(|e| Failure::Io(format!("cannot write output: {e}")))?;
            Ok(ExitStatus::OK)
        }
    }
}

fn binary(
    a: &Path,
    b: &Path,
    output: Option<PathBuf>,
    io: &mut Io<'_>,
    op: fn(&SuperNMatrix, &SuperNMatrix) -> crate::error::Result<SuperNMatrix>,
) -> Result<ExitStatus, Failure> {
    let (u, v) = (load(a, io)?, load(b, io)?);
    emit(&op(&u, &v)?, output, io)
}

fn load(path: &Path, io: &mut Io<'_>) -> Result<SuperNMatrix, Failure> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io.stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("cannot read standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?
    };
    textio::parse(&text).map_err(|error| Failure::Smx {
        path: Some(path.to_path_buf()),
        error,
    })
}

fn report(u: &SuperNMatrix, json: bool, io: &mut Io<'_>) -> Result<(), Failure> {
    let class = union_class(u);
    let text = if json {
        serde_json::to_string_pretty(&class).expect("report serializes")
    } else {
        class.to_string()
    };
    writeln!(io.stdout, "{text}").map_err(|e| Failure::Io(format!("cannot write output: {e}")))
}

fn emit(u: &SuperNMatrix, output: Option<PathBuf>, io: &mut Io<'_>) -> Result<ExitStatus, Failure> {
    let mut text = textio::format(u);
    text.push('\n');
    match output {
        None => io
            .stdout
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("cannot write output: {e}")))?,
        Some(path) => write_atomically(&path, &text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
    }
    Ok(ExitStatus::OK)
}

fn write_atomically(path: &Path, text: &str) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
