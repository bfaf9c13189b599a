//! Command-line surface: `disc`, `id` and `gid`.
//!
//! Exit codes: 0 success, 1 unreadable or unparsable input, 2 well-formed
//! input describing an invalid matrix, 3 oracle budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::canonicalize;
use crate::error::{OracleError, ParseError};
use crate::ferrers::{disc, lower_bound};
use crate::isodisc::{
    general_isomorphic_discrepancy, isomorphic_discrepancy, BlockReport, DiscrepancyReport,
    GeneralDiscrepancy,
};
use crate::matrix::BinaryMatrix;
use crate::oracle::{brute_force_id, OracleBudget};
use crate::parse::{parse_matrix, Format};

#[derive(Debug, Parser)]
#[command(
    name = "isodisc",
    version,
    about = "Nestedness discrepancy of 0/1 matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discrepancy of the matrix as labeled (after sorting margins).
    Disc(InputArgs),
    /// Isomorphic discrepancy: minimum over relabelings of equal-sum columns.
    Id(IdArgs),
    /// Same as `id --general`.
    Gid(IdArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file, or `-` for stdin.
    pub file: PathBuf,
    /// dense, csv or edgelist. Required unless the extension is .txt, .csv
    /// or .edges.
    #[arg(long, short)]
    pub format: Option<Format>,
    /// Emit the machine-readable JSON document.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct IdArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Analyze the transposed matrix.
    #[arg(long)]
    pub transpose: bool,
    /// Also compute the transposed value, their minimum and mean.
    #[arg(long)]
    pub general: bool,
    /// Cross-check with exhaustive enumeration.
    #[arg(long)]
    pub oracle: bool,
    /// Print the optimal column relabeling.
    #[arg(long)]
    pub emit_permutation: bool,
    /// Print the relabeled matrix attaining the minimum.
    #[arg(long)]
    pub emit_matrix: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("oracle: {0}")]
    Oracle(#[from] OracleError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 1,
            CliError::Parse { source, .. } if source.kind.is_syntax() => 1,
            CliError::Parse { .. } => 2,
            CliError::Oracle(
                OracleError::BudgetExceeded { .. } | OracleError::BlockTooLarge { .. },
            ) => 3,
            CliError::Oracle(_) => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub format: String,
    pub rows: usize,
    pub cols: usize,
    /// The analyzed matrix is the transpose of the input.
    pub transposed: bool,
    /// Sorting the margins changed the row or column order.
    pub reordered: bool,
    pub row_perm: Vec<usize>,
    pub col_perm: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    pub id: u64,
    pub id_transposed: Option<u64>,
    pub agrees: bool,
}

/// Machine-readable report. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input: InputDescriptor,
    pub disc: u64,
    pub lower_bound: u64,
    pub id: Option<u64>,
    pub sigma: Option<Vec<usize>>,
    pub sigma_original: Option<Vec<usize>>,
    pub sigma_labels: Option<Vec<String>>,
    pub blocks: Option<Vec<BlockReport>>,
    pub general: Option<GeneralDiscrepancy>,
    pub oracle: Option<OracleOutcome>,
    pub witness: Option<Vec<String>>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Reads and parses the input named by `args`.
pub fn load(args: &InputArgs) -> Result<(BinaryMatrix, Format), CliError> {
    let format = match args.format.or_else(|| Format::from_path(&args.file)) {
        Some(f) => f,
        None => {
            return Err(CliError::Usage(format!(
                "cannot infer the format of {}; pass --format dense|csv|edgelist",
                args.file.display()
            )))
        }
    };
    let path = args.file.display().to_string();
    let bytes = read_input(&args.file).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let matrix = parse_matrix(&bytes, format).map_err(|source| CliError::Parse { path, source })?;
    Ok((matrix, format))
}

fn read_input(path: &Path) -> std::io::Result<Vec<u8>> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read(path)
    }
}

pub fn disc_document(a: &BinaryMatrix, format: Format) -> ReportDocument {
    let canonical = canonicalize(a);
    ReportDocument {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: "disc".into(),
        input: InputDescriptor {
            format: format.name().into(),
            rows: a.rows(),
            cols: a.cols(),
            transposed: false,
            reordered: !canonical.is_identity(),
            row_perm: canonical.row_perm.clone(),
            col_perm: canonical.col_perm.clone(),
        },
        disc: disc(&canonical.matrix).expect("canonical"),
        lower_bound: lower_bound(&canonical.matrix),
        id: None,
        sigma: None,
        sigma_original: None,
        sigma_labels: None,
        blocks: None,
        general: None,
        oracle: None,
        witness: None,
    }
}

pub fn id_document(
    a: &BinaryMatrix,
    format: Format,
    args: &IdArgs,
    general: bool,
) -> Result<ReportDocument, CliError> {
    let transposed;
    let target = if args.transpose {
        transposed = a.transpose();
        &transposed
    } else {
        a
    };
    let report: DiscrepancyReport = if general {
        general_isomorphic_discrepancy(target)
    } else {
        isomorphic_discrepancy(target)
    };

    let oracle = if args.oracle {
        let budget = OracleBudget::default();
        let id = brute_force_id(target, budget)?;
        let id_transposed = if general {
            Some(brute_force_id(&target.transpose(), budget)?)
        } else {
            None
        };
        let agrees = id == report.id
            && match (id_transposed, report.general) {
                (Some(t), Some(g)) => t == g.id_transposed,
                _ => true,
            };
        Some(OracleOutcome {
            id,
            id_transposed,
            agrees,
        })
    } else {
        None
    };

    let witness = args.emit_matrix.then(|| {
        report
            .witness()
            .to_string()
            .lines()
            .map(str::to_owned)
            .collect()
    });

    Ok(ReportDocument {
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: if general { "gid" } else { "id" }.into(),
        input: InputDescriptor {
            format: format.name().into(),
            rows: a.rows(),
            cols: a.cols(),
            transposed: args.transpose,
            reordered: !report.input_was_canonical(),
            row_perm: report.canonical.row_perm.clone(),
            col_perm: report.canonical.col_perm.clone(),
        },
        disc: report.disc,
        lower_bound: report.lower_bound,
        id: Some(report.id),
        sigma_labels: report.sigma_labels(),
        sigma: Some(report.sigma),
        sigma_original: Some(report.sigma_original),
        blocks: Some(report.per_block),
        general: report.general,
        oracle,
        witness,
    })
}

/// Human-readable rendering.
pub fn render_text(doc: &ReportDocument, emit_permutation: bool) -> String {
    let mut out = String::new();
    let i = &doc.input;
    let _ = writeln!(
        out,
        "input        {} {}x{}{}",
        i.format,
        i.rows,
        i.cols,
        if i.transposed { " (transposed)" } else { "" }
    );
    if i.reordered {
        let _ = writeln!(
            out,
            "note         rows/columns were reordered to non-increasing sums before evaluation"
        );
    }
    let _ = writeln!(out, "disc         {}", doc.disc);
    let _ = writeln!(out, "lower bound  {}", doc.lower_bound);
    if let Some(id) = doc.id {
        let _ = writeln!(out, "Id           {id}");
    }
    if let Some(g) = &doc.general {
        let _ = writeln!(out, "Id(A^t)      {}", g.id_transposed);
        let _ = writeln!(out, "min          {}", g.min);
        let _ = writeln!(out, "mean         {}", g.mean);
    }
    if let Some(blocks) = &doc.blocks {
        if !blocks.is_empty() {
            let _ = writeln!(out, "blocks");
            let _ = writeln!(
                out,
                "  {:>6} {:>12} {:>6} {:>8}  note",
                "sum", "columns", "size", "weight"
            );
            for b in blocks {
                let cols = if b.size == 1 {
                    format!("{}", b.start + 1)
                } else {
                    format!("{}-{}", b.start + 1, b.start + b.size)
                };
                let forced = b.forced_constant.iter().filter(|&&f| f).count();
                let note = match (b.all_pairings_optimal, forced) {
                    (true, _) => "any order optimal".to_string(),
                    (false, 0) => String::new(),
                    (false, k) => format!("{k} forced-constant"),
                };
                let _ = writeln!(
                    out,
                    "  {:>6} {:>12} {:>6} {:>8}  {}",
                    b.value, cols, b.size, b.weight, note
                );
            }
        }
    }
    if emit_permutation {
        if let Some(sigma) = &doc.sigma_original {
            let shown: Vec<String> = match &doc.sigma_labels {
                Some(labels) => labels.clone(),
                None => sigma.iter().map(|s| (s + 1).to_string()).collect(),
            };
            let _ = writeln!(out, "permutation  {}", shown.join(" "));
        }
    }
    if let Some(o) = &doc.oracle {
        let _ = writeln!(
            out,
            "oracle       {}{} ({})",
            o.id,
            o.id_transposed
                .map(|t| format!(" / {t}"))
                .unwrap_or_default(),
            if o.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    if let Some(w) = &doc.witness {
        let _ = writeln!(out, "witness");
        for row in w {
            let _ = writeln!(out, "{row}");
        }
    }
    out
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Disc(input) => {
            let (a, format) = load(input)?;
            let doc = disc_document(&a, format);
            Ok(if input.json {
                doc.to_json() + "\n"
            } else {
                render_text(&doc, false)
            })
        }
        Command::Id(args) | Command::Gid(args) => {
            let general = matches!(cli.command, Command::Gid(_)) || args.general;
            let (a, format) = load(&args.input)?;
            let doc = id_document(&a, format, args, general)?;
            Ok(if args.input.json {
                doc.to_json() + "\n"
            } else {
                render_text(&doc, args.emit_permutation)
            })
        }
    }
}

/// Runs the tool on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("isodisc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn missing_format_is_a_usage_error() {
        let (code, _, err) = run_capture(&["disc", "matrix.dat"]);
        assert_eq!(code, 1);
        assert!(err.contains("--format"));
    }

    #[test]
    fn unknown_flag_exits_1() {
        let (code, _, _) = run_capture(&["id", "x.txt", "--bogus"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("gid"));
    }

    #[test]
    fn missing_file_exits_1() {
        let (code, _, err) = run_capture(&["disc", "/nonexistent/a.txt"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot read"));
    }
}
