use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use quadwaring::ansatz::{builtin_symbolic, gaussian_s4_symbolic, AnsatzError};
use quadwaring::bounds::{bounds_table, BoundsReport};
use quadwaring::certify::{numeric_terms_from, verify_numeric_with, Certificate, CertifyError};
use quadwaring::reproduce;
use quadwaring::{builtin, generate_symbolic, generate_with, select_points, verify_any, GenerateOptions, BUILTIN_NAMES};
use thiserror::Error;

use crate::{Command, FieldArg, Format, OUT_DIR_ENV};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) | CliError::Io { .. } => ExitCode::from(1),
        }
    }
}

impl From<AnsatzError> for CliError {
    fn from(e: AnsatzError) -> Self {
        match e {
            AnsatzError::UnknownBuiltin(_) | AnsatzError::DomainError(_) | AnsatzError::InvalidArgument(_) => {
                CliError::Usage(e.to_string())
            }
            AnsatzError::Arith(_) | AnsatzError::RetryExhausted { .. } => CliError::Failure(e.to_string()),
        }
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> Self {
        match e {
            CertifyError::InvalidTolerance(_) | CertifyError::InvalidPrecision(_) | CertifyError::InvalidArgument(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Failure(e.to_string()),
        }
    }
}

pub fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Generate { n, s, seed, no_merge, output } => {
            let opts = GenerateOptions { seed, merged: !no_merge, ..GenerateOptions::default() };
            let d = generate_with(n as usize, s, &opts)?;
            let path = output.unwrap_or_else(|| default_path(&format!("q{n}s{s}-seed{seed}.json")));
            write_certificate(&Certificate::from_decomposition(&d.clone().into()), &path)?;
            summary(&path, &format!("size {}\n{}", d.size(), BoundsReport::new(u64::from(n), s, Some(d.size() as u64))));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { certificate, numeric, tolerance, precision } => {
            let bytes = fs::read(&certificate).map_err(|source| CliError::Io { path: certificate.clone(), source })?;
            let d = quadwaring::certify::deserialize(&bytes)?;
            let outcome = if numeric {
                verify_numeric_with(&numeric_terms_from(&d, precision), d.n(), d.s(), tolerance, precision)?
            } else {
                verify_any(&d)
            };
            println!("n = {}, s = {}, field = {}, size = {}", d.n(), d.s(), d.field().as_str(), d.size());
            println!("{outcome}");
            Ok(if outcome.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Bounds { n, s, achieved, format } => {
            let r = BoundsReport::new(n, s, achieved);
            let text = match format {
                Format::Text => format!("{r}\n"),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&report_json(&r)).expect("json")),
                Format::Csv => format!("{CSV_HEADER}\n{}\n", csv_row(&r)),
            };
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n_min, n_max, s_min, s_max, format, output } => {
            if n_max < n_min || s_max < s_min {
                return Err(CliError::Usage("empty range".into()));
            }
            let rows = bounds_table(n_min..=n_max, s_min..=s_max);
            let text = render_table(&rows, format);
            match output {
                Some(p) => write_file(&p, text.as_bytes())?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ClosedForm { s, seed, field, max_s } => {
            if s > max_s {
                return Err(CliError::Usage(format!("s = {s} exceeds --max-s {max_s}")));
            }
            let text = match (field, s) {
                (FieldArg::Gaussian, 4) => gaussian_s4_symbolic().to_string(),
                (FieldArg::Gaussian, _) => return Err(CliError::Usage("the Gaussian variant exists for s = 4 only".into())),
                (FieldArg::Rational, _) if seed == 0 && (2..=5).contains(&s) => {
                    builtin_symbolic(&format!("s{s}").replace("s4", "s4-real"))?.to_string()
                }
                (FieldArg::Rational, _) => generate_symbolic(s, &select_points(s, seed)?)?.to_string(),
            };
            println!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Builtin { name, n, output } => {
            if name == "list" {
                for b in BUILTIN_NAMES {
                    println!("{b}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let n = n.ok_or_else(|| CliError::Usage("--n is required".into()))?;
            let d = builtin(&name, n as usize)?;
            let path = output.unwrap_or_else(|| default_path(&format!("{name}-n{n}.json")));
            write_certificate(&Certificate::from_decomposition(&d), &path)?;
            summary(&path, &format!("{name} at n = {n}: size {}, field {}", d.size(), d.field().as_str()));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckPaper { criteria } => {
            let card = if criteria.is_empty() {
                reproduce::run_all()
            } else {
                reproduce::Scorecard {
                    results: criteria.iter().filter_map(|&id| reproduce::run_criterion(id)).collect(),
                }
            };
            println!("{card}");
            Ok(if card.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn default_path(file: &str) -> PathBuf {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
    dir.join(file)
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        return std::io::stdout().write_all(bytes).map_err(|source| CliError::Io { path: path.into(), source });
    }
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.into(), source })?;
    }
    fs::write(path, bytes).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write_certificate(cert: &Certificate, path: &Path) -> Result<(), CliError> {
    write_file(path, cert.to_json().as_bytes())?;
    if path.as_os_str() != "-" {
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}

/// Keeps stdout pure JSON when the certificate itself goes there.
fn summary(cert_path: &Path, text: &str) {
    if cert_path.as_os_str() == "-" {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
}

const CSV_HEADER: &str = "n,s,lower,upper11,upper42,generic_exact_num,generic_exact_den,subgeneric";

fn csv_row(r: &BoundsReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.n,
        r.s,
        r.lower_catalecticant,
        r.upper_thm11,
        r.upper_thm42,
        r.generic_rank_exact.numer(),
        r.generic_rank_exact.denom(),
        r.subgeneric
    )
}

fn report_json(r: &BoundsReport) -> serde_json::Value {
    serde_json::json!({
        "n": r.n,
        "s": r.s,
        "lower": r.lower_catalecticant.to_string(),
        "upper11": r.upper_thm11.to_string(),
        "upper42": r.upper_thm42.to_string(),
        "generic_exact": r.generic_rank_exact.to_string(),
        "generic_ceil": r.generic_rank_ceil.to_string(),
        "achieved": r.achieved_size,
        "subgeneric": r.subgeneric,
    })
}

fn render_table(rows: &[BoundsReport], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = format!("{CSV_HEADER}\n");
            for r in rows {
                out.push_str(&csv_row(r));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let v: Vec<serde_json::Value> = rows.iter().map(report_json).collect();
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Text => {
            let header: Vec<String> = CSV_HEADER.split(',').map(str::to_string).collect();
            let cells: Vec<Vec<String>> = rows.iter().map(|r| csv_row(r).split(',').map(str::to_string).collect()).collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|j| cells.iter().map(|c| c[j].len()).chain([header[j].len()]).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for line in std::iter::once(&header).chain(&cells) {
                let padded: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                let _ = writeln!(out, "{}", padded.join("  ").trim_end());
            }
            out
        }
    }
}
