//! Matrix and vector files.
//!
//! CSV: one line per coordinate, one comma-separated field per generator
//! (rows are coordinates, columns are generators). Lines starting with `#`
//! are comments. CSV cannot express a matrix with zero columns; use JSON
//! for that.
//!
//! JSON: `{"rows": n, "cols": k, "data": [...]}` with `data` row-major.
//!
//! Both writers emit the shortest decimal representation that parses back
//! to the same bits, so print → parse is an exact round trip.

use std::fs;
use std::path::Path;

use maxcone_core::{GeneratorMatrix, MaxVector};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    Csv,
    Json,
}

impl MatrixFormat {
    /// Infers the format from a file extension.
    pub fn from_path(path: &Path) -> Option<MatrixFormat> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(MatrixFormat::Csv),
            "json" => Some(MatrixFormat::Json),
            _ => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kept: Option<Vec<usize>>,
}

fn check_entry(value: f64) -> Result<f64, CliError> {
    if !value.is_finite() || value < 0.0 {
        return Err(CliError::Parse(format!(
            "entries must be finite and nonnegative, got {value}"
        )));
    }
    Ok(value)
}

fn parse_field(field: &str) -> Result<f64, CliError> {
    let trimmed = field.trim();
    let value: f64 = trimmed
        .parse()
        .map_err(|_| CliError::Parse(format!("not a number: {trimmed:?}")))?;
    check_entry(value)
}

pub fn parse_matrix(text: &str, format: MatrixFormat) -> Result<GeneratorMatrix, CliError> {
    match format {
        MatrixFormat::Csv => parse_csv(text),
        MatrixFormat::Json => parse_json(text),
    }
}

fn parse_csv(text: &str) -> Result<GeneratorMatrix, CliError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split(',')
            .map(parse_field)
            .collect::<Result<Vec<f64>, _>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(CliError::Parse(format!(
                    "ragged rows: expected {} fields, got {}",
                    first.len(),
                    row.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("no data rows".into()));
    }
    Ok(GeneratorMatrix::from_rows(&rows)?)
}

fn parse_json(text: &str) -> Result<GeneratorMatrix, CliError> {
    let parsed: MatrixJson =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    for &value in &parsed.data {
        check_entry(value)?;
    }
    Ok(GeneratorMatrix::from_row_major(
        parsed.rows,
        parsed.cols,
        &parsed.data,
    )?)
}

pub fn read_matrix(
    path: &Path,
    format_override: Option<MatrixFormat>,
) -> Result<GeneratorMatrix, CliError> {
    let format = format_override
        .or_else(|| MatrixFormat::from_path(path))
        .unwrap_or(MatrixFormat::Csv);
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_matrix(&text, format)
}

pub fn render_matrix(m: &GeneratorMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => {
            if m.num_cols() == 0 {
                return String::new();
            }
            let mut out = String::new();
            for r in 0..m.num_rows() {
                let row: Vec<String> = (0..m.num_cols())
                    .map(|c| format!("{}", m.entry(r, c)))
                    .collect();
                out.push_str(&row.join(","));
                out.push('\n');
            }
            out
        }
        MatrixFormat::Json => render_json(m, None),
    }
}

/// JSON rendering with an optional `kept` field (1-based indices); the
/// extra field is ignored on parse, so basis output stays loadable.
pub fn render_json(m: &GeneratorMatrix, kept: Option<&[usize]>) -> String {
    let mut data = Vec::with_capacity(m.num_rows() * m.num_cols());
    for r in 0..m.num_rows() {
        for c in 0..m.num_cols() {
            data.push(m.entry(r, c));
        }
    }
    let json = MatrixJson {
        rows: m.num_rows(),
        cols: m.num_cols(),
        data,
        kept: kept.map(|k| k.to_vec()),
    };
    let mut text = serde_json::to_string(&json).expect("serializable");
    text.push('\n');
    text
}

/// Reads a vector from a file holding a single-column (or single-row)
/// matrix.
pub fn read_vector(
    path: &Path,
    format_override: Option<MatrixFormat>,
) -> Result<MaxVector, CliError> {
    let m = read_matrix(path, format_override)?;
    if m.num_cols() == 1 {
        Ok(m.column(0))
    } else if m.num_rows() == 1 {
        let coords: Vec<f64> = (0..m.num_cols()).map(|c| m.entry(0, c)).collect();
        Ok(MaxVector::new(coords)?)
    } else {
        Err(CliError::Parse(format!(
            "{}: a vector file needs a single row or column, got {}x{}",
            path.display(),
            m.num_rows(),
            m.num_cols()
        )))
    }
}

/// Resolves a vector argument: a path to a vector file, or an inline
/// comma-separated list of coordinates.
pub fn resolve_vector(
    arg: &str,
    format_override: Option<MatrixFormat>,
) -> Result<MaxVector, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        return read_vector(path, format_override);
    }
    let coords = arg
        .split(',')
        .map(parse_field)
        .collect::<Result<Vec<f64>, _>>()
        .map_err(|e| {
            CliError::Parse(format!(
                "{arg:?} is neither an existing file nor a comma-separated vector ({e})"
            ))
        })?;
    if coords.is_empty() {
        return Err(CliError::Parse("empty vector argument".into()));
    }
    Ok(MaxVector::new(coords)?)
}

/// Formats a scalar with at most 12 significant digits, using the shortest
/// representation of the rounded value.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - magnitude);
    let rounded = (x * factor).round() / factor;
    format!("{rounded}")
}

/// Joins 0-based indices as a 1-based, space-separated list.
pub fn format_indices(indices: &[usize]) -> String {
    indices
        .iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
