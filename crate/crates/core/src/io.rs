//! CSV matrix input and output.
//!
//! Dialect: comma separator, ASCII, no header unless asked for one.
//! Floats are written with 17 significant digits so a written matrix
//! reads back bit-exact.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::projection::Matrix;
use crate::{Error, Result};

/// Render a float with 17 significant digits (round-trip safe).
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Parse a matrix from CSV, optionally skipping a header line. Blank lines
/// are ignored; every data row must have the same number of fields.
pub fn read_matrix_csv<R: BufRead>(reader: R, has_header: bool) -> Result<Matrix> {
    let mut cols = None;
    let mut data = Vec::new();
    let mut rows = 0usize;
    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        if line_no == 0 && has_header {
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        match cols {
            None => cols = Some(fields.len()),
            Some(c) if c != fields.len() => {
                return Err(Error::Parse(format!(
                    "line {}: expected {c} fields, found {}",
                    line_no + 1,
                    fields.len()
                )))
            }
            _ => {}
        }
        for field in fields {
            let v: f64 = field.trim().parse().map_err(|_| {
                Error::Parse(format!(
                    "line {}: '{}' is not a number",
                    line_no + 1,
                    field.trim()
                ))
            })?;
            if !v.is_finite() {
                return Err(Error::Parse(format!(
                    "line {}: non-finite value {v}",
                    line_no + 1
                )));
            }
            data.push(v);
        }
        rows += 1;
    }
    let cols = cols.ok_or_else(|| Error::Parse("no data rows in input".into()))?;
    Matrix::from_data(rows, cols, data)
}

pub fn read_matrix_csv_path(path: &Path, has_header: bool) -> Result<Matrix> {
    let file = File::open(path)?;
    read_matrix_csv(BufReader::new(file), has_header)
}

/// Write a matrix as CSV; `header` emits a `c0,c1,...` first line.
pub fn write_matrix_csv<W: Write>(writer: &mut W, matrix: &Matrix, header: bool) -> Result<()> {
    if header {
        let names: Vec<String> = (0..matrix.cols()).map(|j| format!("c{j}")).collect();
        writeln!(writer, "{}", names.join(","))?;
    }
    for i in 0..matrix.rows() {
        let row: Vec<String> = matrix.row(i).iter().map(|&v| format_f64(v)).collect();
        writeln!(writer, "{}", row.join(","))?;
    }
    Ok(())
}

pub fn write_matrix_csv_path(path: &Path, matrix: &Matrix, header: bool) -> Result<()> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    write_matrix_csv(&mut writer, matrix, header)?;
    writer.flush()?;
    Ok(())
}
