//! CSV input and output for the front end.
//!
//! All numeric output uses `{:.16e}` (17 significant digits), which
//! round-trips binary64 exactly. Row numbers in error messages are physical
//! file lines; the header is line 1.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use gsft::sampling::{SampledFunction, TransformConfig};
use gsft::Complex64;

use crate::CliError;

fn open_reader(path: &Path) -> Result<csv::Reader<File>, CliError> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => CliError::Io(format!("cannot open {}: {e}", path.display())),
            _ => CliError::Parse(format!("{}: {e}", path.display())),
        })
}

fn expect_header(
    reader: &mut csv::Reader<File>,
    path: &Path,
    expected: &[&str],
) -> Result<(), CliError> {
    let headers = reader
        .headers()
        .map_err(|e| CliError::Parse(format!("{} header: {e}", path.display())))?;
    if !headers.iter().eq(expected.iter().copied()) {
        return Err(CliError::Parse(format!(
            "{}: header must be `{}`, got `{}`",
            path.display(),
            expected.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    Ok(())
}

fn next_record(
    path: &Path,
    line: usize,
    record: Result<csv::StringRecord, csv::Error>,
    width: usize,
) -> Result<csv::StringRecord, CliError> {
    let record = record.map_err(|e| match e.kind() {
        csv::ErrorKind::Io(_) => CliError::Io(format!("{} row {line}: {e}", path.display())),
        _ => CliError::Parse(format!("{} row {line}: {e}", path.display())),
    })?;
    if record.len() != width {
        return Err(CliError::Parse(format!(
            "{} row {line}: expected {width} fields, got {}",
            path.display(),
            record.len()
        )));
    }
    Ok(record)
}

fn parse_number(path: &Path, line: usize, field: &str, raw: &str) -> Result<f64, CliError> {
    let value: f64 = raw.parse().map_err(|_| {
        CliError::Parse(format!(
            "{} row {line}: field {field}: cannot parse `{raw}` as a number",
            path.display()
        ))
    })?;
    if !value.is_finite() {
        return Err(CliError::Parse(format!(
            "{} row {line}: field {field}: value must be finite, got `{raw}`",
            path.display()
        )));
    }
    Ok(value)
}

/// Reads eval-w input: rows of `re,im`.
pub fn read_points(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let mut reader = open_reader(path)?;
    expect_header(&mut reader, path, &["re", "im"])?;
    let mut points = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let line = index + 2;
        let record = next_record(path, line, record, 2)?;
        let re = parse_number(path, line, "re", &record[0])?;
        let im = parse_number(path, line, "im", &record[1])?;
        points.push(Complex64::new(re, im));
    }
    Ok(points)
}

/// Reads transform input: rows of `n,value_re,value_im` covering every index
/// n = -N..N exactly once, in any order.
pub fn read_samples(path: &Path, config: &TransformConfig) -> Result<SampledFunction, CliError> {
    let mut reader = open_reader(path)?;
    expect_header(&mut reader, path, &["n", "value_re", "value_im"])?;
    let half = config.half_count() as i64;
    let mut slots: Vec<Option<Complex64>> = vec![None; config.sample_count()];
    for (index, record) in reader.records().enumerate() {
        let line = index + 2;
        let record = next_record(path, line, record, 3)?;
        let n: i64 = record[0].parse().map_err(|_| {
            CliError::Parse(format!(
                "{} row {line}: field n: cannot parse `{}` as an integer",
                path.display(),
                &record[0]
            ))
        })?;
        if n < -half || n > half {
            return Err(CliError::Parse(format!(
                "{} row {line}: sample index {n} outside -{half}..{half}",
                path.display()
            )));
        }
        let slot = (n + half) as usize;
        if slots[slot].is_some() {
            return Err(CliError::Parse(format!(
                "{} row {line}: duplicate sample index {n}",
                path.display()
            )));
        }
        let re = parse_number(path, line, "value_re", &record[1])?;
        let im = parse_number(path, line, "value_im", &record[2])?;
        slots[slot] = Some(Complex64::new(re, im));
    }
    let mut values = Vec::with_capacity(slots.len());
    for (slot, value) in slots.into_iter().enumerate() {
        match value {
            Some(v) => values.push(v),
            None => {
                return Err(CliError::Parse(format!(
                    "{}: missing sample index {}",
                    path.display(),
                    slot as i64 - half
                )))
            }
        }
    }
    SampledFunction::new(config.h(), values)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn create_writer(path: Option<&Path>) -> Result<(Box<dyn Write>, String), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| CliError::Io(format!("cannot create {}: {e}", p.display())))?;
            Ok((Box::new(BufWriter::new(file)), p.display().to_string()))
        }
        None => Ok((
            Box::new(BufWriter::new(std::io::stdout())),
            "stdout".to_string(),
        )),
    }
}

fn write_failed(name: &str, e: std::io::Error) -> CliError {
    CliError::Io(format!("write to {name} failed: {e}"))
}

/// Writes eval-w output: header `w_re,w_im`, one row per input point.
pub fn write_values(path: Option<&Path>, values: &[Complex64]) -> Result<(), CliError> {
    let (mut out, name) = create_writer(path)?;
    writeln!(out, "w_re,w_im").map_err(|e| write_failed(&name, e))?;
    for z in values {
        writeln!(out, "{:.16e},{:.16e}", z.re, z.im).map_err(|e| write_failed(&name, e))?;
    }
    out.flush().map_err(|e| write_failed(&name, e))
}

/// Writes transform output: header `x,re,im`, one row per grid point.
pub fn write_spectrum(
    path: Option<&Path>,
    grid: &[f64],
    values: &[Complex64],
) -> Result<(), CliError> {
    let (mut out, name) = create_writer(path)?;
    writeln!(out, "x,re,im").map_err(|e| write_failed(&name, e))?;
    for (x, z) in grid.iter().zip(values) {
        writeln!(out, "{x:.16e},{:.16e},{:.16e}", z.re, z.im)
            .map_err(|e| write_failed(&name, e))?;
    }
    out.flush().map_err(|e| write_failed(&name, e))
}

/// Writes a multi-column real table: one grid value then one entry from each
/// column per row.
pub fn write_columns(
    path: &Path,
    header: &str,
    grid: &[f64],
    columns: &[Vec<f64>],
) -> Result<(), CliError> {
    let (mut out, name) = create_writer(Some(path))?;
    writeln!(out, "{header}").map_err(|e| write_failed(&name, e))?;
    for (i, t) in grid.iter().enumerate() {
        write!(out, "{t:.16e}").map_err(|e| write_failed(&name, e))?;
        for column in columns {
            write!(out, ",{:.16e}", column[i]).map_err(|e| write_failed(&name, e))?;
        }
        writeln!(out).map_err(|e| write_failed(&name, e))?;
    }
    out.flush().map_err(|e| write_failed(&name, e))
}
