//! Tomography populations file: UTF-8 CSV with header
//! `setting,p000,p001,p010,p011,p100,p101,p110,p111`, one row per setting.

use std::io::{Read, Write};

use kicktop_core::tomography::{MeasurementRecord, Setting, DIM};

use crate::error::{AppError, AppResult};
use crate::output::fmt12;

pub const HEADER: [&str; 9] = ["setting", "p000", "p001", "p010", "p011", "p100", "p101", "p110", "p111"];

/// Parses records; errors name the offending line (the header is line 1).
pub fn read_records<R: Read>(input: R) -> AppResult<Vec<MeasurementRecord>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let header = rdr.headers().map_err(|e| AppError::Validation(format!("line 1: {e}")))?.clone();
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(AppError::Validation(format!(
            "line 1: expected header `{}`, found `{}`",
            HEADER.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.records().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| AppError::Validation(format!("line {line}: {e}")))?;
        let bad = |msg: String| AppError::Validation(format!("line {line}: {msg}"));
        let setting: Setting = row[0].parse().map_err(|e: kicktop_core::Error| bad(e.to_string()))?;
        let mut p = [0.0; DIM];
        for (k, slot) in p.iter_mut().enumerate() {
            let field = &row[k + 1];
            *slot = field.parse().map_err(|_| bad(format!("column {}: {field:?} is not a number", HEADER[k + 1])))?;
        }
        out.push(MeasurementRecord::new(setting, p).map_err(|e| bad(e.to_string()))?);
    }
    Ok(out)
}

pub fn write_records<W: Write>(records: &[MeasurementRecord], w: W) -> AppResult<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(HEADER)?;
    for r in records {
        let mut row = vec![r.setting().label()];
        row.extend(r.populations().iter().map(|p| fmt12(*p)));
        out.write_record(&row)?;
    }
    out.flush().map_err(|e| AppError::Output(e.to_string()))?;
    Ok(())
}
