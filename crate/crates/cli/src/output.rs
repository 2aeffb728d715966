use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::Result;
use crate::scan::{Format, ScanEntry, ScanReport};

pub fn write_report(report: &ScanReport, path: &Path, format: Format) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        Format::Csv => write_csv(report, &mut out)?,
    }
    out.flush()?;
    Ok(())
}

fn csv_header() -> Vec<String> {
    let mut h: Vec<String> = ["p", "gamma", "n", "kind", "match"].map(String::from).to_vec();
    h.extend((0..8).map(|i| format!("predicted_t{i}")));
    h.extend((0..8).map(|i| format!("actual_t{i}")));
    h
}

fn entry_rows(e: &ScanEntry) -> Vec<Vec<String>> {
    let Some(v) = &e.verification else { return Vec::new() };
    v.certificates
        .iter()
        .map(|c| {
            let mut row = vec![
                c.p.to_string(),
                c.gamma.to_string(),
                c.n.to_string(),
                c.classification.as_str().to_string(),
                c.matched.to_string(),
            ];
            row.extend(c.predicted.0.iter().map(u8::to_string));
            row.extend(c.actual.0.iter().map(u8::to_string));
            row
        })
        .collect()
}

/// One row per `(p, n)` certificate.
pub fn write_csv<W: Write>(report: &ScanReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header())?;
    let extra = report.extension.iter().filter_map(|x| x.first_artiad.as_ref());
    for e in report.entries.iter().chain(extra) {
        for row in entry_rows(e) {
            w.write_record(row)?;
        }
    }
    w.flush()?;
    Ok(())
}
