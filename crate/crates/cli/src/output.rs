//! Record emission: JSON lines, CSV with a header, or an aligned text table.

use std::io::Write;

use anyhow::Result;
use serde::Serialize;

use crate::args::Format;

/// Writes `rows` to stdout. `json` holds the full record for JSON output;
/// `flat` is the CSV/table row (one per record, same order).
pub fn emit<J: Serialize, F: Serialize>(format: Format, json: &[J], flat: &[F]) -> Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        Format::Json => {
            for r in json {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in flat {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Table => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in flat {
                w.serialize(r)?;
            }
            let text = String::from_utf8(w.into_inner()?)?;
            write!(out, "{}", align(&text)?)?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Re-lays CSV text as space-padded columns.
fn align(csv_text: &str) -> Result<String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(csv_text.as_bytes());
    let rows: Vec<Vec<String>> = reader
        .records()
        .map(|r| r.map(|r| r.iter().map(str::to_string).collect()))
        .collect::<std::result::Result<_, _>>()?;
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut text = String::new();
    for row in &rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let text = align("group,count\n\"12,2\",7\n8,0\n").unwrap();
        assert_eq!(text, "group  count\n12,2   7\n8      0\n");
    }
}
