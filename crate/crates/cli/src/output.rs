use std::io::{self, Write};

use hurwitz::rational::compact_string;
use hurwitz::{HurwitzKey, Rational};
use serde_json::{json, Value};

use crate::args::Format;

/// One computed value with its key.
pub struct Cell {
    pub key: HurwitzKey,
    pub value: Rational,
}

impl Cell {
    fn to_json(&self) -> Value {
        let (num, den) = (self.value.numer().to_string(), self.value.denom().to_string());
        json!({
            "h": self.key.base_genus,
            "g": self.key.cover_genus,
            "alpha": self.key.alpha.parts(),
            "num": num,
            "den": den,
            "k": self.key.degree(),
            "m": self.key.num_parts(),
            "r": self.key.branch_count(),
            "value": { "num": num, "den": den },
        })
    }

    fn csv_record(&self) -> [String; 8] {
        let k = &self.key;
        [
            k.base_genus.to_string(),
            k.cover_genus.to_string(),
            k.degree().to_string(),
            k.num_parts().to_string(),
            k.branch_count().to_string(),
            k.alpha.ascending_label(),
            self.value.numer().to_string(),
            self.value.denom().to_string(),
        ]
    }
}

const CSV_HEADER: [&str; 8] = ["h", "g", "k", "m", "r", "alpha", "num", "den"];

fn write_csv(out: impl Write, cells: &[Cell]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for c in cells {
        w.write_record(c.csv_record())?;
    }
    w.flush()
}

fn write_json(mut out: impl Write, cells: &[Cell]) -> io::Result<()> {
    let doc = Value::Array(cells.iter().map(Cell::to_json).collect());
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)
}

pub fn write_values(out: impl Write, cells: &[Cell], format: Format) -> io::Result<()> {
    match format {
        Format::Plain => write_value_lines(out, cells),
        Format::Csv => write_csv(out, cells),
        Format::Json => write_json(out, cells),
    }
}

fn write_value_lines(mut out: impl Write, cells: &[Cell]) -> io::Result<()> {
    for c in cells {
        let k = &c.key;
        write!(
            out,
            "h={} g={} alpha={} k={} m={} r={} value={}/{}",
            k.base_genus,
            k.cover_genus,
            k.alpha.ascending_label(),
            k.degree(),
            k.num_parts(),
            k.branch_count(),
            c.value.numer(),
            c.value.denom()
        )?;
        if c.value.is_integer() {
            write!(out, " integer={}", c.value.numer())?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Rows are partitions in `cells` order, columns are the cover genera.
/// `cells` must be grouped by partition with genera ascending inside a group.
pub fn write_table(out: impl Write, cells: &[Cell], genera: &[u32], format: Format) -> io::Result<()> {
    match format {
        Format::Plain => write_grid(out, cells, genera),
        Format::Csv => write_csv(out, cells),
        Format::Json => write_json(out, cells),
    }
}

fn write_grid(mut out: impl Write, cells: &[Cell], genera: &[u32]) -> io::Result<()> {
    if cells.is_empty() || genera.is_empty() {
        return Ok(());
    }
    let mut rows: Vec<Vec<String>> =
        vec![std::iter::once("alpha".to_string()).chain(genera.iter().map(|g| format!("g={g}"))).collect()];
    for chunk in cells.chunks(genera.len()) {
        let mut row = vec![chunk[0].key.alpha.ascending_label()];
        row.extend(chunk.iter().map(|c| compact_string(&c.value)));
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len()).map(|i| rows.iter().map(|r| r[i].len()).max().unwrap_or(0)).collect();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (s, &w))| if i == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        writeln!(out, "{}", line.join("  "))?;
    }
    Ok(())
}
