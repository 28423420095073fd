use std::fmt::Display;
use std::io::Write;

use serde_json::{Number, Value};

use crate::Failure;

/// An exact JSON integer, however large.
pub fn int(x: impl Display) -> Value {
    let text = x.to_string();
    Value::Number(text.parse::<Number>().expect("integers are valid JSON numbers"))
}

/// One JSON document per line, keys in insertion order.
pub fn emit_json(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure {
        status: crate::EXIT_DOMAIN,
        message: format!("json encoding failed: {e}"),
    })?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Partition label for tables: `(3,1)`, `∅` for the empty partition.
pub fn label(p: &pieri_core::Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!("({p})")
    }
}

/// Plain-text matrix with row and column headers, right-aligned.
pub fn text_matrix(corner: &str, rows: &[String], cols: &[String], cells: &[Vec<String>]) -> String {
    let first = rows.iter().map(|r| r.chars().count()).chain([corner.chars().count()]).max().unwrap_or(0);
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(j, c)| cells.iter().map(|row| row[j].chars().count()).chain([c.chars().count()]).max().unwrap_or(0))
        .collect();
    let pad = |s: &str, w: usize| format!("{}{}", " ".repeat(w.saturating_sub(s.chars().count())), s);
    let mut text = pad(corner, first);
    for (c, &w) in cols.iter().zip(&widths) {
        text.push_str("  ");
        text.push_str(&pad(c, w));
    }
    text.push('\n');
    for (r, row) in rows.iter().zip(cells) {
        text.push_str(&pad(r, first));
        for (cell, &w) in row.iter().zip(&widths) {
            text.push_str("  ");
            text.push_str(&pad(cell, w));
        }
        text.push('\n');
    }
    text
}

fn latex_partition(p: &pieri_core::Partition) -> String {
    if p.is_empty() {
        "\\varnothing".to_string()
    } else {
        format!("({p})")
    }
}

/// A `tabular` with partitions as row and column headers.
pub fn latex_matrix(
    corner: &str,
    rows: &[pieri_core::Partition],
    cols: &[pieri_core::Partition],
    cells: &[Vec<String>],
) -> String {
    let mut text = format!("\\begin{{tabular}}{{c|{}}}\n", "c".repeat(cols.len()));
    text.push_str(corner);
    for c in cols {
        text.push_str(&format!(" & ${}$", latex_partition(c)));
    }
    text.push_str(" \\\\\n\\hline\n");
    for (r, row) in rows.iter().zip(cells) {
        text.push_str(&format!("${}$", latex_partition(r)));
        for cell in row {
            text.push_str(&format!(" & {cell}"));
        }
        text.push_str(" \\\\\n");
    }
    text.push_str("\\end{tabular}\n");
    text
}
