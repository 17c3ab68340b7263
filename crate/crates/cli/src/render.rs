//! Text, CSV and JSON renderings of array windows and sparse tables.

use serde_json::{json, Value};
use wythoff_core::{ArrayWindow, SparseTable, TableKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// How a grid is written out. Text output right-aligns every column; CSV and
/// JSON write empty cells as an empty field and `null`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderSpec {
    pub format: Format,
    pub show_labels: bool,
    pub empty_cell_marker: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            format: Format::Text,
            show_labels: true,
            empty_cell_marker: ".".to_owned(),
        }
    }
}

/// A rectangular grid of optional cells with column labels.
struct Grid {
    kind: &'static str,
    column_labels: Vec<String>,
    row_labels: Vec<String>,
    rows: Vec<Vec<Option<u64>>>,
    /// Labels go under the grid (the table layout) rather than above it.
    labels_below: bool,
}

impl Grid {
    fn render(&self, spec: &RenderSpec) -> String {
        match spec.format {
            Format::Text => self.text(spec),
            Format::Csv => self.csv(spec),
            Format::Json => self.json(),
        }
    }

    fn text(&self, spec: &RenderSpec) -> String {
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.map_or_else(|| spec.empty_cell_marker.clone(), |v| v.to_string()))
                    .collect()
            })
            .collect();
        let mut widths: Vec<usize> = vec![0; self.column_labels.len()];
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        if spec.show_labels {
            for (w, label) in widths.iter_mut().zip(&self.column_labels) {
                *w = (*w).max(label.len());
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            padded.join(" ") + "\n"
        };

        let mut out = String::new();
        if spec.show_labels && !self.labels_below {
            out += &line(&self.column_labels);
        }
        for row in &body {
            out += &line(row);
        }
        if spec.show_labels && self.labels_below {
            let total: usize = widths.iter().sum::<usize>() + widths.len().saturating_sub(1);
            out += &"-".repeat(total);
            out.push('\n');
            out += &line(&self.column_labels);
        }
        out
    }

    fn csv(&self, spec: &RenderSpec) -> String {
        let mut out = String::new();
        if spec.show_labels {
            out += &self.column_labels.join(",");
            out.push('\n');
        }
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .map(|c| c.map(|v| v.to_string()).unwrap_or_default())
                .collect();
            out += &cells.join(",");
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| Value::Array(row.iter().map(|c| json!(c)).collect()))
            .collect();
        let doc = json!({
            "kind": self.kind,
            "column_labels": self.column_labels,
            "row_labels": self.row_labels,
            "rows": rows,
        });
        serde_json::to_string_pretty(&doc).expect("serialising a JSON value") + "\n"
    }
}

pub fn render_window(window: &ArrayWindow, kind: &'static str, spec: &RenderSpec) -> String {
    Grid {
        kind,
        column_labels: window.col_labels().map(|k| k.to_string()).collect(),
        row_labels: (0..window.rows() as u64)
            .map(|r| (window.row_origin() + r).to_string())
            .collect(),
        rows: window
            .iter_rows()
            .map(|row| row.iter().copied().map(Some).collect())
            .collect(),
        labels_below: false,
    }
    .render(spec)
}

pub fn render_table(table: &SparseTable, spec: &RenderSpec) -> String {
    let kind = match table.kind() {
        TableKind::Fibbinary => "fibbinary-table",
        TableKind::Wythoff => "wythoff-table",
        TableKind::Fractal => "fractal-table",
    };
    let columns = table.column_count();
    Grid {
        kind,
        column_labels: (0..columns).map(|x| x.to_string()).collect(),
        row_labels: (1..=table.row_count()).map(|r| r.to_string()).collect(),
        rows: (1..=table.row_count())
            .map(|r| (0..columns).map(|x| table.get(r, x)).collect())
            .collect(),
        labels_below: true,
    }
    .render(spec)
}
