//! The `seq`, `array`, `table` and `export` subcommands.

use std::io::Write;

use wythoff_core::tables::{build_fibbinary_table, build_fractal_table, build_wythoff_table};
use wythoff_core::wythoff::{extended_wythoff_window, fibbinary_window, wythoff_window};

use crate::render::{render_table, render_window, RenderSpec};
use crate::sequence::SequenceName;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ArrayKind {
    /// The Wythoff array, columns 1 and up
    Wythoff,
    /// The Wythoff array with columns -1 (n) and 0 (LW(n+1)) in front
    WythoffExtended,
    /// The fibbinary array, odfib(n) doubled along each row
    Fibbinary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableChoice {
    /// The fibbinary table
    Fib,
    /// Its preimage under the bijection
    Wythoff,
    /// The fractal table
    Fractal,
}

/// Largest table accepted by `table`; it already has F_31 = 1346269 columns.
pub const MAX_TABLE_P: u64 = 30;

/// Largest number of cells accepted by `array`.
pub const MAX_ARRAY_CELLS: usize = 10_000_000;

fn stream<W, F>(
    name: SequenceName,
    first: u64,
    count: u64,
    term: F,
    out: &mut W,
) -> Result<(), CliError>
where
    W: Write,
    F: Fn(u64) -> wythoff_core::Result<u64>,
{
    for j in 0..count {
        let i = first.checked_add(j).ok_or_else(|| {
            CliError::core(
                format!("in {name}: index past {}", u64::MAX),
                wythoff_core::Error::Overflow("sequence index"),
            )
        })?;
        let v = term(i).map_err(|e| CliError::core(format!("in {name} at index {i}"), e))?;
        writeln!(out, "{i} {v}").map_err(CliError::write)?;
    }
    Ok(())
}

/// Writes `count` terms as `index value` lines, indexed from the sequence's
/// natural offset.
pub fn cmd_seq<W: Write>(name: SequenceName, count: u64, out: &mut W) -> Result<(), CliError> {
    stream(name, name.offset(), count, |i| name.term(i), out)
}

/// Writes the first `count` terms in b-file form from the OEIS offset.
pub fn cmd_export<W: Write>(name: SequenceName, count: u64, out: &mut W) -> Result<(), CliError> {
    stream(
        name,
        name.export_offset(),
        count,
        |i| name.export_term(i),
        out,
    )
}

pub fn cmd_array(
    kind: ArrayKind,
    rows: usize,
    cols: usize,
    spec: &RenderSpec,
) -> Result<String, CliError> {
    if rows.saturating_mul(cols) > MAX_ARRAY_CELLS {
        return Err(CliError::Usage(format!(
            "a {rows} x {cols} array exceeds {MAX_ARRAY_CELLS} cells"
        )));
    }
    let context = format!("building a {rows} x {cols} array");
    let (window, label) = match kind {
        ArrayKind::Wythoff => (wythoff_window(rows, cols), "wythoff"),
        ArrayKind::WythoffExtended => (extended_wythoff_window(rows, cols), "wythoff-extended"),
        ArrayKind::Fibbinary => (fibbinary_window(rows, cols), "fibbinary"),
    };
    let window = window.map_err(|e| CliError::core(context, e))?;
    Ok(render_window(&window, label, spec))
}

/// A remark on the published fibbinary array, when the requested window
/// contains the two cells it misprints.
pub fn array_note(kind: ArrayKind, rows: usize, cols: usize) -> Option<&'static str> {
    (kind == ArrayKind::Fibbinary && rows >= 7 && cols >= 6).then_some(
        "note: row 6 holds 1184 and 2368 in columns 6 and 7 (37 * 2^5, 37 * 2^6); \
         the published table prints 1194 and 2388 there",
    )
}

pub fn cmd_table(kind: TableChoice, p: u64, spec: &RenderSpec) -> Result<String, CliError> {
    if p > MAX_TABLE_P {
        return Err(CliError::Usage(format!(
            "tables are limited to p <= {MAX_TABLE_P}"
        )));
    }
    let table = match kind {
        TableChoice::Fib => build_fibbinary_table(p),
        TableChoice::Wythoff => build_wythoff_table(p),
        TableChoice::Fractal => build_fractal_table(p),
    }
    .map_err(|e| CliError::core(format!("building the table with p = {p}"), e))?;
    Ok(render_table(&table, spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run<F>(f: F) -> String
    where
        F: FnOnce(&mut Vec<u8>) -> Result<(), CliError>,
    {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn seq_offsets() {
        let lw = run(|o| cmd_seq(SequenceName::Lw, 6, o));
        assert_eq!(lw, "1 1\n2 3\n3 4\n4 6\n5 8\n6 9\n");
        let fo = run(|o| cmd_seq(SequenceName::Fo, 2, o));
        assert_eq!(fo, "0 1\n1 4\n");
    }

    #[test]
    fn export_examples() {
        assert_eq!(
            run(|o| cmd_export(SequenceName::Fib, 3, o)),
            "1 1\n2 2\n3 4\n"
        );
        assert_eq!(run(|o| cmd_export(SequenceName::W, 2, o)), "1 1\n2 1\n");
        assert_eq!(run(|o| cmd_export(SequenceName::Lw, 1, o)), "1 1\n");
        assert_eq!(run(|o| cmd_export(SequenceName::Fo, 2, o)), "1 1\n2 4\n");
    }

    #[test]
    fn seq_overflow_names_index() {
        let mut buf = Vec::new();
        let err = cmd_seq(SequenceName::Fibonacci, 100, &mut buf).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_OVERFLOW);
        assert!(err.to_string().contains("index 94"), "{err}");
        // the terms before the failure were already written
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 93);
    }

    #[test]
    fn single_cell_array() {
        let spec = RenderSpec {
            show_labels: false,
            ..RenderSpec::default()
        };
        assert_eq!(cmd_array(ArrayKind::Wythoff, 1, 1, &spec).unwrap(), "1\n");
        let err = cmd_array(ArrayKind::Wythoff, 1, 100, &spec).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_OVERFLOW);
        let err = cmd_array(ArrayKind::WythoffExtended, 1, 2, &spec).unwrap_err();
        assert_eq!(err.exit_code(), crate::EXIT_USAGE);
    }

    #[test]
    fn note_only_when_cells_shown() {
        assert!(array_note(ArrayKind::Fibbinary, 13, 7).is_some());
        assert!(array_note(ArrayKind::Fibbinary, 6, 7).is_none());
        assert!(array_note(ArrayKind::Fibbinary, 7, 5).is_none());
        assert!(array_note(ArrayKind::Wythoff, 13, 7).is_none());
    }

    #[test]
    fn table_errors() {
        let spec = RenderSpec::default();
        assert_eq!(
            cmd_table(TableChoice::Fib, 0, &spec)
                .unwrap_err()
                .exit_code(),
            crate::EXIT_USAGE
        );
        assert_eq!(
            cmd_table(TableChoice::Fib, MAX_TABLE_P + 1, &spec)
                .unwrap_err()
                .exit_code(),
            crate::EXIT_USAGE
        );
        assert!(cmd_array(ArrayKind::Wythoff, 1 << 20, 1 << 20, &spec).is_err());
    }
}
