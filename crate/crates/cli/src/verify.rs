//! The `verify` subcommand: invariant suites at caller-chosen bounds, plus a
//! comparison of every exported sequence against the reference fixtures.

use std::fmt::{Debug, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use wythoff_core::beatty::{fib_even, fib_odd, lower_wythoff, upper_wythoff};
use wythoff_core::fibbinary::{
    fib_map, fib_stream, fib_stream_by_closure, fib_unmap, is_fibbinary, odfib, Fibbinary,
};
use wythoff_core::fractal::{first_occurrence, w_of, w_prefix};
use wythoff_core::tables::{
    build_fibbinary_table, build_fractal_table, build_wythoff_table, extend_fractal_row,
};
use wythoff_core::wythoff::{
    column_membership, extended_wythoff_window, fibbinary_window, position_of, shape_cover_diff,
    verify_main_theorem, wythoff_cell, wythoff_rows_iterative, wythoff_window,
};
use wythoff_core::zeckendorf::{zeck_encode, zeck_length, ZeckWord, FIB};

use crate::bfile::{bundled_fixtures, OeisFixture};
use crate::sequence::SequenceName;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Codec,
    Beatty,
    Arrays,
    Tables,
    Fractal,
    Theorem,
}

/// Bounds above this are refused: several suites allocate `O(max_n)`
/// memory, and the theorem suite `O(max_n * max_k)`.
pub const MAX_BOUND: u64 = 10_000_000;

/// Counterexamples kept per suite; the failure count is always exact.
pub const MAX_REPORTED: usize = 20;

/// Where the reference fixtures come from.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum FixtureSource {
    /// The files compiled into the binary.
    #[default]
    Bundled,
    /// Every `*.txt` file of a directory.
    Dir(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: u64,
    pub max_k: u64,
    pub fixtures: FixtureSource,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 10_000,
            max_k: 20,
            fixtures: FixtureSource::Bundled,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checks: 0,
            failures: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_REPORTED {
                self.counterexamples.push(describe());
            }
        }
    }

    fn check_eq<T: PartialEq + Debug>(
        &mut self,
        expected: T,
        actual: T,
        what: impl FnOnce() -> String,
    ) {
        let ok = expected == actual;
        self.check(ok, || {
            format!("{}: expected {expected:?}, got {actual:?}", what())
        });
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn failures(&self) -> u64 {
        self.suites.iter().map(|s| s.failures).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "pass" } else { "FAIL" };
            let _ = write!(out, "{:<9} {status} {:>9} checks", s.name, s.checks);
            if !s.passed() {
                let _ = write!(out, ", {} failed", s.failures);
            }
            out.push('\n');
            for note in &s.notes {
                let _ = writeln!(out, "    {note}");
            }
            for c in &s.counterexamples {
                let _ = writeln!(out, "    {c}");
            }
            if s.failures > s.counterexamples.len() as u64 {
                let _ = writeln!(
                    out,
                    "    ... {} more",
                    s.failures - s.counterexamples.len() as u64
                );
            }
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            let _ = writeln!(out, "verify: all {} suites passed", self.suites.len());
        } else {
            let _ = writeln!(
                out,
                "verify: {} mismatches in {failed} of {} suites",
                self.failures(),
                self.suites.len()
            );
        }
        out
    }
}

fn at<T>(r: wythoff_core::Result<T>, context: impl FnOnce() -> String) -> Result<T, CliError> {
    r.map_err(|e| CliError::core(context(), e))
}

/// Runs the named suites followed by the fixture comparison.
pub fn cmd_verify(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    let VerifyOptions { max_n, max_k, .. } = *opts;
    if max_n == 0 || max_k == 0 {
        return Err(CliError::Usage("bounds must be positive".into()));
    }
    if max_n > MAX_BOUND || max_k > MAX_BOUND {
        return Err(CliError::Usage(format!(
            "bounds are limited to {MAX_BOUND}"
        )));
    }
    let fixtures = load_fixtures(&opts.fixtures)?;

    let selected = match suite {
        Suite::All => vec![
            Suite::Codec,
            Suite::Beatty,
            Suite::Arrays,
            Suite::Tables,
            Suite::Fractal,
            Suite::Theorem,
        ],
        one => vec![one],
    };
    let mut suites = Vec::with_capacity(selected.len() + 1);
    for s in selected {
        suites.push(match s {
            Suite::Codec => codec(max_n)?,
            Suite::Beatty => beatty(max_n)?,
            Suite::Arrays => arrays(max_n, max_k)?,
            Suite::Tables => tables(max_n)?,
            Suite::Fractal => fractal(max_n)?,
            Suite::Theorem => theorem(max_n, max_k)?,
            Suite::All => unreachable!(),
        });
    }
    suites.push(compare_fixtures(&fixtures)?);
    Ok(VerifyReport { suites })
}

/// A fixture file that could be read, or the reason it could not.
type LoadedFixture = (String, Result<OeisFixture, String>);

fn load_fixtures(source: &FixtureSource) -> Result<Vec<LoadedFixture>, CliError> {
    match source {
        FixtureSource::Bundled => Ok(bundled_fixtures()
            .map_err(|e| CliError::Usage(format!("bundled fixtures are damaged: {e}")))?
            .into_iter()
            .map(|f| (f.id.clone(), Ok(f)))
            .collect()),
        FixtureSource::Dir(dir) => load_dir(dir),
    }
}

fn load_dir(dir: &Path) -> Result<Vec<LoadedFixture>, CliError> {
    let entries =
        fs::read_dir(dir).map_err(|e| CliError::io(format!("reading {}", dir.display()), e))?;
    let mut paths = Vec::new();
    for entry in entries {
        let path = entry
            .map_err(|e| CliError::io(format!("reading {}", dir.display()), e))?
            .path();
        if path.extension().is_some_and(|x| x == "txt") {
            paths.push(path);
        }
    }
    if paths.is_empty() {
        return Err(CliError::Usage(format!(
            "no fixture files (*.txt) in {}",
            dir.display()
        )));
    }
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let label = path.file_name().map_or_else(
                || path.display().to_string(),
                |n| n.to_string_lossy().into_owned(),
            );
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::io(format!("reading {}", path.display()), e))?;
            Ok((label, OeisFixture::parse(&text).map_err(|e| e.to_string())))
        })
        .collect()
}

fn compare_fixtures(fixtures: &[LoadedFixture]) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("fixtures");
    for (label, loaded) in fixtures {
        let fixture = match loaded {
            Ok(f) => f,
            Err(e) => {
                r.check(false, || format!("{label}: unreadable fixture: {e}"));
                continue;
            }
        };
        let id = &fixture.id;
        let Some(name) = SequenceName::from_oeis_id(id) else {
            r.check(false, || {
                format!("{label}: no sequence is exported as {id}")
            });
            continue;
        };
        r.check_eq(name.export_offset(), fixture.offset, || {
            format!("{id} ({name}) offset")
        });
        if fixture.offset != name.export_offset() {
            continue;
        }
        for (i, &expected) in fixture.terms.iter().enumerate() {
            let index = fixture.offset + i as u64;
            let generated = at(name.export_term(index), || {
                format!("exporting {name} at index {index}")
            })?;
            r.check(generated == expected, || {
                format!(
                    "{id} ({name}) index {index}: fixture has {expected}, export gives {generated}"
                )
            });
        }
    }
    Ok(r)
}

fn codec(max_n: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("codec");
    for n in 0..=max_n {
        let word = zeck_encode(n);
        let bits = word.bits();
        r.check(bits & (bits >> 1) == 0, || {
            format!("n = {n}: word {word} has adjacent ones")
        });
        r.check_eq(Ok(n), word.value(), || format!("decode(encode({n}))"));
        r.check_eq(Ok(word), word.to_string().parse::<ZeckWord>(), || {
            format!("parse(print(encode({n})))")
        });
        if n >= 1 {
            let len = at(zeck_length(n), || format!("zeck_length({n})"))? as usize;
            r.check(FIB[len + 1] <= n && n < FIB[len + 2], || {
                format!(
                    "n = {n}: length {len} does not bracket n by F_{} and F_{}",
                    len + 1,
                    len + 2
                )
            });
        }
        let image = at(fib_map(n), || format!("fib_map({n})"))?.value();
        r.check(is_fibbinary(image), || {
            format!("fib({n}) = {image} is not fibbinary")
        });
        r.check_eq(Ok(n), fib_unmap(image), || format!("fib_unmap(fib({n}))"));
    }

    // Positive fibbinary numbers up to max_n: the plain bit filter is the
    // reference for both streams and for the bijection, which is increasing.
    let scan: Vec<u64> = (1..=max_n).filter(|&m| is_fibbinary(m)).collect();
    let stream = at(fib_stream(scan.len()), || "fib_stream".into())?;
    let grown = at(fib_stream_by_closure(scan.len()), || {
        "fib_stream_by_closure".into()
    })?;
    for (i, &m) in scan.iter().enumerate() {
        let n = i as u64 + 1;
        r.check_eq(m, stream[i].value.value(), || {
            format!("fib_stream term {n}")
        });
        r.check_eq(stream[i], grown[i], || format!("closure stream term {n}"));
        let image = at(fib_map(n), || format!("fib_map({n})"))?.value();
        r.check_eq(m, image, || format!("fib({n})"));
        r.check_eq(64 - m.leading_zeros(), stream[i].subset, || {
            format!("subset of {m}")
        });
    }
    Ok(r)
}

/// Whether `a = floor(n phi)`, decided by comparing squares:
/// `a < n phi < a + 1` iff `2a - n < n sqrt 5 < 2a + 2 - n`.
fn is_floor_n_phi(n: u64, a: u64) -> bool {
    let (n, a) = (i128::from(n), i128::from(a));
    let five_n2 = 5 * n * n;
    let lo = 2 * a - n;
    let hi = 2 * a + 2 - n;
    (lo < 0 || lo * lo < five_n2) && hi > 0 && five_n2 < hi * hi
}

fn beatty(max_n: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("beatty");
    let mut hits = vec![0u8; max_n as usize + 1];
    for n in 1..=max_n {
        let lw = at(lower_wythoff(n), || format!("lower_wythoff({n})"))?;
        let uw = at(upper_wythoff(n), || format!("upper_wythoff({n})"))?;
        r.check(is_floor_n_phi(n, lw), || {
            format!("LW({n}) = {lw} is not floor({n} phi)")
        });
        r.check_eq(lw + n, uw, || format!("UW({n}) = LW({n}) + {n}"));
        r.check_eq(Ok(lw - 1), fib_even(n - 1), || format!("FE({})", n - 1));
        r.check_eq(Ok(uw - 1), fib_odd(n - 1), || format!("FO({})", n - 1));
        for v in [lw, uw] {
            if v <= max_n {
                hits[v as usize] = hits[v as usize].saturating_add(1);
            }
        }
    }
    for (m, &h) in hits.iter().enumerate().skip(1) {
        r.check(h == 1, || format!("{m} occurs {h} times among LW and UW"));
    }
    Ok(r)
}

fn arrays(max_n: u64, max_k: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("arrays");

    // Every cell with value <= max_n, row by row.
    let mut hits = vec![0u8; max_n as usize + 1];
    let mut rows = 0usize;
    for n in 0.. {
        let head = at(wythoff_cell(n, 1), || format!("C_1({n})"))?;
        if head > max_n {
            break;
        }
        rows += 1;
        r.check_eq(Ok(head), fib_odd(n), || format!("C_1({n}) = FO({n})"));
        for k in 1.. {
            let cell = match wythoff_cell(n, k) {
                Ok(c) if c <= max_n => c,
                _ => break,
            };
            hits[cell as usize] = hits[cell as usize].saturating_add(1);
            r.check_eq(Ok((n, k)), position_of(cell), || {
                format!("position of {cell}")
            });
            r.check(column_membership(k, cell), || {
                format!("{cell} = C_{k}({n}) fails the column test")
            });
        }
    }
    for (m, &h) in hits.iter().enumerate().skip(1) {
        r.check(h == 1, || format!("{m} occurs {h} times in the array"));
    }

    // Structural checks on the window of those rows, as wide as fits.
    let last = rows as u64 - 1;
    let cols = (1..=max_k)
        .take_while(|&k| {
            wythoff_cell(last, k + 1).is_ok() && fib_map(wythoff_cell(last, k).unwrap_or(0)).is_ok()
        })
        .last()
        .unwrap_or(1) as usize;
    if (cols as u64) < max_k {
        r.notes.push(format!(
            "window narrowed to {cols} columns to stay within u64"
        ));
    }
    let window = at(wythoff_window(rows, cols), || {
        format!("{rows} x {cols} window")
    })?;
    r.check(window.is_strictly_monotone(), || {
        "window is not increasing along rows and columns".into()
    });
    let extended = at(extended_wythoff_window(rows, cols + 2), || {
        format!("{rows} x {} extended window", cols + 2)
    })?;
    r.check(extended.rows_satisfy_fibonacci_addition(), || {
        "a row of the extended window breaks Fibonacci addition".into()
    });
    let image = at(fibbinary_window(rows, cols), || {
        format!("{rows} x {cols} fibbinary window")
    })?;
    for (n, row) in image.iter_rows().enumerate() {
        for (j, pair) in row.windows(2).enumerate() {
            r.check_eq(pair[0] * 2, pair[1], || {
                format!("fibbinary row {n}, column {}", j + 2)
            });
        }
    }

    let built = at(wythoff_rows_iterative(rows, 1), || {
        "iterative construction".into()
    })?;
    let (mut ones, mut zeros) = (0u64, 0u64);
    for (n, s) in built.offsets.iter().enumerate().skip(1) {
        let n = n as u64;
        let expected = match s {
            Some(1) => {
                ones += 1;
                lower_wythoff(ones)
            }
            _ => {
                zeros += 1;
                upper_wythoff(zeros)
            }
        };
        r.check_eq(Ok(n), expected, || {
            format!("row {n} built with offset {s:?}")
        });
    }

    for m in 1..=15u64 {
        let diff = at(shape_cover_diff(m), || format!("shape of order {m}"))?;
        let expected = (FIB[m as usize + 1]..FIB[m as usize + 2]).collect();
        r.check_eq(expected, diff, || {
            format!("cells added by the shape of order {m}")
        });
    }
    Ok(r)
}

/// Largest table order whose fractal row extension stays within `max_n`.
fn table_order(max_n: u64) -> u64 {
    (1..=20u64)
        .take_while(|&p| FIB[p as usize + 3] - 1 <= max_n.max(2))
        .last()
        .unwrap_or(1)
}

fn tables(max_n: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("tables");
    let p_max = table_order(max_n);
    let w = at(w_prefix(FIB[p_max as usize + 3] as usize - 1), || {
        "w prefix".into()
    })?;
    for p in 1..=p_max {
        let fib = at(build_fibbinary_table(p), || {
            format!("fibbinary table p = {p}")
        })?;
        let rows = fib.row_count();

        let bottom = fib.row(rows);
        let subset = FIB[p as usize + 1]..FIB[p as usize + 2];
        r.check_eq(subset.end - subset.start, bottom.len() as u64, || {
            format!("p = {p}: bottom row length")
        });
        for (i, (&(x, v), n)) in bottom.iter().zip(subset).enumerate() {
            r.check_eq(Ok(x), fib_even(i as u64), || {
                format!("p = {p}: column of entry {i}")
            });
            r.check_eq(Ok(v), fib_map(n).map(u64::from), || {
                format!("p = {p}: fib({n})")
            });
        }

        for ((row, x), v) in fib.cells() {
            if v % 2 == 0 && row > 1 {
                r.check_eq(Some(v / 2), fib.get(row - 1, x), || {
                    format!("p = {p}: half of {v} above ({row}, {x})")
                });
            }
        }
        let mut heads: Vec<u64> = fib.column_heads().into_iter().map(|(_, v)| v).collect();
        heads.sort_unstable();
        let odd: Vec<u64> = (0..heads.len() as u64)
            .map(odfib)
            .collect::<wythoff_core::Result<_>>()
            .map_err(|e| CliError::core(format!("odfib prefix for p = {p}"), e))?;
        r.check_eq(odd, heads, || format!("p = {p}: column heads"));

        let wyt = at(build_wythoff_table(p), || format!("Wythoff table p = {p}"))?;
        let fractal = at(build_fractal_table(p), || format!("fractal table p = {p}"))?;
        for ((row, x), v) in fib.cells() {
            r.check_eq(fib_unmap(v).ok(), wyt.get(row, x), || {
                format!("p = {p}: Wythoff table at ({row}, {x})")
            });
            let s = Fibbinary::new(v)
                .and_then(|f| f.decompose())
                .map(|(s, _)| s + 1);
            r.check_eq(s.ok(), fractal.get(row, x), || {
                format!("p = {p}: fractal table at ({row}, {x})")
            });
        }

        let extended = at(extend_fractal_row(p), || format!("extending row {p}"))?;
        let start = FIB[p as usize + 2] as usize;
        let end = FIB[p as usize + 3] as usize;
        r.check_eq(&w.terms()[start - 1..end - 1], &extended[..], || {
            format!("p = {p}: extended row against w({start}..{end})")
        });
    }
    r.notes.push(format!("tables with p = 1..={p_max}"));
    Ok(r)
}

fn fractal(max_n: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("fractal");

    // Array-scan reference: every cell <= max_n labelled by its row.
    let mut row_of = vec![0u64; max_n as usize + 1];
    for n in 0.. {
        let mut k = 1;
        loop {
            match wythoff_cell(n, k) {
                Ok(c) if c <= max_n => row_of[c as usize] = n + 1,
                _ => break,
            }
            k += 1;
        }
        if k == 1 {
            break;
        }
    }
    let w = at(w_prefix(max_n as usize), || "w prefix".into())?;
    for (i, &t) in w.terms().iter().enumerate() {
        let n = i as u64 + 1;
        r.check_eq(row_of[n as usize], t, || format!("w({n})"));
        r.check_eq(Ok(t), w_of(n), || format!("w_of({n})"));
    }

    for (k, &f) in FIB.iter().enumerate().take(21).skip(5) {
        if f > max_n {
            break;
        }
        let prefix = at(w_prefix(f as usize), || format!("w prefix of F_{k}"))?;
        let once = prefix.excise_first_occurrences();
        r.check(once.is_prefix_of(&prefix), || {
            format!("excising w(1..={f}) does not give a prefix of w")
        });
        let twice = once.excise_first_occurrences();
        r.check(twice.is_prefix_of(&prefix), || {
            format!("excising w(1..={f}) twice does not give a prefix of w")
        });
    }

    for v in 1.. {
        let pos = at(first_occurrence(v), || format!("first occurrence of {v}"))?;
        if pos > max_n {
            break;
        }
        let earlier = w.terms()[..pos as usize - 1].contains(&v);
        r.check(w.get(pos as usize) == Some(v) && !earlier, || {
            format!("{v} does not first occur at position {pos}")
        });
    }

    r.check_eq(
        Ok(vec![1, 9, 6, 4, 10, 3, 11, 7, 2, 12, 8, 5, 13]),
        extend_fractal_row(6),
        || "sixth fractal row with its gaps filled".into(),
    );
    Ok(r)
}

fn theorem(max_n: u64, max_k: u64) -> Result<SuiteReport, CliError> {
    let mut r = SuiteReport::new("theorem");
    let report = at(verify_main_theorem(max_n, max_k), || {
        format!("theorem check to n = {max_n}, k = {max_k}")
    })?;
    r.checks = report.cells_checked;
    r.failures = report.counterexamples.len() as u64;
    r.counterexamples = report
        .counterexamples
        .iter()
        .take(MAX_REPORTED)
        .map(|c| {
            format!(
                "n = {}, k = {}, {:?}: expected {}, got {}",
                c.n, c.k, c.check, c.expected, c.actual
            )
        })
        .collect();
    if report.cells_skipped > 0 {
        r.notes.push(format!(
            "{} cells skipped because a value exceeds u64",
            report.cells_skipped
        ));
    }
    if report.iterative_checked < report.cells_checked {
        r.notes.push(format!(
            "row-by-row construction compared on {} of {} cells",
            report.iterative_checked, report.cells_checked
        ));
    }
    Ok(r)
}
