//! OEIS b-file text and the bundled reference fixtures.
//!
//! A b-file is one `index value` pair per line, separated by a single space
//! and terminated by `\n`. A fixture file starts with a `# <id> <offset>`
//! header and continues with b-file lines whose indices run consecutively
//! from the offset.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn parse_error(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

/// Writes `index value` lines for consecutive indices from `offset`.
pub fn format_bfile(offset: u64, terms: &[u64]) -> String {
    let mut out = String::with_capacity(terms.len() * 8);
    for (i, v) in terms.iter().enumerate() {
        let _ = writeln!(out, "{} {}", offset + i as u64, v);
    }
    out
}

/// Parses b-file lines into `(index, value)` pairs. Lines starting with `#`
/// and blank lines are skipped, as in OEIS b-files.
pub fn parse_bfile(text: &str) -> Result<Vec<(u64, u64)>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error(line_no, "expected `index value`"));
        };
        let index = index
            .parse::<u64>()
            .map_err(|e| parse_error(line_no, format!("bad index {index:?}: {e}")))?;
        let value = value
            .parse::<u64>()
            .map_err(|e| parse_error(line_no, format!("bad value {value:?}: {e}")))?;
        out.push((index, value));
    }
    Ok(out)
}

/// Reference terms of one OEIS sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OeisFixture {
    pub id: String,
    pub offset: u64,
    pub terms: Vec<u64>,
}

impl OeisFixture {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let header = text
            .lines()
            .next()
            .ok_or_else(|| parse_error(1, "empty fixture"))?;
        let mut fields = header
            .strip_prefix('#')
            .ok_or_else(|| parse_error(1, "missing `# id offset` header"))?
            .split_whitespace();
        let (Some(id), Some(offset), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error(1, "header must be `# id offset`"));
        };
        if !id.starts_with('A') || id.len() != 7 || !id[1..].bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_error(1, format!("bad sequence id {id:?}")));
        }
        let offset = offset
            .parse::<u64>()
            .map_err(|e| parse_error(1, format!("bad offset: {e}")))?;

        let body = text.split_once('\n').map_or("", |(_, rest)| rest);
        let pairs = parse_bfile(body).map_err(|e| parse_error(e.line + 1, e.reason))?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (i, (index, value)) in pairs.into_iter().enumerate() {
            if Some(index) != offset.checked_add(i as u64) {
                return Err(parse_error(
                    i + 2,
                    format!("index {index} breaks the run starting at {offset}"),
                ));
            }
            terms.push(value);
        }
        Ok(OeisFixture {
            id: id.to_owned(),
            offset,
            terms,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "# {} {}\n{}",
            self.id,
            self.offset,
            format_bfile(self.offset, &self.terms)
        )
    }

    /// The b-file part only.
    pub fn bfile(&self) -> String {
        format_bfile(self.offset, &self.terms)
    }
}

/// Fixtures compiled into the binary.
pub const BUNDLED: [(&str, &str); 8] = [
    ("A000201", include_str!("../fixtures/A000201.txt")),
    ("A001950", include_str!("../fixtures/A001950.txt")),
    ("A003603", include_str!("../fixtures/A003603.txt")),
    ("A003622", include_str!("../fixtures/A003622.txt")),
    ("A003714", include_str!("../fixtures/A003714.txt")),
    ("A022341", include_str!("../fixtures/A022341.txt")),
    ("A022342", include_str!("../fixtures/A022342.txt")),
    ("A035513", include_str!("../fixtures/A035513.txt")),
];

pub fn bundled_fixtures() -> Result<Vec<OeisFixture>, ParseError> {
    BUNDLED
        .iter()
        .map(|(_, text)| OeisFixture::parse(text))
        .collect()
}
