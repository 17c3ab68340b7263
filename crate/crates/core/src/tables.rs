//! Sparse tables of the fibbinary numbers and their images.
//!
//! A table with `p` rows has column labels `0..F_(p+1)`. The bottom row holds
//! the fibbinary Fibonacci subset of order `p` placed at the columns
//! `FE(0), FE(1), ..., FE(F_p - 1)`; above every even entry sits its half,
//! repeated until an odd number is reached. The Wythoff and fractal tables
//! keep the same occupied cells and replace each entry by its preimage under
//! the bijection, or by the (1-based) row of the fibbinary array holding it.

use std::collections::BTreeMap;

use crate::beatty::{fib_even, fibonacci_subset};
use crate::fibbinary::{fib_map, fib_unmap, Fibbinary};
use crate::zeckendorf::{fibonacci, FIB};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Fibbinary,
    Wythoff,
    Fractal,
}

/// Occupied cells keyed by `(row, column)`, rows numbered `1..=p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseTable {
    kind: TableKind,
    row_count: u32,
    column_count: u64,
    cells: BTreeMap<(u32, u64), u64>,
}

impl SparseTable {
    pub fn kind(&self) -> TableKind {
        self.kind
    }

    /// `p`.
    pub fn row_count(&self) -> u32 {
        self.row_count
    }

    /// Number of column labels, `F_(p+1)`.
    pub fn column_count(&self) -> u64 {
        self.column_count
    }

    /// Rightmost occupied column, `FE(F_p - 1)`.
    pub fn x_max(&self) -> u64 {
        self.cells.keys().map(|&(_, x)| x).max().unwrap_or(0)
    }

    pub fn get(&self, row: u32, x: u64) -> Option<u64> {
        self.cells.get(&(row, x)).copied()
    }

    /// Occupied `(column, value)` pairs of one row, left to right.
    pub fn row(&self, row: u32) -> Vec<(u64, u64)> {
        self.cells
            .range((row, 0)..=(row, u64::MAX))
            .map(|(&(_, x), &v)| (x, v))
            .collect()
    }

    /// Topmost entry of every occupied column, left to right.
    pub fn column_heads(&self) -> Vec<(u64, u64)> {
        let mut heads: BTreeMap<u64, (u32, u64)> = BTreeMap::new();
        for (&(r, x), &v) in &self.cells {
            heads
                .entry(x)
                .and_modify(|e| {
                    if r < e.0 {
                        *e = (r, v)
                    }
                })
                .or_insert((r, v));
        }
        heads.into_iter().map(|(x, (_, v))| (x, v)).collect()
    }

    /// All occupied cells as `((row, column), value)`.
    pub fn cells(&self) -> impl Iterator<Item = ((u32, u64), u64)> + '_ {
        self.cells.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn map_values<F>(&self, kind: TableKind, mut f: F) -> Result<SparseTable>
    where
        F: FnMut(u64) -> Result<u64>,
    {
        let cells = self
            .cells
            .iter()
            .map(|(&k, &v)| Ok((k, f(v)?)))
            .collect::<Result<_>>()?;
        Ok(SparseTable {
            kind,
            row_count: self.row_count,
            column_count: self.column_count,
            cells,
        })
    }
}

fn row_count_u32(p: u64) -> Result<u32> {
    if p == 0 {
        return Err(Error::Domain("a table needs at least one row"));
    }
    // fib values of the bottom row have p binary digits
    if p > 64 {
        return Err(Error::Overflow("table row count"));
    }
    Ok(p as u32)
}

/// The fibbinary table with `p` rows.
pub fn build_fibbinary_table(p: u64) -> Result<SparseTable> {
    let rows = row_count_u32(p)?;
    let column_count = fibonacci(p + 1)?;
    let mut cells = BTreeMap::new();
    for (i, n) in fibonacci_subset(p)?.enumerate() {
        let x = fib_even(i as u64)?;
        let mut e = fib_map(n)?.value();
        let mut r = rows;
        cells.insert((r, x), e);
        while e % 2 == 0 && r > 1 {
            e /= 2;
            r -= 1;
            cells.insert((r, x), e);
        }
    }
    Ok(SparseTable {
        kind: TableKind::Fibbinary,
        row_count: rows,
        column_count,
        cells,
    })
}

/// Preimage of the fibbinary table under the bijection.
pub fn build_wythoff_table(p: u64) -> Result<SparseTable> {
    build_fibbinary_table(p)?.map_values(TableKind::Wythoff, fib_unmap)
}

/// Each fibbinary entry `odfib(s) 2^r` replaced by `s + 1`.
pub fn build_fractal_table(p: u64) -> Result<SparseTable> {
    build_fibbinary_table(p)?.map_values(TableKind::Fractal, |e| {
        Ok(Fibbinary::new(e)?.decompose()?.0 + 1)
    })
}

/// Row `p` of the fractal table with its empty columns filled, left to right,
/// by `F_p + 1, ..., F_(p+1)`. The result is the run of the fractal sequence
/// at positions `F_(p+2), ..., F_(p+3) - 1`.
pub fn extend_fractal_row(p: u64) -> Result<Vec<u64>> {
    let table = build_fractal_table(p)?;
    let rows = table.row_count();
    let mut fill = FIB[p as usize] + 1..=FIB[p as usize + 1];
    let mut out = Vec::with_capacity(table.column_count() as usize);
    for x in 0..table.column_count() {
        match table.get(rows, x) {
            Some(v) => out.push(v),
            None => out.push(
                fill.next()
                    .ok_or(Error::Domain("more gaps than fill values"))?,
            ),
        }
    }
    if fill.next().is_some() {
        return Err(Error::Domain("fewer gaps than fill values"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_values(t: &SparseTable, r: u32) -> Vec<(u64, u64)> {
        t.row(r)
    }

    #[test]
    fn fibbinary_table_six_rows() {
        let t = build_fibbinary_table(6).unwrap();
        assert_eq!(t.column_count(), 13);
        assert_eq!(t.x_max(), 11);
        assert_eq!(row_values(&t, 1), [(0, 1)]);
        assert_eq!(row_values(&t, 3), [(0, 4), (8, 5)]);
        assert_eq!(
            row_values(&t, 5),
            [(0, 16), (3, 17), (5, 18), (8, 20), (11, 21)]
        );
        assert_eq!(
            row_values(&t, 6),
            [
                (0, 32),
                (2, 33),
                (3, 34),
                (5, 36),
                (7, 37),
                (8, 40),
                (10, 41),
                (11, 42)
            ]
        );
        assert_eq!(t.get(5, 11), Some(21));
        assert_eq!(t.get(6, 12), None);
    }

    #[test]
    fn fibbinary_table_single_row() {
        let t = build_fibbinary_table(1).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(1, 0), Some(1));
        assert_eq!(t.column_count(), 1);
        assert!(build_fibbinary_table(0).is_err());
    }

    #[test]
    fn fibbinary_table_five_rows_bottom() {
        // p = 5 places its bottom row differently from row 5 of the p = 6 table
        let t = build_fibbinary_table(5).unwrap();
        assert_eq!(
            row_values(&t, 5),
            [(0, 16), (2, 17), (3, 18), (5, 20), (7, 21)]
        );
    }

    #[test]
    fn wythoff_table_rows() {
        let t = build_wythoff_table(6).unwrap();
        assert_eq!(
            row_values(&t, 6),
            [
                (0, 13),
                (2, 14),
                (3, 15),
                (5, 16),
                (7, 17),
                (8, 18),
                (10, 19),
                (11, 20)
            ]
        );
        assert_eq!(build_wythoff_table(1).unwrap().get(1, 0), Some(1));
    }

    #[test]
    fn wythoff_table_j_seven() {
        // 18 = (j00)_F with j = 7; 11 = (j0)_F sits above it and 19 = (j01)_F
        // is the next entry of row 6 to the right
        let t = build_wythoff_table(6).unwrap();
        let (x18, _) = t.row(6).into_iter().find(|&(_, v)| v == 18).unwrap();
        assert_eq!(t.get(5, x18), Some(11));
        assert_eq!(t.get(4, x18), Some(7));
        let right = t.row(6).into_iter().find(|&(x, _)| x > x18).unwrap();
        assert_eq!(right.1, 19);
    }

    #[test]
    fn fractal_table_rows() {
        let t = build_fractal_table(6).unwrap();
        let six: Vec<u64> = t.row(6).into_iter().map(|(_, v)| v).collect();
        assert_eq!(six, [1, 6, 4, 3, 7, 2, 8, 5]);
        assert_eq!(t.row(4), [(0, 1), (5, 3), (8, 2)]);
        let t4 = build_fractal_table(4).unwrap();
        assert_eq!(t4.row(4), [(0, 1), (2, 3), (3, 2)]);
        let t2 = build_fractal_table(2).unwrap();
        assert_eq!(t2.row(1), [(0, 1)]);
        assert_eq!(t2.row(2), [(0, 1)]);
    }

    #[test]
    fn extension() {
        assert_eq!(
            extend_fractal_row(6).unwrap(),
            [1, 9, 6, 4, 10, 3, 11, 7, 2, 12, 8, 5, 13]
        );
        assert_eq!(extend_fractal_row(5).unwrap(), [1, 6, 4, 3, 7, 2, 8, 5]);
        assert_eq!(extend_fractal_row(2).unwrap(), [1, 2]);
        assert_eq!(extend_fractal_row(1).unwrap(), [1]);
    }

    #[test]
    fn column_heads_are_odd() {
        let t = build_fibbinary_table(6).unwrap();
        let mut heads: Vec<u64> = t.column_heads().into_iter().map(|(_, v)| v).collect();
        assert!(heads.iter().all(|v| v % 2 == 1));
        heads.sort_unstable();
        assert_eq!(heads, [1, 5, 9, 17, 21, 33, 37, 41]);
    }
}
