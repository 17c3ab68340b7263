//! The fractal sequence of the Wythoff array: `w(n)` is the (1-based) row
//! of the array holding `n`.

use std::collections::HashSet;

use crate::wythoff::{position_of, wythoff_cell};
use crate::{Error, Result};

/// `w(n)` for `n >= 1`, read off the Zeckendorf word of `n`.
///
/// Every word has the form `word(m) 0 1 0^(k-1)` (without the `0` when
/// `word(m)` is empty), and `n` sits in row `m` of the array.
pub fn w_of(n: u64) -> Result<u64> {
    let (row, _) =
        position_of(n).map_err(|_| Error::Domain("the fractal sequence is indexed from 1"))?;
    Ok(row + 1)
}

/// `w(n)` found by scanning the array rows until one contains `n`.
pub fn w_of_bruteforce(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("the fractal sequence is indexed from 1"));
    }
    let mut row = 0u64;
    loop {
        if wythoff_cell(row, 1)? > n {
            return Err(Error::Domain("value not found in the array"));
        }
        let mut k = 1;
        loop {
            let cell = wythoff_cell(row, k)?;
            if cell == n {
                return Ok(row + 1);
            }
            if cell > n {
                break;
            }
            k += 1;
        }
        row += 1;
    }
}

/// A finite prefix `w(1), ..., w(N)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FractalPrefix(Vec<u64>);

impl FractalPrefix {
    /// Wraps arbitrary terms (for example a slice read from elsewhere) so it
    /// can be compared or excised.
    pub fn from_terms(terms: Vec<u64>) -> Self {
        FractalPrefix(terms)
    }

    pub fn terms(&self) -> &[u64] {
        &self.0
    }

    /// Term at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &FractalPrefix) -> bool {
        other.0.starts_with(&self.0)
    }

    /// Removes the first occurrence of every distinct value.
    pub fn excise_first_occurrences(&self) -> FractalPrefix {
        let mut seen = HashSet::new();
        FractalPrefix(
            self.0
                .iter()
                .copied()
                .filter(|&v| !seen.insert(v))
                .collect(),
        )
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.0
    }
}

/// `w(1), ..., w(len)`.
pub fn w_prefix(len: usize) -> Result<FractalPrefix> {
    (1..=len as u64)
        .map(w_of)
        .collect::<Result<_>>()
        .map(FractalPrefix)
}

/// The 1-based position at which value `v` first occurs, i.e. the head
/// `C_1(v - 1)` of row `v`.
pub fn first_occurrence(v: u64) -> Result<u64> {
    if v == 0 {
        return Err(Error::Domain("rows are numbered from 1"));
    }
    wythoff_cell(v - 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PRINTED: [u64; 21] = [
        1, 1, 1, 2, 1, 3, 2, 1, 4, 3, 2, 5, 1, 6, 4, 3, 7, 2, 8, 5, 1,
    ];

    #[test]
    fn pointwise() {
        assert_eq!(w_of(6), Ok(3));
        assert_eq!(w_of(1), Ok(1));
        assert_eq!(w_of(12), Ok(5));
        assert!(w_of(0).is_err());
        assert_eq!(w_of(u64::MAX).map(|r| r >= 1), Ok(true));
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(w_of_bruteforce(6), Ok(3));
        assert_eq!(w_of_bruteforce(2), Ok(1));
        assert_eq!(w_of_bruteforce(19), Ok(8));
        assert!(w_of_bruteforce(0).is_err());
    }

    #[test]
    fn printed_prefix() {
        assert_eq!(w_prefix(21).unwrap().terms(), PRINTED);
        assert_eq!(w_prefix(1).unwrap().terms(), [1]);
        assert_eq!(&w_prefix(13).unwrap().terms()[8..], [4, 3, 2, 5, 1]);
        assert!(w_prefix(0).unwrap().is_empty());
    }

    #[test]
    fn excision_examples() {
        let p = FractalPrefix::from_terms(vec![1, 1, 1, 2, 1, 3, 2]);
        let e = p.excise_first_occurrences();
        assert_eq!(e.terms(), [1, 1, 1, 2]);
        assert_eq!(e, w_prefix(4).unwrap());
        assert!(FractalPrefix::from_terms(vec![1])
            .excise_first_occurrences()
            .is_empty());
    }

    #[test]
    fn first_occurrences() {
        let w = w_prefix(200).unwrap();
        for v in 1..=20u64 {
            let pos = first_occurrence(v).unwrap() as usize;
            assert_eq!(w.get(pos), Some(v));
            assert!(w.terms()[..pos - 1].iter().all(|&t| t != v));
        }
        assert_eq!(w.get(0), None);
    }
}
