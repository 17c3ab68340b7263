//! Fibbinary numbers: integers whose binary expansion has no two adjacent
//! ones.
//!
//! [`fib_map`] is the bijection that reads the Zeckendorf digits of `n` as a
//! binary numeral. Its image is exactly the fibbinary numbers, and the odd
//! ones are `odfib(n) = 4 fib(n) + 1 = (n01)_2`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use crate::zeckendorf::{zeck_encode, ZeckWord};
use crate::{Error, Result};

/// An integer with no two adjacent ones in binary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fibbinary(u64);

impl Fibbinary {
    pub fn new(value: u64) -> Result<Self> {
        if is_fibbinary(value) {
            Ok(Fibbinary(value))
        } else {
            Err(Error::NotFibbinary(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// The Zeckendorf word with the same digits.
    pub fn word(self) -> ZeckWord {
        ZeckWord::from_bits(self.0 as u128)
            .expect("fibbinary digits satisfy the Zeckendorf condition")
    }

    /// Preimage under [`fib_map`].
    pub fn preimage(self) -> Result<u64> {
        self.word().value()
    }

    /// Index `k` of the Fibonacci subset containing this number: its binary
    /// length. 0 for the number 0.
    pub fn subset(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// Unique factorisation `m = odfib(s) * 2^r` for `m >= 1`, returned as
    /// `(s, r)`.
    pub fn decompose(self) -> Result<(u64, u32)> {
        if self.0 == 0 {
            return Err(Error::Domain("0 has no odd part"));
        }
        let r = self.0.trailing_zeros();
        let odd = self.0 >> r;
        // odd fibbinary numbers end in ...01 (or are 1), so odd = 4j + 1
        let s = Fibbinary((odd - 1) >> 2).preimage()?;
        Ok((s, r))
    }
}

impl fmt::Display for Fibbinary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Fibbinary> for u64 {
    fn from(m: Fibbinary) -> u64 {
        m.0
    }
}

pub fn is_fibbinary(m: u64) -> bool {
    m & (m >> 1) == 0
}

/// `fib(n) = (n)_2`: the Zeckendorf digits of `n` read in base 2.
pub fn fib_map(n: u64) -> Result<Fibbinary> {
    zeck_encode(n)
        .to_binary()
        .map(Fibbinary)
        .map_err(|_| Error::Overflow("fib_map"))
}

/// Inverse of [`fib_map`].
pub fn fib_unmap(m: u64) -> Result<u64> {
    Fibbinary::new(m)?.preimage()
}

/// `odfib(n) = 4 fib(n) + 1`, the `n`-th odd fibbinary number (from 0).
pub fn odfib(n: u64) -> Result<u64> {
    fib_map(n)?
        .value()
        .checked_mul(4)
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::Overflow("odfib"))
}

/// `evfib(n) = 2 fib(n)` for `n >= 1`.
pub fn evfib(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("evfib is defined for n >= 1"));
    }
    fib_map(n)?
        .value()
        .checked_mul(2)
        .ok_or(Error::Overflow("evfib"))
}

/// A fibbinary number together with the Fibonacci subset it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamEntry {
    pub value: Fibbinary,
    pub subset: u32,
}

impl From<Fibbinary> for StreamEntry {
    fn from(value: Fibbinary) -> Self {
        StreamEntry {
            value,
            subset: value.subset(),
        }
    }
}

/// The first `count` positive fibbinary numbers in increasing order, found
/// by testing each candidate.
pub fn fib_stream(count: usize) -> Result<Vec<StreamEntry>> {
    let mut out = Vec::with_capacity(count);
    let mut m = 1u64;
    while out.len() < count {
        if is_fibbinary(m) {
            out.push(Fibbinary(m).into());
        }
        m = m.checked_add(1).ok_or(Error::Overflow("fib_stream"))?;
    }
    Ok(out)
}

/// Same list as [`fib_stream`], grown from 1 by the closure rule
/// `j -> 2j, 4j + 1`. Every positive fibbinary number has exactly one
/// parent under this rule, so a min-heap yields them in order.
pub fn fib_stream_by_closure(count: usize) -> Result<Vec<StreamEntry>> {
    let mut out = Vec::with_capacity(count);
    let mut heap = BinaryHeap::from([Reverse(1u64)]);
    while out.len() < count {
        let Reverse(j) = heap.pop().ok_or(Error::Overflow("fib_stream_by_closure"))?;
        out.push(Fibbinary(j).into());
        if let Some(even) = j.checked_mul(2) {
            heap.push(Reverse(even));
        }
        if let Some(odd) = j.checked_mul(4).and_then(|v| v.checked_add(1)) {
            heap.push(Reverse(odd));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeckendorf::FIB;

    #[test]
    fn map_examples() {
        assert_eq!(fib_map(12).unwrap().value(), 21);
        assert_eq!(fib_map(20).unwrap().value(), 42);
        assert_eq!(fib_map(13).unwrap().value(), 32);
        assert_eq!(fib_map(33).unwrap().value(), 85);
        assert_eq!(fib_map(54).unwrap().value(), 170);
        assert_eq!(fib_map(88).unwrap().value(), 341);
        assert_eq!(fib_map(0).unwrap().value(), 0);
    }

    #[test]
    fn powers_of_two_are_fibonacci_images() {
        for (i, &f) in FIB.iter().enumerate().take(66).skip(2) {
            assert_eq!(fib_map(f).unwrap().value(), 1 << (i - 2));
        }
        assert!(fib_map(FIB[66]).is_err());
    }

    #[test]
    fn unmap_examples() {
        assert_eq!(fib_unmap(21), Ok(12));
        assert_eq!(fib_unmap(1), Ok(1));
        assert_eq!(fib_unmap(85), Ok(33));
        assert_eq!(fib_unmap(0), Ok(0));
        assert_eq!(fib_unmap(7), Err(Error::NotFibbinary(7)));
        assert_eq!(fib_unmap(3), Err(Error::NotFibbinary(3)));
    }

    #[test]
    fn membership() {
        assert!(is_fibbinary(10));
        assert!(!is_fibbinary(7));
        assert!(is_fibbinary(170));
        assert!(is_fibbinary(0));
        assert!(Fibbinary::new(6).is_err());
    }

    #[test]
    fn odfib_evfib_examples() {
        assert_eq!(odfib(0), Ok(1));
        assert_eq!(odfib(2), Ok(9));
        assert_eq!(odfib(12), Ok(85));
        assert_eq!(evfib(1), Ok(2));
        assert_eq!(evfib(12), Ok(2 * fib_map(12).unwrap().value()));
        assert_eq!(evfib(3), Ok(2 * fib_map(3).unwrap().value()));
        assert_eq!(evfib(3), Ok(8));
        assert!(evfib(0).is_err());
        assert!(odfib(FIB[64]).is_err());
    }

    #[test]
    fn stream_opening() {
        let values: Vec<u64> = fib_stream(7)
            .unwrap()
            .iter()
            .map(|e| e.value.value())
            .collect();
        assert_eq!(values, [1, 2, 4, 5, 8, 9, 10]);
        let subsets: Vec<u32> = fib_stream(7).unwrap().iter().map(|e| e.subset).collect();
        assert_eq!(subsets, [1, 2, 3, 3, 4, 4, 4]);
        assert_eq!(fib_stream(1).unwrap()[0].value.value(), 1);
        assert!(fib_stream(0).unwrap().is_empty());
    }

    #[test]
    fn stream_subset_five() {
        let five: Vec<u64> = fib_stream(12)
            .unwrap()
            .into_iter()
            .filter(|e| e.subset == 5)
            .map(|e| e.value.value())
            .collect();
        assert_eq!(five, [16, 17, 18, 20, 21]);
    }

    #[test]
    fn closure_matches_filter() {
        assert_eq!(
            fib_stream(5000).unwrap(),
            fib_stream_by_closure(5000).unwrap()
        );
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(Fibbinary::new(1).unwrap().decompose(), Ok((0, 0)));
        assert_eq!(Fibbinary::new(36).unwrap().decompose(), Ok((2, 2)));
        assert_eq!(Fibbinary::new(33).unwrap().decompose(), Ok((5, 0)));
        assert!(Fibbinary::new(0).unwrap().decompose().is_err());
    }
}
