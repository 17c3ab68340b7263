//! The golden-ratio Beatty sequences, evaluated without floating point.
//!
//! Everything reduces to the shift identity `(n0)_F = floor((n+1) phi) - 1`:
//! appending a zero digit to the Zeckendorf word of `n` is an exact way to
//! multiply by the golden ratio and round down.

use std::ops::Range;

use crate::zeckendorf::{zeck_encode, zeck_shift, FIB, MAX_FIB_INDEX};
use crate::{Error, Result};

/// Lower Wythoff sequence `LW(n) = floor(n phi)`, `n >= 1`.
pub fn lower_wythoff(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("lower_wythoff is defined for n >= 1"));
    }
    zeck_shift(n - 1, 1)?
        .checked_add(1)
        .ok_or(Error::Overflow("lower_wythoff"))
}

/// Upper Wythoff sequence `UW(n) = floor(n phi^2) = LW(n) + n`, `n >= 1`.
pub fn upper_wythoff(n: u64) -> Result<u64> {
    lower_wythoff(n)?
        .checked_add(n)
        .ok_or(Error::Overflow("upper_wythoff"))
}

/// Fibonacci-odd integers `FO(n) = (n01)_F = floor((n+1) phi^2) - 1`, `n >= 0`.
pub fn fib_odd(n: u64) -> Result<u64> {
    zeck_encode(n)
        .append(0b01, 2)
        .and_then(|w| w.value())
        .map_err(|_| Error::Overflow("fib_odd"))
}

/// Fibonacci-even integers `FE(n) = (n0)_F = floor((n+1) phi) - 1`, `n >= 0`.
pub fn fib_even(n: u64) -> Result<u64> {
    zeck_shift(n, 1).map_err(|_| Error::Overflow("fib_even"))
}

/// The Fibonacci subset `{F_(k+1), ..., F_(k+2) - 1}`: the `F_k` integers
/// whose Zeckendorf word has exactly `k` digits.
pub fn fibonacci_subset(k: u64) -> Result<Range<u64>> {
    if k == 0 {
        return Err(Error::Domain("Fibonacci subsets are indexed from 1"));
    }
    if k + 2 > MAX_FIB_INDEX as u64 {
        return Err(Error::Overflow("fibonacci_subset"));
    }
    let k = k as usize;
    Ok(FIB[k + 1]..FIB[k + 2])
}
