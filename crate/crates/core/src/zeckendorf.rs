//! Fibonacci numbers and the Zeckendorf codec.
//!
//! A [`ZeckWord`] stores the digit string `a_r a_(r-1) ... a_2` of a
//! Zeckendorf representation. Internally the digit that multiplies `F_(i+2)`
//! lives in bit `i` of a `u128`, so appending digits on the right is a shift
//! and the Zeckendorf condition is `bits & (bits >> 1) == 0`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Largest index `i` with `F_i` representable in a `u64`.
pub const MAX_FIB_INDEX: usize = 93;

/// Longest digit string whose value can fit in a `u64` (positions 0..=91).
pub const MAX_WORD_LEN: u32 = (MAX_FIB_INDEX - 1) as u32;

/// `FIB[i] = F_i` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub const FIB: [u64; MAX_FIB_INDEX + 1] = {
    let mut table = [0u64; MAX_FIB_INDEX + 1];
    table[1] = 1;
    let mut i = 2;
    while i <= MAX_FIB_INDEX {
        table[i] = table[i - 1] + table[i - 2];
        i += 1;
    }
    table
};

/// Returns `F_i` under the convention `F_1 = F_2 = 1`.
pub fn fibonacci(i: u64) -> Result<u64> {
    match i {
        0 => Err(Error::Domain("Fibonacci index must be at least 1")),
        i if i > MAX_FIB_INDEX as u64 => Err(Error::Overflow("fibonacci")),
        i => Ok(FIB[i as usize]),
    }
}

/// A digit string satisfying the Zeckendorf condition, most significant
/// digit first. The empty word denotes 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ZeckWord(u128);

impl ZeckWord {
    pub const EMPTY: ZeckWord = ZeckWord(0);

    /// Builds a word from its digit bits (bit `i` is the coefficient of
    /// `F_(i+2)`).
    pub fn from_bits(bits: u128) -> Result<Self> {
        if bits & (bits >> 1) != 0 {
            return Err(Error::InvalidWord {
                word: format!("{bits:b}"),
                reason: "adjacent ones",
            });
        }
        Ok(ZeckWord(bits))
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// Number of digits.
    pub fn len(self) -> u32 {
        128 - self.0.leading_zeros()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Digits from most to least significant.
    pub fn digits(self) -> impl Iterator<Item = u8> {
        (0..self.len())
            .rev()
            .map(move |i| ((self.0 >> i) & 1) as u8)
    }

    /// Number of trailing zero digits; 0 for the empty word.
    pub fn trailing_zeros(self) -> u32 {
        if self.0 == 0 {
            0
        } else {
            self.0.trailing_zeros()
        }
    }

    /// Appends `suffix_len` raw digits given by `suffix` (most significant
    /// first) and validates the result. The suffix may start with zeros.
    pub fn append(self, suffix: u128, suffix_len: u32) -> Result<Self> {
        if suffix_len < 128 && suffix >> suffix_len != 0 {
            return Err(Error::Domain("suffix has more digits than its length"));
        }
        if self.len() + suffix_len > 127 {
            return Err(Error::Overflow("ZeckWord::append"));
        }
        ZeckWord::from_bits((self.0 << suffix_len) | suffix)
    }

    /// Appends `count` zero digits. The empty word stays empty.
    pub fn append_zeros(self, count: u32) -> Result<Self> {
        if self.0 == 0 {
            return Ok(self);
        }
        self.append(0, count)
    }

    /// Reads the digits as a binary numeral.
    pub fn to_binary(self) -> Result<u64> {
        u64::try_from(self.0).map_err(|_| Error::Overflow("ZeckWord::to_binary"))
    }

    /// Value of the word as a sum of Fibonacci numbers.
    pub fn value(self) -> Result<u64> {
        if self.len() > MAX_WORD_LEN {
            return Err(Error::Overflow("zeck_decode"));
        }
        let mut bits = self.0;
        let mut total = 0u64;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            total = total
                .checked_add(FIB[i + 2])
                .ok_or(Error::Overflow("zeck_decode"))?;
            bits &= bits - 1;
        }
        Ok(total)
    }
}

impl fmt::Display for ZeckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return Ok(());
        }
        write!(f, "{:b}", self.0)
    }
}

impl FromStr for ZeckWord {
    type Err = Error;

    /// Parses a digit string such as `"10101"`. The empty string is the word
    /// for 0.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = |reason| Error::InvalidWord {
            word: s.to_owned(),
            reason,
        };
        if s.len() > 127 {
            return Err(invalid("too many digits"));
        }
        let mut bits = 0u128;
        for (pos, c) in s.chars().enumerate() {
            let digit = match c {
                '0' if pos == 0 => return Err(invalid("leading zero")),
                '0' => 0,
                '1' => 1,
                _ => return Err(invalid("digits must be 0 or 1")),
            };
            bits = (bits << 1) | digit;
        }
        ZeckWord::from_bits(bits).map_err(|_| invalid("adjacent ones"))
    }
}

/// Greedy Zeckendorf encoding: repeatedly take the largest `F_r <= n`.
pub fn zeck_encode(mut n: u64) -> ZeckWord {
    let mut bits = 0u128;
    let mut i = MAX_FIB_INDEX;
    while n > 0 {
        while FIB[i] > n {
            i -= 1;
        }
        bits |= 1u128 << (i - 2);
        n -= FIB[i];
        // the next usable index is i - 2, and F_(i-1) > remainder already
        i -= 1;
    }
    ZeckWord(bits)
}

/// Evaluates a digit string `sum a_i F_i`.
pub fn zeck_decode(word: ZeckWord) -> Result<u64> {
    word.value()
}

/// Parses and decodes a digit string in one step.
pub fn zeck_decode_str(digits: &str) -> Result<u64> {
    digits.parse::<ZeckWord>()?.value()
}

/// Length of the Zeckendorf word of `n >= 1`.
pub fn zeck_length(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Domain("zeck_length is defined for n >= 1"));
    }
    Ok(zeck_encode(n).len())
}

/// Value of the word of `n` with `zeros` zero digits appended, `(n0...0)_F`.
pub fn zeck_shift(n: u64, zeros: u64) -> Result<u64> {
    if n == 0 {
        return Ok(0);
    }
    let zeros = u32::try_from(zeros).map_err(|_| Error::Overflow("zeck_shift"))?;
    let word = zeck_encode(n);
    if word.len().saturating_add(zeros) > MAX_WORD_LEN {
        return Err(Error::Overflow("zeck_shift"));
    }
    word.append_zeros(zeros)?.value()
}
