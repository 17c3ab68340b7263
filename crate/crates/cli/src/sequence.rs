//! Named integer sequences and their index conventions.

use std::fmt;
use std::str::FromStr;

use wythoff_core::beatty::{fib_even, fib_odd, lower_wythoff, upper_wythoff};
use wythoff_core::fibbinary::{fib_map, odfib};
use wythoff_core::fractal::w_of;
use wythoff_core::wythoff::wythoff_cell;
use wythoff_core::zeckendorf::fibonacci;
use wythoff_core::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum SequenceName {
    /// Fibbinary numbers fib(n), from n = 1
    Fib,
    /// Odd fibbinary numbers 4 fib(n) + 1, from n = 0
    Odfib,
    /// Lower Wythoff sequence floor(n phi), from n = 1
    Lw,
    /// Upper Wythoff sequence floor(n phi^2), from n = 1
    Uw,
    /// Fibonacci-odd integers, from n = 0
    Fo,
    /// Fibonacci-even integers, from n = 0
    Fe,
    /// Fibonacci numbers F_i, from i = 1
    Fibonacci,
    /// Fractal sequence of the Wythoff array, from n = 1
    W,
    /// The Wythoff array read by antidiagonals, from 1
    WythoffArray,
}

impl SequenceName {
    pub const ALL: [SequenceName; 9] = [
        SequenceName::Fib,
        SequenceName::Odfib,
        SequenceName::Lw,
        SequenceName::Uw,
        SequenceName::Fo,
        SequenceName::Fe,
        SequenceName::Fibonacci,
        SequenceName::W,
        SequenceName::WythoffArray,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceName::Fib => "fib",
            SequenceName::Odfib => "odfib",
            SequenceName::Lw => "lw",
            SequenceName::Uw => "uw",
            SequenceName::Fo => "fo",
            SequenceName::Fe => "fe",
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::W => "w",
            SequenceName::WythoffArray => "wythoff-array",
        }
    }

    /// First index of the natural numbering used by `seq`.
    pub fn offset(self) -> u64 {
        match self {
            SequenceName::Odfib | SequenceName::Fo | SequenceName::Fe => 0,
            _ => 1,
        }
    }

    /// First index written by `export`. Follows the OEIS numbering, which
    /// starts FO and FE at 1.
    pub fn export_offset(self) -> u64 {
        match self {
            SequenceName::Odfib => 0,
            _ => 1,
        }
    }

    /// OEIS identifier of the bundled reference data, if any.
    pub fn oeis_id(self) -> Option<&'static str> {
        match self {
            SequenceName::Fib => Some("A003714"),
            SequenceName::Odfib => Some("A022341"),
            SequenceName::Lw => Some("A000201"),
            SequenceName::Uw => Some("A001950"),
            SequenceName::Fo => Some("A003622"),
            SequenceName::Fe => Some("A022342"),
            SequenceName::W => Some("A003603"),
            SequenceName::WythoffArray => Some("A035513"),
            SequenceName::Fibonacci => None,
        }
    }

    pub fn from_oeis_id(id: &str) -> Option<SequenceName> {
        Self::ALL.into_iter().find(|s| s.oeis_id() == Some(id))
    }

    /// Term at `index` in the `seq` numbering.
    pub fn term(self, index: u64) -> Result<u64> {
        match self {
            SequenceName::Fib => fib_map(index).map(u64::from),
            SequenceName::Odfib => odfib(index),
            SequenceName::Lw => lower_wythoff(index),
            SequenceName::Uw => upper_wythoff(index),
            SequenceName::Fo => fib_odd(index),
            SequenceName::Fe => fib_even(index),
            SequenceName::Fibonacci => fibonacci(index),
            SequenceName::W => w_of(index),
            SequenceName::WythoffArray => antidiagonal_term(index),
        }
    }

    /// Term at `index` in the `export` numbering.
    pub fn export_term(self, index: u64) -> Result<u64> {
        let shift = self.export_offset() as i64 - self.offset() as i64;
        let native = if shift >= 0 {
            index.checked_sub(shift as u64)
        } else {
            index.checked_add(shift.unsigned_abs())
        };
        match native {
            Some(i) if i >= self.offset() => self.term(i),
            _ => Err(wythoff_core::Error::Domain(
                "index below the sequence offset",
            )),
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| format!("unknown sequence {s:?}"))
    }
}

/// Term `index >= 1` of the array read by antidiagonals, each antidiagonal
/// taken from its top-right end: 1; 2, 4; 3, 7, 6; ...
pub fn antidiagonal_term(index: u64) -> Result<u64> {
    if index == 0 {
        return Err(wythoff_core::Error::Domain(
            "antidiagonal reading starts at 1",
        ));
    }
    // smallest d with d (d + 1) / 2 >= index
    let tri = |d: u128| d * (d + 1) / 2;
    let target = u128::from(index);
    let mut d = ((2.0 * index as f64).sqrt() as u128).max(1);
    while tri(d) < target {
        d += 1;
    }
    while d > 1 && tri(d - 1) >= target {
        d -= 1;
    }
    // 1-based position inside the antidiagonal
    let j = (target - tri(d - 1)) as u64;
    let d = d as u64;
    wythoff_cell(j - 1, d - j + 1)
}
