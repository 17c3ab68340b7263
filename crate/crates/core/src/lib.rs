//! Exact-integer constructions around the Wythoff array.
//!
//! The crate covers the Zeckendorf codec, the golden-ratio Beatty sequences
//! (computed without floating point), the fibbinary numbers, three
//! independent constructions of the Wythoff array together with its image
//! under the Zeckendorf-to-binary bijection, the sparse fibbinary, Wythoff
//! and fractal tables, and the fractal sequence of the array.
//!
//! All values are `u64`. Arithmetic is checked throughout; overflow is an
//! [`Error`], never a wrapped result.
//!
//! ```
//! use wythoff_core::{fibbinary, wythoff};
//!
//! // The image of the Wythoff array cell (n, k) under the bijection is
//! // 2^(k-1) * odfib(n).
//! let cell = wythoff::wythoff_cell(6, 6).unwrap();
//! assert_eq!(fibbinary::fib_map(cell).unwrap().value(), 37 << 5);
//! ```

pub mod beatty;
mod error;
pub mod fibbinary;
pub mod fractal;
pub mod tables;
pub mod wythoff;
pub mod zeckendorf;

pub use error::{Error, Result};
pub use fibbinary::Fibbinary;
pub use fractal::FractalPrefix;
pub use tables::{SparseTable, TableKind};
pub use wythoff::{ArrayWindow, FibShape};
pub use zeckendorf::ZeckWord;
