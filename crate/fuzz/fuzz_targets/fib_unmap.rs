#![no_main]

use libfuzzer_sys::fuzz_target;
use wythoff_core::fibbinary::{fib_map, fib_unmap, is_fibbinary};
use wythoff_core::Error;

fuzz_target!(|m: u64| {
    match fib_unmap(m) {
        Ok(n) => {
            assert!(is_fibbinary(m));
            assert_eq!(fib_map(n).map(u64::from), Ok(m));
        }
        Err(Error::NotFibbinary(v)) => {
            assert_eq!(v, m);
            assert!(!is_fibbinary(m));
        }
        Err(e) => panic!("unexpected error for {m}: {e}"),
    }
});
