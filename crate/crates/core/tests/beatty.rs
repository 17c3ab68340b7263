use num_bigint::BigUint;
use wythoff_core::beatty::{fib_even, fib_odd, fibonacci_subset, lower_wythoff, upper_wythoff};
use wythoff_core::zeckendorf::{zeck_length, FIB};

const FRAC_BITS: u32 = 96;

/// floor(phi * 2^96) from the integer square root of 5 * 2^192.
fn phi_fixed() -> BigUint {
    let sqrt5 = (BigUint::from(5u32) << (2 * FRAC_BITS)).sqrt();
    ((BigUint::from(1u32) << FRAC_BITS) + sqrt5) >> 1
}

fn floor_n_phi(phi: &BigUint, n: u64) -> u64 {
    let v: BigUint = (phi * n) >> FRAC_BITS;
    u64::try_from(v).unwrap()
}

#[test]
fn lower_wythoff_matches_high_precision_oracle() {
    let phi = phi_fixed();
    for n in 1..=100_000u64 {
        assert_eq!(lower_wythoff(n), Ok(floor_n_phi(&phi, n)), "n = {n}");
    }
}

#[test]
fn oracle_agrees_at_large_arguments() {
    let phi = phi_fixed();
    for n in (1..=1_000u64).map(|i| i * 9_999_991_000_003) {
        assert_eq!(lower_wythoff(n), Ok(floor_n_phi(&phi, n)), "n = {n}");
    }
}

#[test]
fn lower_and_upper_partition_the_integers() {
    const N: u64 = 100_000;
    let mut hits = vec![0u8; N as usize + 1];
    for n in 1.. {
        let lw = lower_wythoff(n).unwrap();
        if lw > N {
            break;
        }
        hits[lw as usize] += 1;
        let uw = upper_wythoff(n).unwrap();
        if uw <= N {
            hits[uw as usize] += 1;
        }
    }
    assert!(hits[1..].iter().all(|&h| h == 1));
}

#[test]
fn cross_identities() {
    for n in 1..=100_000u64 {
        let lw = lower_wythoff(n).unwrap();
        let uw = upper_wythoff(n).unwrap();
        assert_eq!(fib_even(n - 1), Ok(lw - 1));
        assert_eq!(fib_odd(n - 1), Ok(uw - 1));
        assert_eq!(uw, lw + n);
    }
}

#[test]
fn subsets_tile_the_integers() {
    const K: u64 = 30;
    let mut next = 1u64;
    for k in 1..=K {
        let subset = fibonacci_subset(k).unwrap();
        assert_eq!(subset.start, next);
        assert_eq!(subset.end - subset.start, FIB[k as usize]);
        next = subset.end;
    }
    assert_eq!(next - 1, FIB[K as usize + 2] - 1);
}

#[test]
fn subset_members_have_matching_length() {
    for k in 1..=20u64 {
        for n in fibonacci_subset(k).unwrap() {
            assert_eq!(zeck_length(n), Ok(k as u32));
        }
    }
}
