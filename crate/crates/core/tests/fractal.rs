use wythoff_core::fractal::{first_occurrence, w_of, w_of_bruteforce, w_prefix, FractalPrefix};
use wythoff_core::wythoff::wythoff_cell;
use wythoff_core::zeckendorf::FIB;

#[test]
fn parse_agrees_with_array_scan() {
    for n in 1..=10_000u64 {
        assert_eq!(w_of(n), w_of_bruteforce(n), "n = {n}");
    }
}

#[test]
fn excision_leaves_a_prefix() {
    let long = w_prefix(FIB[21] as usize).unwrap();
    for (k, &f) in FIB.iter().enumerate().take(21).skip(5) {
        let p = w_prefix(f as usize).unwrap();
        let once = p.excise_first_occurrences();
        let distinct = p.terms().iter().copied().max().unwrap() as usize;
        assert_eq!(once.len(), p.len() - distinct);
        assert!(once.is_prefix_of(&long), "k = {k}");
        let twice = once.excise_first_occurrences();
        assert!(twice.is_prefix_of(&long), "k = {k}");
    }
}

#[test]
fn prefix_invariant() {
    let p = w_prefix(50_000).unwrap();
    assert_eq!(p.get(1), Some(1));
    let mut max = 0;
    for &v in p.terms() {
        assert!(v <= max + 1, "new value {v} skips ahead of {max}");
        max = max.max(v);
    }
}

#[test]
fn first_occurrence_is_row_head() {
    let p = w_prefix(3_000).unwrap();
    for v in 1..=1000u64 {
        let pos = first_occurrence(v).unwrap();
        assert_eq!(pos, wythoff_cell(v - 1, 1).unwrap());
        let pos = pos as usize;
        assert_eq!(p.get(pos), Some(v));
        assert!(!p.terms()[..pos - 1].contains(&v));
    }
}

#[test]
fn foreign_prefix_is_detected() {
    let long = w_prefix(100).unwrap();
    let mut terms = w_prefix(30).unwrap().into_terms();
    terms[17] += 1;
    assert!(!FractalPrefix::from_terms(terms).is_prefix_of(&long));
}
