#![no_main]

use libfuzzer_sys::fuzz_target;
use wythoff_cli::bfile::{format_bfile, parse_bfile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(pairs) = parse_bfile(text) else {
        return;
    };
    // reformatting consecutive runs reproduces the same pairs
    if let Some(&(first, _)) = pairs.first() {
        let consecutive = pairs
            .iter()
            .enumerate()
            .all(|(i, &(index, _))| first.checked_add(i as u64) == Some(index));
        if consecutive {
            let values: Vec<u64> = pairs.iter().map(|&(_, v)| v).collect();
            assert_eq!(parse_bfile(&format_bfile(first, &values)), Ok(pairs));
        }
    }
});
