#![no_main]

use libfuzzer_sys::fuzz_target;
use wythoff_core::zeckendorf::{zeck_encode, ZeckWord};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = text.parse::<ZeckWord>() else {
        return;
    };
    // an accepted word prints back to the same text
    assert_eq!(word.to_string(), text);
    assert_eq!(word.bits() & (word.bits() >> 1), 0);
    // and, when it fits, encoding its value gives the word again
    if let Ok(n) = word.value() {
        assert_eq!(zeck_encode(n), word);
    }
});
