#![no_main]

use libfuzzer_sys::fuzz_target;
use wythoff_cli::bfile::OeisFixture;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(fixture) = OeisFixture::parse(text) {
        assert_eq!(OeisFixture::parse(&fixture.to_text()), Ok(fixture));
    }
});
