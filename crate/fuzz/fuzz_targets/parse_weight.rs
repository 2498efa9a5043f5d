#![no_main]

use libfuzzer_sys::fuzz_target;
use weyldeg::dimension::DominantWeight;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = DominantWeight::parse(s) {
        // Display then parse is the identity.
        let again = DominantWeight::parse(&w.to_string()).expect("round trip");
        assert_eq!(again, w);
    }
});
