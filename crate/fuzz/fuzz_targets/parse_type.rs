#![no_main]

use libfuzzer_sys::fuzz_target;
use weyldeg::rootdata::{build_datum, parse_types};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(types) = parse_types(s) {
        // Keep building cheap: only small data get their roots generated.
        if types.iter().map(|t| t.rank()).sum::<usize>() <= 16 {
            let datum = build_datum(&types).expect("parsed types build");
            assert_eq!(datum.types(), types);
        }
    }
});
