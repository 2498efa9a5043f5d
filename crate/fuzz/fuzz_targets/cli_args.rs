#![no_main]

use libfuzzer_sys::fuzz_target;
use weyldeg::cli::parse;

// Arguments are NUL-separated. Only parsing and validation run; nothing is
// computed.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let args = std::iter::once("weyldeg").chain(s.split('\0'));
    let _ = parse(args);
});
