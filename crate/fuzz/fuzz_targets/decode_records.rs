#![no_main]

use libfuzzer_sys::fuzz_target;
use weyldeg::records::{CorootRecord, GroupRecord, StarRecord, WitnessRecord};

fuzz_target!(|data: &[u8]| {
    let Ok(line) = std::str::from_utf8(data) else { return };
    // Each decoder must reject or accept without panicking; accepted records
    // re-encode to something that decodes to the same value.
    if let Ok(g) = GroupRecord::decode(line) {
        assert_eq!(GroupRecord::decode(&GroupRecord::new(&g).to_line()).unwrap(), g);
    }
    if let Ok(w) = WitnessRecord::decode(line) {
        assert_eq!(WitnessRecord::decode(&WitnessRecord::new(&w).to_line()).unwrap(), w);
    }
    if let Ok(s) = StarRecord::decode(line) {
        assert_eq!(StarRecord::decode(&StarRecord::new(&s).to_line()).unwrap(), s);
    }
    let _ = CorootRecord::decode(line);
});
