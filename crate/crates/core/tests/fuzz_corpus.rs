//! Replays the checked-in fuzz seeds through the same entry points and
//! assertions as the fuzz targets, so they run under plain `cargo test`.

use std::fs;
use std::path::PathBuf;

use weyldeg::cli::parse;
use weyldeg::dimension::DominantWeight;
use weyldeg::records::{CorootRecord, GroupRecord, StarRecord, WitnessRecord};
use weyldeg::rootdata::{build_datum, parse_types};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .filter_map(|e| fs::read(e.unwrap().path()).ok())
        .filter_map(|b| String::from_utf8(b).ok())
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn parse_type_seeds() {
    let mut accepted = 0;
    for s in seeds("parse_type") {
        if let Ok(types) = parse_types(&s) {
            accepted += 1;
            if types.iter().map(|t| t.rank()).sum::<usize>() <= 16 {
                assert_eq!(build_datum(&types).unwrap().types(), types);
            }
        }
    }
    assert!(accepted >= 4);
}

#[test]
fn parse_weight_seeds() {
    for s in seeds("parse_weight") {
        if let Ok(w) = DominantWeight::parse(&s) {
            assert_eq!(DominantWeight::parse(&w.to_string()).unwrap(), w);
        }
    }
}

#[test]
fn decode_records_seeds() {
    for line in seeds("decode_records") {
        if let Ok(g) = GroupRecord::decode(&line) {
            assert_eq!(GroupRecord::decode(&GroupRecord::new(&g).to_line()).unwrap(), g);
        }
        if let Ok(w) = WitnessRecord::decode(&line) {
            assert_eq!(WitnessRecord::decode(&WitnessRecord::new(&w).to_line()).unwrap(), w);
        }
        if let Ok(s) = StarRecord::decode(&line) {
            assert_eq!(StarRecord::decode(&StarRecord::new(&s).to_line()).unwrap(), s);
        }
        let _ = CorootRecord::decode(&line);
    }
}

#[test]
fn cli_args_seeds() {
    let mut ok = 0;
    for s in seeds("cli_args") {
        if parse(std::iter::once("weyldeg").chain(s.split('\0'))).is_ok() {
            ok += 1;
        }
    }
    assert!(ok >= 5);
}

mod random_inputs {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]
        #[test]
        fn parsers_never_panic(s in "[A-Ga-g0-9+, {}\\[\\]\":a-z-]{0,40}") {
            let _ = parse_types(&s);
            let _ = DominantWeight::parse(&s);
            let _ = GroupRecord::decode(&s);
            let _ = WitnessRecord::decode(&s);
            let _ = StarRecord::decode(&s);
            let _ = CorootRecord::decode(&s);
            let _ = parse(std::iter::once("weyldeg").chain(s.split(' ')));
        }

        #[test]
        fn star_records_never_panic(l in 0u64..400, c in 0u64..100_000, a in 0u64..5_000, b in 0u64..5_000) {
            let line = format!(r#"{{"l":{l},"c":"{c}","a":"{a}","b":"{b}"}}"#);
            let _ = StarRecord::decode(&line);
        }
    }
}
