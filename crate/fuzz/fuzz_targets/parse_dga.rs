#![no_main]
use libfuzzer_sys::fuzz_target;

use lch_core::ncalg::text::{parse, serialize};

fuzz_target!(|text: &str| {
    if let Ok(dga) = parse(text) {
        let out = serialize(&dga);
        let again = parse(&out).expect("serialized DGAs parse");
        assert_eq!(serialize(&again), out);
    }
});
