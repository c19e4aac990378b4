#![no_main]
use libfuzzer_sys::fuzz_target;

use lch_core::diagram::{parse_plat, resolve_plat};
use lch_core::disks::{differential, Spin};

fuzz_target!(|text: &str| {
    let Ok(plat) = parse_plat(text) else { return };
    let again = parse_plat(&plat.serialize()).expect("serialized plats parse");
    assert_eq!(again, plat);

    // keep the disk search small
    if plat.len() > 24 || plat.crossing_count() > 8 {
        return;
    }
    let Ok(d) = resolve_plat(&plat) else { return };
    let dga = differential(&d, 0, Spin::Bounding).expect("differential of a resolved plat");
    assert!(dga.check_d_squared().passed());
    assert!(dga.degree_violations().is_empty());
});
