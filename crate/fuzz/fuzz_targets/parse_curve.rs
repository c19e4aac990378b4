#![no_main]
use libfuzzer_sys::fuzz_target;

use lch_core::conormal::{conormal_front, parse_curve, reeb_chords_numeric};

fuzz_target!(|text: &str| {
    let Ok(curve) = parse_curve(text) else { return };
    if curve.len() > 4096 {
        return;
    }
    if let Ok(front) = conormal_front(&curve) {
        assert_eq!(front.points.len(), 2 * curve.len());
        if let Ok(chords) = reeb_chords_numeric(&front, 1e-6) {
            assert!(chords.iter().all(|c| c.action > 0.0));
        }
    }
});
