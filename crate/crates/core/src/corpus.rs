//! The bundled fronts, plus a seed-deterministic family of random plats.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{parse_plat, random_plat, PlatWord};

pub struct NamedPlat {
    pub name: &'static str,
    pub text: &'static str,
}

impl NamedPlat {
    pub fn plat(&self) -> PlatWord {
        parse_plat(self.text).expect("bundled plats parse")
    }
}

pub const NAMED: [NamedPlat; 7] = [
    NamedPlat {
        name: "unknot",
        text: include_str!("../../../corpus/unknot.plat"),
    },
    NamedPlat {
        name: "trefoil",
        text: include_str!("../../../corpus/trefoil.plat"),
    },
    NamedPlat {
        name: "chekanov1",
        text: include_str!("../../../corpus/chekanov1.plat"),
    },
    NamedPlat {
        name: "chekanov2",
        text: include_str!("../../../corpus/chekanov2.plat"),
    },
    NamedPlat {
        name: "unknot_stab",
        text: include_str!("../../../corpus/unknot_stab.plat"),
    },
    NamedPlat {
        name: "trefoil_stab",
        text: include_str!("../../../corpus/trefoil_stab.plat"),
    },
    NamedPlat {
        name: "chekanov1_stab",
        text: include_str!("../../../corpus/chekanov1_stab.plat"),
    },
];

pub fn named(name: &str) -> Option<&'static NamedPlat> {
    NAMED.iter().find(|p| p.name == name)
}

/// Seeds of the random part of the corpus.
pub const RANDOM_SEEDS: std::ops::Range<u64> = 0..100;
pub const RANDOM_MAX_CROSSINGS: usize = 4;
pub const RANDOM_MAX_STRANDS: usize = 6;

pub fn random_entry(seed: u64) -> PlatWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_plat(&mut rng, RANDOM_MAX_CROSSINGS, RANDOM_MAX_STRANDS)
}

/// Named plats first, then `random-<seed>` for every seed.
pub fn full() -> Vec<(String, PlatWord)> {
    let mut out: Vec<(String, PlatWord)> = NAMED.iter().map(|p| (p.name.to_string(), p.plat())).collect();
    out.extend(RANDOM_SEEDS.map(|s| (format!("random-{s}"), random_entry(s))));
    out
}
