#![allow(dead_code)]

use lch_core::corpus;
use lch_core::diagram::{resolve_plat, LagrangianDiagram, PlatWord};
use lch_core::disks::{differential, Spin};
use lch_core::ncalg::{apply_tame_automorphism, stabilize, Dga, Element, Word};
use rand::Rng;

pub fn diagram(plat: &PlatWord) -> LagrangianDiagram {
    resolve_plat(plat).expect("corpus plats resolve")
}

pub fn named_dga(name: &str, char: u32) -> Dga {
    let plat = corpus::named(name).expect("named corpus entry").plat();
    differential(&diagram(&plat), char, Spin::Bounding).expect("differential")
}

/// Stabilization degrees that keep augmentation counts: `j` and `j − 1`
/// both nonzero mod `2|rot|`.
pub fn safe_stabilization_degrees(dga: &Dga) -> Vec<i64> {
    let m = 2 * dga.rot().abs();
    (-3..=4)
        .filter(|&j: &i64| {
            if m == 0 {
                j != 0 && j != 1
            } else {
                j.rem_euclid(m) != 0 && (j - 1).rem_euclid(m) != 0
            }
        })
        .collect()
}

/// A random homogeneous element of grading `|gen|` avoiding `gen`: up to
/// three monomials, words of length ≤ 2, `t`-powers fixing the grading.
pub fn random_replacement<R: Rng>(rng: &mut R, dga: &Dga, gen: usize) -> Element {
    let char = dga.char();
    let target = dga.generators()[gen].grading;
    let others: Vec<u32> = (0..dga.len() as u32).filter(|&g| g as usize != gen).collect();
    let tg = dga.t_grading();
    let mut u = Element::zero(char);
    let want = rng.gen_range(1..=3);
    let mut found = 0;
    for _ in 0..200 {
        if found == want {
            break;
        }
        let len = rng.gen_range(0..=2usize);
        if len > 0 && others.is_empty() {
            continue;
        }
        let w = Word((0..len).map(|_| others[rng.gen_range(0..others.len())]).collect());
        let gap = target - dga.word_grading(&w);
        let k = if tg == 0 {
            if gap != 0 {
                continue;
            }
            rng.gen_range(-1..=1)
        } else {
            if gap % tg != 0 {
                continue;
            }
            (gap / tg) as i32
        };
        let c = [1, -1, 2][rng.gen_range(0..3)];
        u.add_monomial(w, c, k);
        found += 1;
    }
    u
}

/// Applies `moves` random tame automorphisms and stabilizations in safe
/// degrees.
pub fn random_stable_tame<R: Rng>(rng: &mut R, dga: &Dga, moves: usize) -> Dga {
    let mut d = dga.clone();
    for _ in 0..moves {
        let degrees = safe_stabilization_degrees(&d);
        if rng.gen_bool(0.3) && !degrees.is_empty() {
            d = stabilize(&d, degrees[rng.gen_range(0..degrees.len())]);
        } else if !d.is_empty() {
            let gen = rng.gen_range(0..d.len());
            let u = random_replacement(rng, &d, gen);
            d = apply_tame_automorphism(&d, gen, &u).expect("valid tame move");
        }
    }
    d
}
