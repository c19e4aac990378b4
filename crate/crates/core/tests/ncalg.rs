mod common;

use common::named_dga;
use lch_core::ncalg::text::{format_element, format_element_with, parse, parse_element, serialize};
use lch_core::ncalg::{apply_tame_automorphism, stabilize, AlgebraError, Dga, Element, Word};
use proptest::prelude::*;

fn gen(char: u32, g: u32) -> Element {
    Element::generator(char, g)
}

fn word(letters: &[u32]) -> Word {
    Word(letters.to_vec())
}

#[test]
fn sums() {
    let x = &gen(0, 0) * &gen(0, 1);
    assert_eq!(&x + &Element::zero(0), x);
    assert!((&x + &x.neg()).is_zero());
    // over F_2: (1 + t) + (t + b1) = 1 + b1
    let mut a = Element::one(2);
    a.add_monomial(Word::empty(), 1, 1);
    let mut b = gen(2, 0);
    b.add_monomial(Word::empty(), 1, 1);
    let mut want = Element::one(2);
    want.add_monomial(word(&[0]), 1, 0);
    assert_eq!(&a + &b, want);
    assert_eq!(
        Element::zero(2).try_add(&Element::zero(3)),
        Err(AlgebraError::SignatureMismatch { left: 2, right: 3 })
    );
}

#[test]
fn products() {
    let (a, b) = (gen(0, 0), gen(0, 1));
    assert_eq!(&Element::one(0) * &a, a);
    assert_ne!(&a * &b, &b * &a);
    let ta = Element::monomial(0, 1, 1, word(&[0]));
    let tb = Element::monomial(0, 1, -1, word(&[1]));
    assert_eq!(&ta * &tb, Element::monomial(0, 1, 0, word(&[0, 1])));
    assert!(Element::one(0).try_mul(&Element::one(5)).is_err());
}

#[test]
fn derivation_examples() {
    let unknot = named_dga("unknot", 0);
    assert!(unknot.differentiate(&Element::one(0)).is_zero());
    // ∂(a·a) = (1 + t)a − a(1 + t) = 0
    assert!(unknot.differentiate(&(&gen(0, 0) * &gen(0, 0))).is_zero());

    let trefoil = named_dga("trefoil", 0);
    let a1 = trefoil.index_of("a1").unwrap() as u32;
    let b2 = trefoil.index_of("b2").unwrap() as u32;
    let x = &gen(0, a1) * &gen(0, b2);
    assert_eq!(trefoil.differentiate(&x), trefoil.diff(a1 as usize) * &gen(0, b2));
    assert!(trefoil.try_differentiate(&gen(0, 99)).is_err());
}

#[test]
fn d_squared_examples() {
    assert!(named_dga("unknot", 0).check_d_squared().passed());
    assert!(named_dga("trefoil", 0).check_d_squared().passed());

    // flipping one disk's sign in ∂a2 of chekanov1 leaves a residue on a2
    let dga = named_dga("chekanov1", 0);
    let text = serialize(&dga).replace(" - t·b4·b5·b7 ", " + t·b4·b5·b7 ");
    let bad = parse(&text).unwrap();
    let r = bad.check_d_squared();
    assert_eq!(r.failures.len(), 1);
    let (g, residue) = &r.failures[0];
    assert_eq!(bad.name(*g as u32), "a2");
    assert_eq!(format_element(&bad, residue), "2·t·b1·b5·b7 + 2·t·b3·b5·b7 + 2·t·b3·b2·b1·b5·b7");
}

#[test]
fn tame_automorphism_examples() {
    let trefoil = named_dga("trefoil", 0);
    assert_eq!(apply_tame_automorphism(&trefoil, 0, &Element::zero(0)).unwrap(), trefoil);

    let unknot = named_dga("unknot", 0);
    let ta = Element::monomial(0, 1, 1, word(&[0]));
    assert!(matches!(apply_tame_automorphism(&unknot, 0, &ta), Err(AlgebraError::InvalidMove(_))));

    // b1 ↦ b1 + a1 mixes degrees 0 and 1
    let b1 = trefoil.index_of("b1").unwrap();
    let a1 = trefoil.index_of("a1").unwrap() as u32;
    let mixed = apply_tame_automorphism(&trefoil, b1, &gen(0, a1));
    assert!(matches!(mixed, Err(AlgebraError::InvalidMove(_))));

    let b3 = trefoil.index_of("b3").unwrap() as u32;
    let moved = apply_tame_automorphism(&trefoil, b1, &(&gen(0, b3) * &gen(0, b3))).unwrap();
    assert!(moved.check_d_squared().passed());
    assert!(moved.degree_violations().is_empty());
}

#[test]
fn stabilization_examples() {
    let s = stabilize(&Dga::empty(0), 5);
    assert_eq!(s.len(), 2);
    assert_eq!(s.generators()[0].grading, 5);
    assert_eq!(s.generators()[1].grading, 4);
    assert_eq!(s.diff(0), &gen(0, 1));
    assert!(s.diff(1).is_zero());
    assert!(stabilize(&named_dga("trefoil", 0), 3).check_d_squared().passed());
}

#[test]
fn dga_text_round_trip_on_the_corpus() {
    for p in &lch_core::corpus::NAMED {
        for char in [0, 2, 3] {
            let dga = named_dga(p.name, char);
            let text = serialize(&dga);
            let back = parse(&text).unwrap();
            assert_eq!(back, dga, "{}", p.name);
            assert_eq!(serialize(&back), text);
        }
    }
}

fn element(char: u32, letters: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec(
        (prop::collection::vec(0..letters, 0..4), -3i64..=3, -2i32..=2),
        0..5,
    )
    .prop_map(move |terms| {
        let mut x = Element::zero(char);
        for (w, c, k) in terms {
            x.add_monomial(Word(w), c, k);
        }
        x
    })
}

fn char_and_elements() -> impl Strategy<Value = (Element, Element, Element)> {
    prop_oneof![Just(0u32), Just(2u32), Just(3u32)]
        .prop_flat_map(|c| (element(c, 4), element(c, 4), element(c, 4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms((x, y, z) in char_and_elements()) {
        let c = x.char();
        let one = Element::one(c);
        let zero = Element::zero(c);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&one * &x, x.clone());
        prop_assert_eq!(&x * &one, x.clone());
        prop_assert_eq!(&x + &zero, x.clone());
        prop_assert!((&x + &x.neg()).is_zero());
        prop_assert!((&x * &zero).is_zero());
    }

    #[test]
    fn canonical_form_is_idempotent((x, y, _) in char_and_elements()) {
        let s = &x * &y;
        prop_assert_eq!(s.canonicalize(), s.clone());
        prop_assert_eq!(s.canonicalize().canonicalize(), s.canonicalize());
        prop_assert!(s.terms().all(|(_, c)| !c.is_zero()));
        let words: Vec<&Word> = s.terms().map(|(w, _)| w).collect();
        prop_assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn element_text_round_trip((x, _, _) in char_and_elements()) {
        let names = ["p", "q", "r", "s"];
        let text = format_element_with(&x, |g| names[g as usize].to_string());
        let lookup = |s: &str| names.iter().position(|n| *n == s).map(|i| i as u32);
        let back = parse_element(&text, x.char(), &lookup, 1).unwrap();
        prop_assert_eq!(back, x);
    }
}

/// A homogeneous element: signed permutations of one multiset of letters,
/// each with its own coefficient.
fn homogeneous(dga: &Dga) -> impl Strategy<Value = Element> {
    let n = dga.len() as u32;
    (prop::collection::vec(0..n, 0..4), prop::collection::vec((any::<prop::sample::Index>(), -2i64..=2), 1..4))
        .prop_map(|(letters, perms)| {
            let mut x = Element::zero(0);
            for (idx, c) in perms {
                let mut w = letters.clone();
                if !w.is_empty() {
                    let k = idx.index(w.len());
                    w.rotate_left(k);
                }
                x.add_monomial(Word(w), c, 0);
            }
            x
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graded_leibniz(
        (v, w) in homogeneous(&named_dga("chekanov1", 0)).prop_flat_map(|v| (Just(v), homogeneous(&named_dga("chekanov1", 0))))
    ) {
        let dga = named_dga("chekanov1", 0);
        let sign = match dga.homogeneity(&v) {
            lch_core::ncalg::Homogeneity::Homogeneous(d) if d.rem_euclid(2) == 1 => -1,
            _ => 1,
        };
        let lhs = dga.differentiate(&(&v * &w));
        let mut rhs = &dga.differentiate(&v) * &w;
        let second = &v * &dga.differentiate(&w);
        rhs = if sign < 0 { &rhs - &second } else { &rhs + &second };
        prop_assert_eq!(lhs, rhs);
    }
}
