//! Elementary tame automorphisms and algebraic stabilization.

use super::dga::{Action, ChordGenerator, Dga, Homogeneity};
use super::element::Element;
use super::AlgebraError;

/// Conjugates the differential by the elementary automorphism
/// `gen ↦ gen + u` (all other generators fixed).
///
/// `u` must not mention `gen` and must be zero or homogeneous of grading
/// `|gen|`.
pub fn apply_tame_automorphism(dga: &Dga, gen: usize, u: &Element) -> Result<Dga, AlgebraError> {
    if gen >= dga.len() {
        return Err(AlgebraError::UnknownGenerator(format!("#{gen}")));
    }
    if u.char() != dga.char() {
        return Err(AlgebraError::SignatureMismatch {
            left: dga.char(),
            right: u.char(),
        });
    }
    let name = dga.generators()[gen].name.clone();
    if u.mentions(gen as u32) {
        return Err(AlgebraError::InvalidMove(format!(
            "replacement for {name} mentions {name}"
        )));
    }
    if let Some(m) = u.max_letter() {
        if m as usize >= dga.len() {
            return Err(AlgebraError::UnknownGenerator(format!("#{m}")));
        }
    }
    match dga.homogeneity(u) {
        Homogeneity::Zero => return Ok(dga.clone()),
        Homogeneity::Mixed => {
            return Err(AlgebraError::InvalidMove(format!(
                "replacement for {name} is not homogeneous"
            )))
        }
        Homogeneity::Homogeneous(d) if d != dga.generators()[gen].grading => {
            return Err(AlgebraError::InvalidMove(format!(
                "replacement for {name} has grading {d}, expected {}",
                dga.generators()[gen].grading
            )))
        }
        Homogeneity::Homogeneous(_) => {}
    }

    let char = dga.char();
    let forward = |g: u32| {
        let x = Element::generator(char, g);
        if g as usize == gen {
            &x + u
        } else {
            x
        }
    };
    // ∂' = φ ∂ φ⁻¹ with φ⁻¹(gen) = gen - u
    let diff = (0..dga.len())
        .map(|g| {
            let pre = if g == gen {
                dga.diff(g) - &dga.differentiate(u)
            } else {
                dga.diff(g).clone()
            };
            pre.substitute(&forward)
        })
        .collect();
    Ok(dga.with_diff(diff))
}

/// Adds two generators `e₁` (grading `j`) and `e₂` (grading `j - 1`) with
/// `∂e₁ = e₂`, `∂e₂ = 0`.
///
/// Fresh names are `e<N>` for the smallest unused suffixes; actions are
/// placed above every existing action.
pub fn stabilize(dga: &Dga, j: i64) -> Dga {
    let char = dga.char();
    let (mut gens, rot, _, mut diff) = dga.clone().into_parts();
    let top = gens
        .iter()
        .map(|g| g.action)
        .max()
        .unwrap_or_else(|| Action::from_integer(0));
    let mut fresh = Vec::new();
    let mut k = 1;
    while fresh.len() < 2 {
        let name = format!("e{k}");
        if !gens.iter().any(|g| g.name == name) {
            fresh.push(name);
        }
        k += 1;
    }
    let n = gens.len() as u32;
    gens.push(ChordGenerator::new(
        fresh[0].clone(),
        j,
        top + Action::from_integer(2),
    ));
    gens.push(ChordGenerator::new(
        fresh[1].clone(),
        j - 1,
        top + Action::from_integer(1),
    ));
    diff.push(Element::generator(char, n + 1));
    diff.push(Element::zero(char));
    Dga::new(gens, rot, char, diff).expect("stabilization keeps invariants")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::element::Word;

    fn unknot() -> Dga {
        let mut d = Element::one(0);
        d.add_monomial(Word::empty(), 1, 1);
        Dga::new(
            vec![ChordGenerator::new("a", 1, Action::from_integer(2))],
            0,
            0,
            vec![d],
        )
        .unwrap()
    }

    #[test]
    fn zero_replacement_is_identity() {
        let dga = unknot();
        assert_eq!(apply_tame_automorphism(&dga, 0, &Element::zero(0)).unwrap(), dga);
    }

    #[test]
    fn self_referencing_move_rejected() {
        let dga = unknot();
        let u = Element::monomial(0, 1, 1, Word::letter(0));
        assert!(matches!(
            apply_tame_automorphism(&dga, 0, &u),
            Err(AlgebraError::InvalidMove(_))
        ));
    }

    #[test]
    fn inhomogeneous_move_rejected() {
        let gens = vec![
            ChordGenerator::new("a", 0, Action::from_integer(3)),
            ChordGenerator::new("b", 0, Action::from_integer(2)),
            ChordGenerator::new("c", 1, Action::from_integer(1)),
        ];
        let dga = Dga::new(gens, 0, 0, vec![Element::zero(0); 3]).unwrap();
        let u = &Element::generator(0, 1) + &Element::generator(0, 2);
        assert!(apply_tame_automorphism(&dga, 0, &u).is_err());
        let ok = Element::generator(0, 1);
        assert!(apply_tame_automorphism(&dga, 0, &ok).is_ok());
    }

    #[test]
    fn stabilizing_empty_dga() {
        let s = stabilize(&Dga::empty(0), 5);
        assert_eq!(s.len(), 2);
        assert_eq!(s.generators()[0].grading, 5);
        assert_eq!(s.generators()[1].grading, 4);
        assert_eq!(s.diff(0), &Element::generator(0, 1));
        assert!(s.diff(1).is_zero());
        assert!(s.check_d_squared().passed());
    }

    #[test]
    fn stabilized_names_avoid_collisions() {
        let once = stabilize(&Dga::empty(2), 3);
        let twice = stabilize(&once, 7);
        let names: Vec<_> = twice.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["e1", "e2", "e3", "e4"]);
    }
}
