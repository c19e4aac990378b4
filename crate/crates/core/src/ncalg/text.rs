//! Line-oriented text form of a DGA.
//!
//! ```text
//! char 0
//! rot 0
//! gen a deg 1 action 2/1
//! d a = 1 + t
//! ```
//!
//! A term is `[c·][t^k·]w₁·w₂…`, with `t` for `t^1` and `1` for the empty
//! word when nothing else is printed. Terms are joined by ` + ` / ` - `.

use std::fmt::Write as _;

use num_rational::Ratio;

use super::dga::{ChordGenerator, Dga};
use super::element::{Element, Word};
use super::AlgebraError;

pub const DOT: char = '·';

pub fn format_element(dga: &Dga, x: &Element) -> String {
    format_element_with(x, |g| dga.name(g).to_string())
}

pub fn format_element_with(x: &Element, name: impl Fn(u32) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, k, c)) in x.monomials().enumerate() {
        let (neg, mag) = if c < 0 { (true, -c) } else { (false, c) };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if mag != 1 {
            factors.push(mag.to_string());
        }
        match k {
            0 => {}
            1 => factors.push("t".to_string()),
            _ => factors.push(format!("t^{k}")),
        }
        factors.extend(w.letters().iter().map(|&g| name(g)));
        if factors.is_empty() {
            factors.push("1".to_string());
        }
        let sep = DOT.to_string();
        out.push_str(&factors.join(&sep));
    }
    out
}

pub fn serialize(dga: &Dga) -> String {
    let mut out = String::new();
    writeln!(out, "char {}", dga.char()).unwrap();
    writeln!(out, "rot {}", dga.rot()).unwrap();
    for g in dga.generators() {
        writeln!(
            out,
            "gen {} deg {} action {}/{}",
            g.name,
            g.grading,
            g.action.numer(),
            g.action.denom()
        )
        .unwrap();
    }
    for (i, g) in dga.generators().iter().enumerate() {
        writeln!(out, "d {} = {}", g.name, format_element(dga, dga.diff(i))).unwrap();
    }
    out
}

fn err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse {
        line,
        msg: msg.into(),
    }
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "t"
}

/// Parses an element; `lookup` resolves generator names.
pub fn parse_element(
    text: &str,
    char: u32,
    lookup: &dyn Fn(&str) -> Option<u32>,
    line: usize,
) -> Result<Element, AlgebraError> {
    let text = text.trim();
    let mut out = Element::zero(char);
    if text == "0" {
        return Ok(out);
    }
    if text.is_empty() {
        return Err(err(line, "empty element"));
    }
    // split into signed terms
    let mut rest = text;
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    }
    loop {
        let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
            (None, None) => (rest, None),
            (Some(p), None) => (&rest[..p], Some((1, &rest[p + 3..]))),
            (None, Some(m)) => (&rest[..m], Some((-1, &rest[m + 3..]))),
            (Some(p), Some(m)) if p < m => (&rest[..p], Some((1, &rest[p + 3..]))),
            (Some(_), Some(m)) => (&rest[..m], Some((-1, &rest[m + 3..]))),
        };
        let (c, k, w) = parse_term(term.trim(), lookup, line)?;
        let c = c
            .checked_mul(sign)
            .ok_or_else(|| err(line, "coefficient overflow"))?;
        out.add_monomial(w, c, k);
        match next {
            None => break,
            Some((s, r)) => {
                sign = s;
                rest = r;
            }
        }
    }
    Ok(out)
}

fn parse_term(
    term: &str,
    lookup: &dyn Fn(&str) -> Option<u32>,
    line: usize,
) -> Result<(i64, i32, Word), AlgebraError> {
    if term.is_empty() {
        return Err(err(line, "empty term"));
    }
    let mut coeff: Option<i64> = None;
    let mut texp: Option<i32> = None;
    let mut letters = Vec::new();
    let mut saw_one = false;
    for (pos, factor) in term.split(DOT).enumerate() {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(err(line, format!("empty factor in `{term}`")));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            if pos != 0 || coeff.is_some() {
                return Err(err(line, format!("misplaced scalar in `{term}`")));
            }
            let v: i64 = factor
                .parse()
                .map_err(|_| err(line, format!("bad scalar `{factor}`")))?;
            if v == 0 {
                return Err(err(line, "zero scalar"));
            }
            if v == 1 {
                saw_one = true;
            }
            coeff = Some(v);
        } else if factor == "t" || factor.starts_with("t^") {
            if texp.is_some() || !letters.is_empty() {
                return Err(err(line, format!("misplaced t in `{term}`")));
            }
            let k = if factor == "t" {
                1
            } else {
                factor[2..]
                    .parse()
                    .map_err(|_| err(line, format!("bad exponent `{factor}`")))?
            };
            texp = Some(k);
        } else if valid_name(factor) {
            let g = lookup(factor)
                .ok_or_else(|| err(line, format!("unknown generator `{factor}`")))?;
            letters.push(g);
        } else {
            return Err(err(line, format!("bad factor `{factor}`")));
        }
    }
    if saw_one && (texp.is_some() || !letters.is_empty()) {
        return Err(err(line, format!("explicit 1 in non-constant term `{term}`")));
    }
    Ok((coeff.unwrap_or(1), texp.unwrap_or(0), Word(letters)))
}

/// Parses the text written by [`serialize`].
pub fn parse(text: &str) -> Result<Dga, AlgebraError> {
    let mut char: Option<u32> = None;
    let mut rot: Option<i64> = None;
    let mut gens: Vec<ChordGenerator> = Vec::new();
    let mut diffs: Vec<(usize, usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let mut parts = l.split_whitespace();
        match parts.next() {
            Some("char") => {
                let v = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(line, "bad char line"))?;
                if parts.next().is_some() || char.is_some() {
                    return Err(err(line, "bad char line"));
                }
                char = Some(v);
            }
            Some("rot") => {
                let v = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| err(line, "bad rot line"))?;
                if parts.next().is_some() || rot.is_some() {
                    return Err(err(line, "bad rot line"));
                }
                rot = Some(v);
            }
            Some("gen") => {
                let fields: Vec<&str> = parts.collect();
                if fields.len() != 5 || fields[1] != "deg" || fields[3] != "action" {
                    return Err(err(line, "expected `gen <name> deg <int> action <p>/<q>`"));
                }
                if !valid_name(fields[0]) {
                    return Err(err(line, format!("bad generator name `{}`", fields[0])));
                }
                let deg: i64 = fields[2]
                    .parse()
                    .map_err(|_| err(line, "bad degree"))?;
                let (p, q) = fields[4]
                    .split_once('/')
                    .ok_or_else(|| err(line, "action must be p/q"))?;
                let p: i64 = p.parse().map_err(|_| err(line, "bad action"))?;
                let q: i64 = q.parse().map_err(|_| err(line, "bad action"))?;
                if q <= 0 {
                    return Err(err(line, "action denominator must be positive"));
                }
                gens.push(ChordGenerator::new(fields[0], deg, Ratio::new(p, q)));
            }
            Some("d") => {
                let rest = l[1..].trim_start();
                let (name, elem) = rest
                    .split_once('=')
                    .ok_or_else(|| err(line, "expected `d <name> = <element>`"))?;
                let name = name.trim();
                let g = gens
                    .iter()
                    .position(|x| x.name == name)
                    .ok_or_else(|| err(line, format!("unknown generator `{name}`")))?;
                if diffs.iter().any(|(h, _, _)| *h == g) {
                    return Err(err(line, format!("duplicate differential for `{name}`")));
                }
                diffs.push((g, line, elem.to_string()));
            }
            _ => return Err(err(line, format!("unrecognized line `{l}`"))),
        }
    }
    let char = char.unwrap_or(0);
    let rot = rot.unwrap_or(0);
    let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
    let lookup = |s: &str| names.iter().position(|n| n == s).map(|i| i as u32);
    let mut diff = vec![Element::zero(char); gens.len()];
    for (g, line, text) in diffs {
        diff[g] = parse_element(&text, char, &lookup, line)?;
    }
    Dga::new(gens, rot, char, diff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Dga {
        let gens = vec![
            ChordGenerator::new("a", 1, Ratio::new(5, 1)),
            ChordGenerator::new("b", 0, Ratio::new(3, 2)),
        ];
        let mut da = Element::one(0);
        da.add_monomial(Word::empty(), 1, 1);
        da.add_monomial(Word(vec![1, 1]), -2, -1);
        Dga::new(gens, 0, 0, vec![da, Element::zero(0)]).unwrap()
    }

    #[test]
    fn formats_terms() {
        let s = serialize(&sample());
        assert_eq!(
            s,
            "char 0\nrot 0\ngen a deg 1 action 5/1\ngen b deg 0 action 3/2\n\
             d a = 1 + t - 2·t^-1·b·b\nd b = 0\n"
        );
    }

    #[test]
    fn parse_inverts_serialize() {
        let dga = sample();
        assert_eq!(parse(&serialize(&dga)).unwrap(), dga);
    }

    #[test]
    fn leading_minus_and_errors() {
        let names = ["x"];
        let lookup = |s: &str| names.iter().position(|n| *n == s).map(|i| i as u32);
        let e = parse_element("-t·x + 3", 0, &lookup, 1).unwrap();
        assert_eq!(format_element_with(&e, |_| "x".into()), "3 - t·x");
        assert!(parse_element("y", 0, &lookup, 1).is_err());
        assert!(parse_element("1·x", 0, &lookup, 1).is_err());
        assert!(parse_element("x·t", 0, &lookup, 1).is_err());
        assert!(parse_element("", 0, &lookup, 1).is_err());
        assert!(parse("gen a deg x action 1/1\n").is_err());
        assert!(parse("d a = 1\n").is_err());
    }
}
