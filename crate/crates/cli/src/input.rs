//! Loading plats, DGAs and curves from files or the bundled corpus.

use lch_core::conormal::{parse_curve, PlaneCurve};
use lch_core::corpus;
use lch_core::diagram::{parse_plat, PlatWord};
use lch_core::ncalg::{text, Dga};

use crate::run::Failure;

pub enum Knot {
    Plat(PlatWord),
    Dga(Dga),
}

/// `corpus:<name>` reads a bundled entry, `-` reads standard input.
pub fn read(spec: &str) -> Result<String, Failure> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        if let Some(p) = corpus::named(name) {
            return Ok(p.text.to_string());
        }
        if let Some(seed) = name.strip_prefix("random-").and_then(|s| s.parse::<u64>().ok()) {
            if corpus::RANDOM_SEEDS.contains(&seed) {
                return Ok(corpus::random_entry(seed).serialize());
            }
        }
        return Err(Failure::input("cli::read_input", format!("no corpus entry `{name}`")));
    }
    let r = if spec == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(spec)
    };
    r.map_err(|e| Failure::input("cli::read_input", format!("{spec}: {e}")))
}

/// A DGA file starts with a `char`, `rot`, `gen` or `d` line; anything else
/// is read as a plat.
fn looks_like_dga(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        .is_some_and(|w| matches!(w, "char" | "rot" | "gen" | "d"))
}

pub fn knot(spec: &str) -> Result<Knot, Failure> {
    let text = read(spec)?;
    if looks_like_dga(&text) {
        text::parse(&text)
            .map(Knot::Dga)
            .map_err(|e| Failure::input("ncalg::parse", format!("{spec}: {e}")))
    } else {
        plat_text(spec, &text).map(Knot::Plat)
    }
}

pub fn plat(spec: &str) -> Result<PlatWord, Failure> {
    plat_text(spec, &read(spec)?)
}

fn plat_text(spec: &str, text: &str) -> Result<PlatWord, Failure> {
    parse_plat(text).map_err(|e| Failure::input("diagram::parse_plat", format!("{spec}: {e}")))
}

pub fn curve(spec: &str) -> Result<PlaneCurve, Failure> {
    parse_curve(&read(spec)?).map_err(|e| Failure::input("conormal::parse_curve", format!("{spec}: {e}")))
}
