//! The subcommands. Each returns its report text and exit code; errors
//! carry the module and operation they came from.

use std::fmt;
use std::fmt::Write as _;

use lch_core::conormal::{self, ConormalError};
use lch_core::corpus;
use lch_core::diagram::{elaborate_front, resolve, DiagramError, LagrangianDiagram, PlatWord};
use lch_core::disks::{
    assemble, brute_force_enumerate, enumerate_all, format_disk, AdmissibleDisk, DiskError, Spin, SIGN_TABLE,
};
use lch_core::invariants::{self, default_t_value, InvariantError, AUG_BUDGET};
use lch_core::ncalg::{text, Dga};

use crate::input::{self, Knot};
use crate::{Cli, Command};

#[derive(Debug)]
pub enum Kind {
    Validation,
    Input,
    Budget,
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    /// `module::operation`.
    pub origin: &'static str,
    pub msg: String,
}

impl Failure {
    pub fn input(origin: &'static str, msg: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Input,
            origin,
            msg: msg.into(),
        }
    }

    fn validation(origin: &'static str, msg: impl Into<String>) -> Self {
        Failure {
            kind: Kind::Validation,
            origin,
            msg: msg.into(),
        }
    }

    pub fn code(&self) -> u8 {
        match self.kind {
            Kind::Validation => 1,
            Kind::Input => 2,
            Kind::Budget => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.origin, self.msg)
    }
}

fn diagram_failure(origin: &'static str, e: DiagramError) -> Failure {
    match e {
        DiagramError::Parse { .. } | DiagramError::TooLarge(_) => Failure::input(origin, e.to_string()),
        _ => Failure::validation(origin, e.to_string()),
    }
}

fn disk_failure(origin: &'static str, e: DiskError) -> Failure {
    match e {
        DiskError::Budget { .. } => Failure {
            kind: Kind::Budget,
            origin,
            msg: e.to_string(),
        },
        DiskError::Algebra(_) => Failure::validation(origin, e.to_string()),
    }
}

fn invariant_failure(origin: &'static str, e: InvariantError) -> Failure {
    match e {
        InvariantError::Budget { .. } => Failure {
            kind: Kind::Budget,
            origin,
            msg: e.to_string(),
        },
        InvariantError::NotPrime(_) | InvariantError::NotAUnit { .. } | InvariantError::Characteristic { .. } => {
            Failure::input(origin, e.to_string())
        }
        InvariantError::NotAugmentation(_) | InvariantError::LinearizedDSquared => {
            Failure::validation(origin, e.to_string())
        }
    }
}

fn conormal_failure(origin: &'static str, e: ConormalError) -> Failure {
    match e {
        ConormalError::NotChordGeneric(_) => Failure::validation(origin, e.to_string()),
        _ => Failure::input(origin, e.to_string()),
    }
}

pub struct Report {
    pub text: String,
    pub code: u8,
}

fn ok(text: String) -> Result<Report, Failure> {
    Ok(Report { text, code: 0 })
}

fn resolved(plat: &PlatWord) -> Result<LagrangianDiagram, Failure> {
    let front = elaborate_front(plat).map_err(|e| diagram_failure("diagram::elaborate_front", e))?;
    resolve(&front).map_err(|e| diagram_failure("diagram::resolve", e))
}

fn spin(cli: &Cli) -> Spin {
    Spin::from_flag(cli.spin).unwrap_or_default()
}

/// Sweep disks, checked against the exhaustive search when
/// `--max-corners` is given.
fn disks(cli: &Cli, d: &LagrangianDiagram) -> Result<Vec<Vec<AdmissibleDisk>>, Failure> {
    let all = enumerate_all(d);
    if let Some(max) = cli.max_corners {
        for (a, sweep) in all.iter().enumerate() {
            let brute =
                brute_force_enumerate(d, a, max).map_err(|e| disk_failure("disks::brute_force_enumerate", e))?;
            if &brute != sweep {
                return Err(Failure::validation(
                    "disks::brute_force_enumerate",
                    format!(
                        "oracle disagrees at {}: sweep {} disks, exhaustive {}",
                        d.vertices()[a].name,
                        sweep.len(),
                        brute.len()
                    ),
                ));
            }
        }
    }
    Ok(all)
}

fn dga_of_plat(cli: &Cli, plat: &PlatWord, char: u32) -> Result<Dga, Failure> {
    let d = resolved(plat)?;
    let all = disks(cli, &d)?;
    assemble(&d, &all, char, spin(cli), &SIGN_TABLE).map_err(|e| disk_failure("disks::differential", e))
}

/// A plat's DGA, or a DGA file as given (`--spin 1` negates odd powers of
/// `t`; a `--char p` reduces an integral DGA).
fn dga(cli: &Cli, spec: &str, char: u32) -> Result<Dga, Failure> {
    match input::knot(spec)? {
        Knot::Plat(p) => dga_of_plat(cli, &p, char),
        Knot::Dga(mut dga) => {
            if spin(cli) == Spin::Lie {
                dga = dga.negate_odd_t();
            }
            if char != 0 && dga.char() != char {
                dga = dga.reduce_mod(char).map_err(|e| Failure::input("ncalg::reduce_mod", e.to_string()))?;
            }
            Ok(dga)
        }
    }
}

fn field(cli: &Cli) -> Result<(u32, u64), Failure> {
    let p = cli.char.unwrap_or(2);
    if p == 0 {
        return Err(Failure::input("invariants::enumerate_augmentations", "needs a prime --char"));
    }
    let t = match cli.t_value {
        Some(v) => v.rem_euclid(p as i64) as u64,
        None => default_t_value(p),
    };
    Ok((p, t))
}

fn budget(cli: &Cli) -> u64 {
    cli.aug_budget.unwrap_or(AUG_BUDGET)
}

pub fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Validate { input } => validate(input),
        Command::Dga { input } => ok(text::serialize(&dga(cli, input, cli.char.unwrap_or(0))?)),
        Command::Disks { input } => {
            let d = resolved(&input::plat(input)?)?;
            let mut s = String::new();
            for list in disks(cli, &d)? {
                for k in &list {
                    writeln!(s, "{}", format_disk(k, &d)).unwrap();
                }
            }
            ok(s)
        }
        Command::CheckD2 { input } => check_d2(&dga(cli, input, cli.char.unwrap_or(0))?),
        Command::Augs { input } => {
            let (p, t) = field(cli)?;
            let dga = dga(cli, input, 0)?;
            let augs = invariants::enumerate_augmentations_with_budget(&dga, p, t, budget(cli))
                .map_err(|e| invariant_failure("invariants::enumerate_augmentations", e))?;
            let mut s = format!("augs p={p} t={t} count={}\n", augs.len());
            for (i, a) in augs.iter().enumerate() {
                let values: Vec<String> =
                    a.values.iter().enumerate().map(|(g, v)| format!("{}={v}", dga.generators()[g].name)).collect();
                writeln!(s, "aug {i} = {}", values.join(" ")).unwrap();
            }
            ok(s)
        }
        Command::Linhom { input } => {
            let (p, t) = field(cli)?;
            let dga = dga(cli, input, 0)?;
            invariants::report(&dga, p, t, budget(cli))
                .map_err(|e| invariant_failure("invariants::linearized_homology", e))
                .and_then(ok)
        }
        Command::Compare { left, right } => {
            let (p, t) = field(cli)?;
            let a = dga(cli, left, 0)?;
            let b = dga(cli, right, 0)?;
            let v = invariants::compare_with(&a, &b, p, t, budget(cli))
                .map_err(|e| invariant_failure("invariants::compare", e))?;
            ok(format!("compare p={p} t={t}\n{v}\n"))
        }
        Command::ConormalFront { input } => {
            let c = input::curve(input)?;
            let f = conormal::conormal_front(&c).map_err(|e| conormal_failure("conormal::conormal_front", e))?;
            ok(f.to_text())
        }
        Command::ConormalChords { input, tol } => {
            let c = input::curve(input)?;
            let f = conormal::conormal_front(&c).map_err(|e| conormal_failure("conormal::conormal_front", e))?;
            let chords =
                conormal::reeb_chords_numeric(&f, *tol).map_err(|e| conormal_failure("conormal::reeb_chords_numeric", e))?;
            ok(chords.iter().map(|c| c.to_line() + "\n").collect())
        }
        Command::PsiCheck {
            dim,
            trials,
            step,
            tolerance,
        } => {
            if *dim < 2 || *trials == 0 || !(*step > 0.0) {
                return Err(Failure::input("conormal::check_contact_pullback", "need dim ≥ 2, trials ≥ 1, step > 0"));
            }
            let dev = conormal::check_contact_pullback(*dim, *trials, *step);
            let pass = dev < *tolerance;
            let text = format!(
                "psi-check n={dim} trials={trials} step={step:e} deviation={dev:.3e} {}\n",
                if pass { "PASS" } else { "FAIL" }
            );
            Ok(Report {
                text,
                code: if pass { 0 } else { 1 },
            })
        }
        Command::Corpus { show } => match show {
            Some(name) => ok(input::read(&format!("corpus:{name}"))?),
            None => corpus_list(),
        },
    }
}

fn validate(spec: &str) -> Result<Report, Failure> {
    let plat = input::plat(spec)?;
    let front = elaborate_front(&plat).map_err(|e| diagram_failure("diagram::elaborate_front", e))?;
    let d = resolve(&front).map_err(|e| diagram_failure("diagram::resolve", e))?;
    let ci = front.classical_invariants();
    let mut s = String::new();
    writeln!(s, "events {}", plat.len()).unwrap();
    writeln!(s, "crossings {}", d.vertices().len()).unwrap();
    writeln!(s, "tb {}", ci.tb).unwrap();
    writeln!(s, "rot {}", ci.rot).unwrap();
    let gens: Vec<String> = d.vertices().iter().map(|v| format!("{}:{}", v.name, v.grading)).collect();
    writeln!(s, "gradings {}", gens.join(" ")).unwrap();
    let euler: i64 = d.vertices().iter().map(|v| if v.grading.rem_euclid(2) == 0 { 1 } else { -1 }).sum();
    let positive = d.vertices().iter().all(|v| v.action > 0.into());
    let pass = euler == ci.tb && positive;
    writeln!(s, "euler {euler} {}", if euler == ci.tb { "= tb" } else { "!= tb" }).unwrap();
    writeln!(s, "actions {}", if positive { "positive" } else { "NOT POSITIVE" }).unwrap();
    writeln!(s, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok(Report {
        text: s,
        code: if pass { 0 } else { 1 },
    })
}

fn check_d2(dga: &Dga) -> Result<Report, Failure> {
    let mut s = String::new();
    let d2 = dga.check_d_squared();
    let degree = dga.degree_violations();
    let action = dga.action_violations();
    if d2.passed() {
        writeln!(s, "d2 PASS").unwrap();
    } else {
        writeln!(s, "d2 FAIL").unwrap();
        for (g, r) in &d2.failures {
            writeln!(s, "  dd {} = {}", dga.generators()[*g].name, text::format_element(dga, r)).unwrap();
        }
    }
    writeln!(s, "degree {}", if degree.is_empty() { "PASS" } else { "FAIL" }).unwrap();
    for (g, w, k) in &degree {
        let word = text::format_element_with(&lch_core::ncalg::Element::monomial(0, 1, *k, w.clone()), |l| {
            dga.name(l).to_string()
        });
        writeln!(s, "  d {} has term {word}", dga.generators()[*g].name).unwrap();
    }
    writeln!(s, "action {}", if action.is_empty() { "PASS" } else { "FAIL" }).unwrap();
    for (g, w) in &action {
        let names: Vec<&str> = w.letters().iter().map(|&l| dga.name(l)).collect();
        writeln!(s, "  d {} has word {}", dga.generators()[*g].name, names.join("·")).unwrap();
    }
    let pass = d2.passed() && degree.is_empty() && action.is_empty();
    writeln!(s, "{}", if pass { "PASS" } else { "FAIL" }).unwrap();
    Ok(Report {
        text: s,
        code: if pass { 0 } else { 1 },
    })
}

fn corpus_list() -> Result<Report, Failure> {
    let mut s = String::new();
    for p in &corpus::NAMED {
        let d = resolved(&p.plat())?;
        let front = elaborate_front(&p.plat()).map_err(|e| diagram_failure("diagram::elaborate_front", e))?;
        let ci = front.classical_invariants();
        writeln!(s, "{} tb={} rot={} crossings={}", p.name, ci.tb, ci.rot, d.vertices().len()).unwrap();
    }
    writeln!(
        s,
        "random-<seed> seeds={}..{} max_crossings={} max_strands={}",
        corpus::RANDOM_SEEDS.start,
        corpus::RANDOM_SEEDS.end,
        corpus::RANDOM_MAX_CROSSINGS,
        corpus::RANDOM_MAX_STRANDS
    )
    .unwrap();
    ok(s)
}
