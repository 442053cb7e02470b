//! Scripted reproduction of the worked examples, one report per case.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::bounds::{huneke_check, PowerOptions};
use crate::cases::{self, builtin_case_a6, builtin_case_a7_with, FoldOrder, WitnessChoice};
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{Ring, RingRef};
use crate::symbolic::{self, PrimeSelection, SymbolicMethod};
use crate::text::parse_generators;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseId {
    Ex31,
    Ex32,
    Lemma41,
    Lemma42,
    Ex43,
    Ex44,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [CaseId::Ex31, CaseId::Ex32, CaseId::Lemma41, CaseId::Lemma42, CaseId::Ex43, CaseId::Ex44];

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseId::Ex31 => "ex31",
            CaseId::Ex32 => "ex32",
            CaseId::Lemma41 => "lemma41",
            CaseId::Lemma42 => "lemma42",
            CaseId::Ex43 => "ex43",
            CaseId::Ex44 => "ex44",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CaseId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown case `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Claims outside what the engine can check; never counted as failures.
    Unverified,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub claim: String,
    pub status: Status,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: CaseId,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

pub const EX31_RING: [&str; 4] = ["x", "y", "z", "t"];
pub const EX31_IDEAL: &str = "x*z, x*t^2, y^2*z";
pub const EX31_COMPONENTS: [&str; 3] = ["x, y^2", "z, t^2", "x, z"];
pub const EX31_SYMBOLIC_SQUARE: &str = "x^2*z^2, x^2*z*t^2, x*y^2*z^2, x^2*t^4, x*y^2*z*t^2, y^4*z^2";

pub const TERAI_RING: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
pub const TERAI_IDEAL: &str = "a*b*c, a*b*f, a*c*e, a*d*e, a*d*f, b*c*d, b*d*e, b*e*f, c*d*f, c*e*f";
pub const TERAI_SQUARE_DEGREE5: &str = "b*c*d*e*f, a*c*d*e*f, a*b*d*e*f, a*b*c*e*f, a*b*c*d*f, a*b*c*d*e";
pub const TERAI_SQUARE_DEGREE6: &str = "c^2*e^2*f^2, b*c*e^2*f^2, b^2*e^2*f^2, c^2*d*e*f^2, a*b^2*e*f^2, c^2*d^2*f^2, \
    a*c*d^2*f^2, a^2*d^2*f^2, a^2*b*d*f^2, a^2*b^2*f^2, b^2*d*e^2*f, a*c^2*e^2*f, \
    a^2*d^2*e*f, b*c^2*d^2*f, a^2*b^2*c*f, b^2*d^2*e^2, a*b*d^2*e^2, a^2*d^2*e^2, \
    a^2*c*d*e^2, a^2*c^2*e^2, b^2*c*d^2*e, a^2*b*c^2*e, b^2*c^2*d^2, a*b^2*c^2*d, a^2*b^2*c^2";

/// Monomial ideal from a generator list in file syntax.
pub fn monomial_ideal(ring: &RingRef, text: &str) -> MonomialIdeal {
    let gens = parse_generators(ring, text).expect("built-in generators parse");
    let monomials = gens.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect();
    MonomialIdeal::new(ring.clone(), monomials).unwrap()
}

pub fn example_31() -> MonomialIdeal {
    monomial_ideal(&Ring::shared(&EX31_RING).unwrap(), EX31_IDEAL)
}

pub fn terai() -> MonomialIdeal {
    monomial_ideal(&Ring::shared(&TERAI_RING).unwrap(), TERAI_IDEAL)
}

struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    fn check(&mut self, claim: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Result<bool> {
        let t = Instant::now();
        let (ok, detail) = match f() {
            Ok(r) => r,
            Err(e @ Error::BudgetExhausted(_)) => return Err(e),
            Err(e) => (false, format!("error: {e}")),
        };
        let status = if ok { Status::Pass } else { Status::Fail };
        self.checks.push(Check { claim: claim.into(), status, detail, seconds: t.elapsed().as_secs_f64() });
        Ok(ok)
    }

    fn unverified(&mut self, claim: &str, detail: &str) {
        self.checks.push(Check { claim: claim.into(), status: Status::Unverified, detail: detail.into(), seconds: 0.0 });
    }
}

fn stats_text(s: &crate::DegreeStats) -> String {
    format!("beg {:?}, max {:?}, {} generators", s.beg, s.max_gen_degree, s.count)
}

fn show(ideal: &MonomialIdeal) -> String {
    ideal.display().to_string()
}

fn run_ex31(r: &mut Recorder) -> Result<()> {
    let i = example_31();
    let ring = i.ring().clone();
    let expected = monomial_ideal(&ring, EX31_SYMBOLIC_SQUARE);
    let components: Vec<MonomialIdeal> = EX31_COMPONENTS.iter().map(|c| monomial_ideal(&ring, c)).collect();
    r.check("primary decomposition (x,y^2) ∩ (z,t^2) ∩ (x,z) = I", || {
        let meet = MonomialIdeal::intersect_all(&components)?;
        Ok((meet == i, show(&meet)))
    })?;
    r.check("I^(2) from the listed components", || {
        let p = symbolic::symbolic_power_from_decomposition(&components, 2)?;
        Ok((p == expected, show(&p)))
    })?;
    r.check("I^(2) from the computed irreducible decomposition", || {
        let p = symbolic::symbolic_power(&i, 2, SymbolicMethod::Decomposition, PrimeSelection::Min, None)?;
        Ok((p == expected, show(&p)))
    })?;
    for primes in [PrimeSelection::Min, PrimeSelection::Ass] {
        r.check(&format!("I^(2) by saturation over {primes:?} primes"), || {
            let p = symbolic::symbolic_power_saturation(&i, 2, primes)?;
            Ok((p == expected, show(&p)))
        })?;
    }
    r.check("squarefree route refuses the non-squarefree input", || {
        let e = symbolic::symbolic_power_squarefree(&i, 2);
        Ok((e == Err(Error::NotSquarefree), "NotSquarefree raised".into()))
    })?;
    r.check("Beg(I^(2)) = 4 = 2·Beg(I), d(I^(2)) = 6", || {
        let s = expected.degree_stats();
        let b = i.degree_stats();
        Ok((s.beg == Some(4) && b.beg == Some(2) && s.max_gen_degree == Some(6), stats_text(&s)))
    })?;
    r.check("generated in degrees ≤ 6 = 2·3", || {
        let opts = PowerOptions { method: SymbolicMethod::Saturation, ..Default::default() };
        let rep = huneke_check(&i, 2, Some(3), opts)?;
        Ok((rep.satisfied && rep.d_in == rep.bound, format!("d = {}, bound = {}", rep.d_in, rep.bound)))
    })?;
    Ok(())
}

fn run_ex32(r: &mut Recorder) -> Result<()> {
    let i = terai();
    let ring = i.ring().clone();
    let mut listed = parse_generators(&ring, TERAI_SQUARE_DEGREE5).unwrap();
    listed.extend(parse_generators(&ring, TERAI_SQUARE_DEGREE6).unwrap());
    let listed_count = listed.len();
    let expected = monomial_ideal(&ring, &format!("{TERAI_SQUARE_DEGREE5}, {TERAI_SQUARE_DEGREE6}"));
    let squarefree = symbolic::symbolic_power_squarefree(&i, 2)?;
    r.check("I^(2) has exactly the 31 listed minimal generators", || {
        let ok = squarefree == expected && expected.len() == 31 && listed_count == 31;
        Ok((ok, format!("{} generators", squarefree.len())))
    })?;
    r.check("decomposition route agrees", || {
        let primes = symbolic::minimal_primes(&i)?;
        let p = symbolic::symbolic_power_from_decomposition(&primes.components, 2)?;
        Ok((p == squarefree, format!("{} minimal primes", primes.components.len())))
    })?;
    r.check("saturation route agrees", || {
        let p = symbolic::symbolic_power_saturation(&i, 2, PrimeSelection::Min)?;
        Ok((p == squarefree, show(&p)))
    })?;
    r.check("6 generators in degree 5, 25 in degree 6; Beg(I^(2)) = 5 < 6", || {
        let d5 = squarefree.generators().iter().filter(|g| g.degree() == 5).count();
        let d6 = squarefree.generators().iter().filter(|g| g.degree() == 6).count();
        let s = squarefree.degree_stats();
        Ok((d5 == 6 && d6 == 25 && s.beg == Some(5), format!("{d5} + {d6}; {}", stats_text(&s))))
    })?;
    r.check("generated in degrees ≤ 6 = 2·3", || {
        let rep = huneke_check(&i, 2, Some(3), PowerOptions::default())?;
        Ok((rep.satisfied, format!("d = {}, bound = {}", rep.d_in, rep.bound)))
    })?;
    Ok(())
}

fn run_lemma41(r: &mut Recorder) -> Result<()> {
    let case = builtin_case_a6();
    r.check("(M^2 : f) = (x, y, z)", || {
        let c = cases::colon(&case)?;
        let ok = c.equals(&case.expected_colon)?;
        Ok((ok, format!("colon = ({})", crate::text::join_polys(&case.ring, c.groebner_basis()?.polys()))))
    })?;
    r.check("every generator of M lies in each of the 12 listed primes", || {
        let mut ok = case.primes.len() == 12;
        for p in &case.primes {
            ok &= p.contains_ideal(&case.ideal)?;
        }
        Ok((ok, format!("{} primes", case.primes.len())))
    })?;
    r.check("M is the intersection of the listed primes (radical)", || {
        Ok((cases::verify_radical_intersection(&case)?, String::new()))
    })?;
    Ok(())
}

fn run_lemma42(r: &mut Recorder, fold: FoldOrder, progress: &mut dyn FnMut(&str)) -> Result<()> {
    let case = builtin_case_a6();
    let report = cases::verify_symbolic_square(&case, fold, progress)?;
    r.checks.push(Check {
        claim: "M^2 + (f) ⊆ p_i^2 for all 12 primes".into(),
        status: if report.containment { Status::Pass } else { Status::Fail },
        detail: "membership of each generator".into(),
        seconds: report.containment_time.as_secs_f64(),
    });
    r.checks.push(Check {
        claim: "∩ p_i^2 = M^2 + (f)".into(),
        status: if report.equal { Status::Pass } else { Status::Fail },
        detail: format!("{} binary intersections", report.step_times.len()),
        seconds: report.total_time.as_secs_f64(),
    });
    Ok(())
}

fn run_ex43(r: &mut Recorder) -> Result<()> {
    let case = builtin_case_a6();
    r.check("M is generated by degree-4 elements; deg f = 9", || {
        let degs = case.generator_degrees();
        let ok = degs.iter().all(|&d| d == 4) && case.witness.total_degree() == Some(9);
        Ok((ok, format!("{degs:?}")))
    })?;
    r.check("f ∉ M^2", || Ok((!case.square()?.member(&case.witness)?, String::new())))?;
    r.check("f ∈ M^(2) = ∩ p_i^2", || {
        let mut ok = true;
        for p in &case.primes {
            ok &= p.power(2)?.member(&case.witness)?;
        }
        Ok((ok, String::new()))
    })?;
    r.check("M^(2) needs a generator of degree 9 > 8 = 2·4", || {
        let rep = cases::degree_audit(&case)?;
        Ok((!rep.satisfied && rep.d_in == 9 && rep.bound == 8, format!("d = {}, bound = {}", rep.d_in, rep.bound)))
    })?;
    Ok(())
}

fn run_ex44(r: &mut Recorder) -> Result<()> {
    let mut chosen = None;
    let mut details = Vec::new();
    let t = Instant::now();
    for choice in [WitnessChoice::Printed, WitnessChoice::Symmetric] {
        let case = builtin_case_a7_with(choice);
        let ok = cases::verify_colon(&case)?;
        details.push(format!("{choice:?} witness {}: {}", case.witness.display(&case.ring), if ok { "colon = (x, y, z)" } else { "colon ≠ (x, y, z)" }));
        if ok && chosen.is_none() {
            chosen = Some(choice);
        }
    }
    r.checks.push(Check {
        claim: "(I^2 : f) = (x, y, z) for some witness candidate".into(),
        status: if chosen.is_some() { Status::Pass } else { Status::Fail },
        detail: format!("{}; chosen = {chosen:?}", details.join("; ")),
        seconds: t.elapsed().as_secs_f64(),
    });
    let case = builtin_case_a7_with(chosen.unwrap_or(WitnessChoice::Printed));
    r.check("I is the intersection of its 12 minimal primes (radical)", || {
        Ok((cases::verify_radical_intersection(&case)?, String::new()))
    })?;
    r.check("I generated in degree 4; f ∉ I^2 and f ∈ I^(2); 9 > 8 = 2·4", || {
        let mut ok = case.generator_degrees().iter().all(|&d| d == 4);
        ok &= !case.square()?.member(&case.witness)?;
        for p in &case.primes {
            ok &= p.power(2)?.member(&case.witness)?;
        }
        let rep = cases::degree_audit(&case)?;
        ok &= !rep.satisfied && rep.d_in == 9;
        Ok((ok, format!("d = {}, bound = {}", rep.d_in, rep.bound)))
    })?;
    r.unverified("I is binomial, Cohen-Macaulay of height 2", "depth and resolutions are outside the engine");
    Ok(())
}

/// Run one case. Only budget exhaustion aborts; other errors become failed checks.
pub fn run_case(id: CaseId, fold: FoldOrder, progress: &mut dyn FnMut(&str)) -> Result<CaseReport> {
    let t = Instant::now();
    let mut r = Recorder { checks: Vec::new() };
    let outcome = match id {
        CaseId::Ex31 => run_ex31(&mut r),
        CaseId::Ex32 => run_ex32(&mut r),
        CaseId::Lemma41 => run_lemma41(&mut r),
        CaseId::Lemma42 => run_lemma42(&mut r, fold, progress),
        CaseId::Ex43 => run_ex43(&mut r),
        CaseId::Ex44 => run_ex44(&mut r),
    };
    match outcome {
        Ok(()) => {}
        Err(e @ Error::BudgetExhausted(_)) => return Err(e),
        Err(e) => r.checks.push(Check { claim: "case setup".into(), status: Status::Fail, detail: e.to_string(), seconds: 0.0 }),
    }
    Ok(CaseReport { case: id, checks: r.checks, seconds: t.elapsed().as_secs_f64() })
}
