//! Built-in non-monomial counterexamples to the `D·n` degree bound and
//! their verification through the Gröbner kernel.
//!
//! The prime lists are trusted input: general primary decomposition is not
//! part of the kernel. [`verify_radical_intersection`] is the consistency
//! check that the listed primes cut out the ideal.

use std::time::{Duration, Instant};

use crate::bounds::{huneke_check_degree, BoundReport};
use crate::error::Result;
use crate::poly::{PolyIdeal, Polynomial};
use crate::ring::{Ring, RingRef};
use crate::text::{parse_generators, parse_polynomial};

/// Which witness the seven-variable case uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessChoice {
    /// `xyzabcd(ac - bd)`, the witness as printed with the example.
    Printed,
    /// `xyzabcd(ab - cd)`, matching the binomial factor of the third generator.
    Symmetric,
}

#[derive(Debug, Clone)]
pub struct CounterexampleCase {
    pub name: &'static str,
    pub ring: RingRef,
    pub ideal: PolyIdeal,
    pub witness: Polynomial,
    /// Each prime given by two generators.
    pub primes: Vec<PolyIdeal>,
    pub expected_colon: PolyIdeal,
    pub expected_witness_degree: u64,
}

fn ideal(ring: &RingRef, text: &str) -> PolyIdeal {
    PolyIdeal::new(ring.clone(), parse_generators(ring, text).expect("built-in generators parse")).unwrap()
}

fn build(
    name: &'static str,
    vars: &[&str],
    gens: &str,
    witness: &str,
    primes: &[&str],
    expected_witness_degree: u64,
) -> CounterexampleCase {
    let ring = Ring::shared(vars).unwrap();
    CounterexampleCase {
        name,
        ideal: ideal(&ring, gens),
        witness: parse_polynomial(&ring, witness).expect("built-in witness parses"),
        primes: primes.iter().map(|p| ideal(&ring, p)).collect(),
        expected_colon: ideal(&ring, "x, y, z"),
        expected_witness_degree,
        ring,
    }
}

/// `M = (x(x-y)ya, (x-y)ztb, yz(xa-tb))` in `QQ[x,y,z,t,a,b]` with witness
/// `f = xy(x-y)ztab(ya-tb)` and its twelve associated primes.
pub fn builtin_case_a6() -> CounterexampleCase {
    build(
        "A6",
        &["x", "y", "z", "t", "a", "b"],
        "x*(x-y)*y*a, (x-y)*z*t*b, y*z*(x*a-t*b)",
        "x*y*(x-y)*z*t*a*b*(y*a-t*b)",
        &[
            "b, a",
            "b, x",
            "y, x",
            "z, x",
            "t, x",
            "b, y",
            "z, y",
            "t, y",
            "a, t",
            "a, z",
            "z, x - y",
            "x - y, y*a - t*b",
        ],
        9,
    )
}

/// `I = (xyab, xzcd, yz(ab-cd))` in `QQ[x,y,z,a,b,c,d]` with the printed witness.
pub fn builtin_case_a7() -> CounterexampleCase {
    builtin_case_a7_with(WitnessChoice::Printed)
}

/// The seven-variable case with a chosen witness.
///
/// Its minimal primes follow from a case split on whether `x` lies in the
/// prime: `(x,y), (x,z), (x, ab-cd)` when it does, and otherwise one of
/// `y, a, b` together with one of `z, c, d` (with `(y,z)` covering both).
pub fn builtin_case_a7_with(choice: WitnessChoice) -> CounterexampleCase {
    let witness = match choice {
        WitnessChoice::Printed => "x*y*z*a*b*c*d*(a*c - b*d)",
        WitnessChoice::Symmetric => "x*y*z*a*b*c*d*(a*b - c*d)",
    };
    build(
        "A7",
        &["x", "y", "z", "a", "b", "c", "d"],
        "x*y*a*b, x*z*c*d, y*z*(a*b - c*d)",
        witness,
        &[
            "x, y",
            "x, z",
            "x, a*b - c*d",
            "y, z",
            "y, c",
            "y, d",
            "a, z",
            "a, c",
            "a, d",
            "b, z",
            "b, c",
            "b, d",
        ],
        9,
    )
}

impl CounterexampleCase {
    pub fn square(&self) -> Result<PolyIdeal> {
        self.ideal.power(2)
    }

    /// `I^2 + (f)`, the claimed second symbolic power.
    pub fn claimed_symbolic_square(&self) -> Result<PolyIdeal> {
        self.square()?.sum(&PolyIdeal::principal(self.ring.clone(), self.witness.clone())?)
    }

    pub fn with_witness(&self, witness: Polynomial) -> CounterexampleCase {
        CounterexampleCase { witness, ..self.clone() }
    }

    pub fn generator_degrees(&self) -> Vec<u64> {
        self.ideal.generators().iter().filter_map(Polynomial::total_degree).collect()
    }
}

/// The colon ideal `(I^2 : f)`.
pub fn colon(case: &CounterexampleCase) -> Result<PolyIdeal> {
    case.square()?.quotient(&case.witness)
}

/// `(I^2 : f)` equals the expected colon ideal.
pub fn verify_colon(case: &CounterexampleCase) -> Result<bool> {
    colon(case)?.equals(&case.expected_colon)
}

/// The listed primes intersect to the ideal itself.
pub fn verify_radical_intersection(case: &CounterexampleCase) -> Result<bool> {
    PolyIdeal::intersect_all(&case.primes)?.equals(&case.ideal)
}

/// Fold order for the intersection of squared primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FoldOrder {
    #[default]
    Listed,
    /// Ascending by number of generators of the squared prime.
    BySize,
}

#[derive(Debug, Clone)]
pub struct SquareReport {
    /// `I^2 + (f) ⊆ p_i^2` for every listed prime, by membership.
    pub containment: bool,
    pub containment_time: Duration,
    /// `∩ p_i^2 = I^2 + (f)`.
    pub equal: bool,
    pub total_time: Duration,
    pub step_times: Vec<Duration>,
}

/// Check `∩ p_i^2 = I^2 + (f)`. The cheap containment half is checked first
/// by membership; `progress` receives one line per step.
pub fn verify_symbolic_square(
    case: &CounterexampleCase,
    fold: FoldOrder,
    progress: &mut dyn FnMut(&str),
) -> Result<SquareReport> {
    let start = Instant::now();
    let claimed = case.claimed_symbolic_square()?;
    let squares: Vec<PolyIdeal> = case.primes.iter().map(|p| p.power(2)).collect::<Result<_>>()?;

    let mut containment = true;
    for (i, sq) in squares.iter().enumerate() {
        if !sq.contains_ideal(&claimed)? {
            progress(&format!("generator of I^2 + (f) outside prime square {}", i + 1));
            containment = false;
        }
    }
    let containment_time = start.elapsed();
    progress(&format!("containment I^2 + (f) ⊆ ∩ p_i^2: {containment} ({:.2?})", containment_time));

    let mut order: Vec<usize> = (0..squares.len()).collect();
    if fold == FoldOrder::BySize {
        order.sort_by_key(|&i| squares[i].generators().len());
    }
    let mut step_times = Vec::with_capacity(order.len());
    let mut acc = squares[order[0]].clone();
    for (step, &i) in order.iter().enumerate().skip(1) {
        let t = Instant::now();
        acc = acc.intersect(&squares[i])?;
        step_times.push(t.elapsed());
        progress(&format!(
            "intersected {} of {} prime squares: {} basis elements ({:.2?})",
            step + 1,
            order.len(),
            acc.generators().len(),
            t.elapsed()
        ));
    }
    let equal = acc.equals(&claimed)?;
    Ok(SquareReport { containment, containment_time, equal, total_time: start.elapsed(), step_times })
}

/// The degree audit at `n = 2` on `I^(2) = I^2 + (f)`: reads the degree of
/// the witness as a generator of the symbolic square and compares with
/// `2·D` for `D` the generator degree of `I`.
pub fn degree_audit(case: &CounterexampleCase) -> Result<BoundReport> {
    let d = case.ideal.max_generator_degree().unwrap_or(0);
    let claimed = case.claimed_symbolic_square()?;
    // Minimal generators: I^2 in degree 2·D, and f when f ∉ I^2.
    let square = case.square()?;
    let mut d_in = square.max_generator_degree().unwrap_or(0);
    if !square.member(&case.witness)? {
        d_in = d_in.max(case.witness.total_degree().unwrap_or(0));
    }
    debug_assert!(claimed.member(&case.witness)?);
    Ok(huneke_check_degree(d_in, 2, d))
}
