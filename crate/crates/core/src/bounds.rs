//! Generator-degree bounds for symbolic powers.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::symbolic::{symbolic_power, PrimeSelection, SymbolicMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    /// `d(I^(n)) ≤ D·n`.
    #[serde(rename = "huneke_D_times_n")]
    HunekeDTimesN,
    /// `d(I^(n)) ≤ deg(lcm of generators)·n`.
    #[serde(rename = "lcm_degree")]
    LcmDegree,
    /// `d(I^(n)) ≤ (sum of generator degrees)·n`.
    #[serde(rename = "sum_of_degrees")]
    SumOfDegrees,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: u32,
    #[serde(rename = "d_In")]
    pub d_in: u64,
    pub bound: u64,
    pub satisfied: bool,
    pub bound_kind: BoundKind,
}

impl BoundReport {
    pub fn new(n: u32, d_in: u64, bound: u64, bound_kind: BoundKind) -> BoundReport {
        BoundReport { n, d_in, bound, satisfied: d_in <= bound, bound_kind }
    }
}

/// How to compute the symbolic powers a bound is audited on.
#[derive(Debug, Clone, Copy, Default)]
pub struct PowerOptions<'a> {
    pub method: SymbolicMethod,
    pub primes: PrimeSelection,
    pub components: Option<&'a [MonomialIdeal]>,
}

fn max_degree(ideal: &MonomialIdeal) -> Result<u64> {
    ideal.degree_stats().max_gen_degree.ok_or_else(|| Error::Precondition("ideal must be nonzero".into()))
}

/// `d(I^(n))` for the selected route.
pub fn symbolic_max_degree(ideal: &MonomialIdeal, n: u32, opts: PowerOptions<'_>) -> Result<u64> {
    let power = symbolic_power(ideal, n, opts.method, opts.primes, opts.components)?;
    max_degree(&power)
}

/// Check `d(I^(n)) ≤ D·n`, with `D = d(I)` unless given.
pub fn huneke_check(ideal: &MonomialIdeal, n: u32, d: Option<u64>, opts: PowerOptions<'_>) -> Result<BoundReport> {
    let d_i = max_degree(ideal)?;
    let d = d.unwrap_or(d_i);
    if d < d_i {
        return Err(Error::Precondition(format!("D = {d} is below the generator degree d(I) = {d_i}")));
    }
    let d_in = symbolic_max_degree(ideal, n, opts)?;
    Ok(BoundReport::new(n, d_in, d * n as u64, BoundKind::HunekeDTimesN))
}

/// The same check for a symbolic power computed elsewhere (e.g. by the
/// polynomial kernel), given only its maximal generator degree.
pub fn huneke_check_degree(d_in: u64, n: u32, d: u64) -> BoundReport {
    BoundReport::new(n, d_in, d * n as u64, BoundKind::HunekeDTimesN)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmBound {
    pub lcm: Monomial,
    /// Bound per unit of `n`.
    pub degree: u64,
}

pub fn lcm_bound(ideal: &MonomialIdeal) -> Result<LcmBound> {
    let lcm = ideal.generator_lcm().ok_or_else(|| Error::Precondition("ideal must be nonzero".into()))?;
    Ok(LcmBound { degree: lcm.degree(), lcm })
}

pub fn lcm_check(ideal: &MonomialIdeal, n: u32, opts: PowerOptions<'_>) -> Result<BoundReport> {
    let bound = lcm_bound(ideal)?;
    let d_in = symbolic_max_degree(ideal, n, opts)?;
    Ok(BoundReport::new(n, d_in, bound.degree * n as u64, BoundKind::LcmDegree))
}

/// Sum of the minimal generator degrees.
pub fn sum_degree_bound(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Err(Error::Precondition("ideal must be nonzero".into()));
    }
    Ok(ideal.generators().iter().map(Monomial::degree).sum())
}

pub fn sum_degree_check(ideal: &MonomialIdeal, n: u32, opts: PowerOptions<'_>) -> Result<BoundReport> {
    let e = sum_degree_bound(ideal)?;
    let d_in = symbolic_max_degree(ideal, n, opts)?;
    Ok(BoundReport::new(n, d_in, e * n as u64, BoundKind::SumOfDegrees))
}

fn serialize_ratio<S: Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

/// Observed `d(I^(n))` for `n = 1..N` with linearity diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthSequence {
    /// `(n, d(I^(n)))`, consecutive from `n = 1`.
    pub entries: Vec<(u32, u64)>,
    /// `max_n d(I^(n)) / n`.
    #[serde(serialize_with = "serialize_ratio")]
    pub slope_estimate: Ratio<u64>,
    pub slack: u64,
    /// `max_n |d(I^(n)) - n·d(I^(1))| ≤ slack`.
    pub is_linear_within: bool,
    /// False when some power failed; `entries` then holds the prefix that succeeded.
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl GrowthSequence {
    fn from_entries(entries: Vec<(u32, u64)>, slack: u64, error: Option<String>) -> GrowthSequence {
        let slope_estimate = entries
            .iter()
            .map(|&(n, d)| Ratio::new(d, n as u64))
            .max()
            .unwrap_or_else(|| Ratio::from_integer(0));
        let is_linear_within = match entries.first() {
            Some(&(_, d1)) => entries.iter().all(|&(n, d)| d.abs_diff(d1 * n as u64) <= slack),
            None => false,
        };
        GrowthSequence { entries, slope_estimate, slack, is_linear_within, complete: error.is_none(), error }
    }
}

/// Compute `d(I^(n))` for `n = 1..=max_n`.
///
/// Cost grows quickly with `n`: the squarefree route intersects `P^n` over
/// all minimal primes, and `|P^n|` grows like `n^(|P|-1)`. Intended for
/// small ideals and `max_n` in the single digits.
pub fn degree_sequence(ideal: &MonomialIdeal, max_n: u32, opts: PowerOptions<'_>, slack: u64) -> Result<GrowthSequence> {
    if max_n == 0 {
        return Err(Error::Precondition("N must be at least 1".into()));
    }
    let results: Vec<Result<u64>> = (1..=max_n).into_par_iter().map(|n| symbolic_max_degree(ideal, n, opts)).collect();
    let mut entries = Vec::with_capacity(results.len());
    let mut error = None;
    for (n, r) in (1..=max_n).zip(results) {
        match r {
            Ok(d) => entries.push((n, d)),
            Err(e) => {
                error = Some(format!("n = {n}: {e}"));
                break;
            }
        }
    }
    Ok(GrowthSequence::from_entries(entries, slack, error))
}
