//! Decompositions of monomial ideals and their symbolic powers.
//!
//! Three independent routes compute `I^(n)`:
//!
//! * squarefree: intersect the n-th powers of the minimal primes;
//! * decomposition: intersect the n-th powers of caller-supplied (or
//!   computed irreducible) components;
//! * saturation: for each prime `P`, saturate `I^n` by the product of the
//!   variables outside `P` (the monomial form of `I^n A_P ∩ A`), then intersect.
//!
//! On squarefree input all three agree; the test suites hold them to that.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::{Ring, RingRef};

/// A prime generated by a nonempty set of variables (sorted indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariablePrime {
    variables: Vec<usize>,
}

impl VariablePrime {
    pub fn new(mut variables: Vec<usize>) -> Result<VariablePrime> {
        variables.sort_unstable();
        variables.dedup();
        if variables.is_empty() {
            return Err(Error::Precondition("a variable prime needs at least one variable".into()));
        }
        Ok(VariablePrime { variables })
    }

    fn from_mask(mask: u64) -> VariablePrime {
        VariablePrime { variables: (0..64).filter(|i| mask & (1 << i) != 0).collect() }
    }

    fn from_ideal(ideal: &MonomialIdeal) -> VariablePrime {
        let mut variables: Vec<usize> = ideal.generators().iter().flat_map(|g| g.support().collect::<Vec<_>>()).collect();
        variables.sort_unstable();
        variables.dedup();
        VariablePrime { variables }
    }

    pub fn variables(&self) -> &[usize] {
        &self.variables
    }

    pub fn height(&self) -> usize {
        self.variables.len()
    }

    pub fn to_ideal(&self, ring: &RingRef) -> MonomialIdeal {
        MonomialIdeal::variable_prime(ring.clone(), self.variables.iter().copied())
    }

    /// Product of the variables outside the prime; inverting it localizes at the prime.
    pub fn complement_monomial(&self, nvars: usize) -> Monomial {
        Monomial::product_of(nvars, (0..nvars).filter(|i| !self.variables.contains(i)))
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        PrimeDisplay { prime: self, ring }
    }
}

struct PrimeDisplay<'a> {
    prime: &'a VariablePrime,
    ring: &'a Ring,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.prime.variables.iter().map(|&i| self.ring.name(i)).collect();
        write!(f, "({})", names.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionKind {
    MinimalPrimes,
    Irreducible,
    UserPrimary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecompositionSource {
    Computed,
    UserSupplied,
}

/// An ordered list of components whose intersection is the decomposed ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<MonomialIdeal>,
    pub kind: DecompositionKind,
    pub source: DecompositionSource,
}

impl Decomposition {
    /// Wrap caller-supplied primary components.
    pub fn user_supplied(components: Vec<MonomialIdeal>) -> Result<Decomposition> {
        if components.is_empty() {
            return Err(Error::EmptyDecomposition);
        }
        let ring = components[0].ring().clone();
        for c in &components[1..] {
            ring.check_same(c.ring())?;
        }
        Ok(Decomposition { components, kind: DecompositionKind::UserPrimary, source: DecompositionSource::UserSupplied })
    }

    /// Intersection of all components.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::intersect_all(&self.components)
    }
}

/// Which prime set the saturation route localizes at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimeSelection {
    /// Minimal primes of the radical.
    #[default]
    Min,
    /// Associated primes from the irreducible decomposition.
    Ass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolicMethod {
    #[default]
    Squarefree,
    Decomposition,
    Saturation,
}

fn require_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Precondition("ideal must be nonzero".into()));
    }
    if ideal.is_unit() {
        return Err(Error::Precondition("ideal must be proper".into()));
    }
    Ok(())
}

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition("symbolic power index must be positive".into()));
    }
    Ok(())
}

/// Minimal vertex covers of the hypergraph with the given edges (support masks).
///
/// Branches on the variables of a smallest uncovered edge; the i-th branch
/// picks the i-th variable and forbids the earlier ones, so every cover is
/// produced at most once.
pub(crate) fn minimal_covers(edges: &[u64]) -> Vec<u64> {
    fn search(edges: &[u64], chosen: u64, excluded: u64, found: &mut Vec<u64>) {
        if found.iter().any(|&c| c & !chosen == 0) {
            return;
        }
        let mut best: Option<u64> = None;
        for &e in edges {
            if e & chosen != 0 {
                continue;
            }
            let open = e & !excluded;
            if open == 0 {
                return;
            }
            if best.is_none_or(|b| open.count_ones() < b.count_ones()) {
                best = Some(open);
            }
        }
        let Some(edge) = best else {
            found.retain(|&c| c & chosen != chosen);
            found.push(chosen);
            return;
        };
        let mut blocked = excluded;
        for v in 0..64 {
            let bit = 1u64 << v;
            if edge & bit != 0 {
                search(edges, chosen | bit, blocked, found);
                blocked |= bit;
            }
        }
    }

    let mut found = Vec::new();
    search(edges, 0, 0, &mut found);
    // A cover found early can be a superset of one found later.
    let mut minimal: Vec<u64> = found
        .iter()
        .copied()
        .filter(|&c| !found.iter().any(|&d| d != c && d & c == d))
        .collect();
    minimal.sort_unstable();
    minimal.dedup();
    minimal
}

/// Minimal primes of a squarefree monomial ideal: the minimal vertex covers
/// of the generators' support hypergraph.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Decomposition> {
    require_proper_nonzero(ideal)?;
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.ring().nvars() > 64 {
        return Err(Error::Precondition("minimal prime search supports at most 64 variables".into()));
    }
    let edges: Vec<u64> = ideal.generators().iter().map(Monomial::support_mask).collect();
    let mut primes: Vec<VariablePrime> = minimal_covers(&edges).into_iter().map(VariablePrime::from_mask).collect();
    primes.sort();
    let components = primes.iter().map(|p| p.to_ideal(ideal.ring())).collect();
    Ok(Decomposition { components, kind: DecompositionKind::MinimalPrimes, source: DecompositionSource::Computed })
}

/// Split `I = (I + x_i^a) ∩ (I + h)` on a generator `x_i^a h` that is not a
/// pure power, until every piece is generated by pure powers.
fn split_irreducible(ideal: MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    let Some(g) = ideal.generators().iter().find(|g| g.pure_power_index().is_none()) else {
        if !out.contains(&ideal) {
            out.push(ideal);
        }
        return;
    };
    let n = ideal.ring().nvars();
    let i = g.support().next().expect("non-pure-power generator has support");
    let power = Monomial::variable_power(n, i, g.exponent(i));
    let rest = g.saturating_div(&power);
    let ring = ideal.ring().clone();
    let with = |extra: Monomial| {
        let mut gens = ideal.generators().to_vec();
        gens.push(extra);
        MonomialIdeal::from_trusted(ring.clone(), gens)
    };
    let left = with(power);
    let right = with(rest);
    split_irreducible(left, out);
    split_irreducible(right, out);
}

/// Drop components containing another, then any component that contains
/// the intersection of the remaining ones.
fn make_irredundant(mut components: Vec<MonomialIdeal>) -> Result<Vec<MonomialIdeal>> {
    let snapshot = components.clone();
    components.retain(|c| {
        !snapshot.iter().any(|d| d != c && c.contains_ideal(d).unwrap_or(false))
    });
    let mut j = 0;
    while j < components.len() && components.len() > 1 {
        let others: Vec<&MonomialIdeal> = components.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, c)| c).collect();
        let rest = MonomialIdeal::intersect_all(others)?;
        if components[j].contains_ideal(&rest)? {
            components.remove(j);
            j = 0;
        } else {
            j += 1;
        }
    }
    Ok(components)
}

/// Irredundant irreducible decomposition into pure-power generated components.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    require_proper_nonzero(ideal)?;
    let mut pieces = Vec::new();
    split_irreducible(ideal.clone(), &mut pieces);
    let mut components = make_irredundant(pieces)?;
    components.sort_by(|a, b| a.generators().cmp(b.generators()));
    Ok(Decomposition { components, kind: DecompositionKind::Irreducible, source: DecompositionSource::Computed })
}

/// Associated primes: distinct radicals of the irreducible components.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VariablePrime>> {
    let decomposition = irreducible_decomposition(ideal)?;
    let mut primes: Vec<VariablePrime> =
        decomposition.components.iter().map(|c| VariablePrime::from_ideal(&c.radical())).collect();
    primes.sort();
    primes.dedup();
    Ok(primes)
}

fn intersect_powers(components: &[MonomialIdeal], n: u32) -> Result<MonomialIdeal> {
    let mut powers = components.par_iter().map(|c| c.power(n)).collect::<Result<Vec<_>>>()?;
    powers.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.generators().cmp(b.generators())));
    MonomialIdeal::intersect_all(&powers)
}

/// `I^(n)` of a squarefree ideal as the intersection of `P^n` over its minimal primes.
pub fn symbolic_power_squarefree(ideal: &MonomialIdeal, n: u32) -> Result<MonomialIdeal> {
    require_positive(n)?;
    let primes = minimal_primes(ideal)?;
    intersect_powers(&primes.components, n)
}

/// `∩ Q^n` over the given components.
pub fn symbolic_power_from_decomposition(components: &[MonomialIdeal], n: u32) -> Result<MonomialIdeal> {
    require_positive(n)?;
    if components.is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let ring = components[0].ring();
    for c in &components[1..] {
        ring.check_same(c.ring())?;
    }
    intersect_powers(components, n)
}

/// The primes used by the saturation route.
pub fn selected_primes(ideal: &MonomialIdeal, primes: PrimeSelection) -> Result<Vec<VariablePrime>> {
    match primes {
        PrimeSelection::Min => Ok(minimal_primes(&ideal.radical())?
            .components
            .iter()
            .map(VariablePrime::from_ideal)
            .collect()),
        PrimeSelection::Ass => associated_primes(ideal),
    }
}

/// `∩_P (I^n : u_P^∞)` where `u_P` is the product of the variables outside `P`.
pub fn symbolic_power_saturation(ideal: &MonomialIdeal, n: u32, primes: PrimeSelection) -> Result<MonomialIdeal> {
    require_positive(n)?;
    require_proper_nonzero(ideal)?;
    let prime_list = selected_primes(ideal, primes)?;
    let ordinary = ideal.power(n)?;
    let nvars = ideal.ring().nvars();
    let mut localized = prime_list
        .par_iter()
        .map(|p| ordinary.saturate(&p.complement_monomial(nvars)))
        .collect::<Result<Vec<_>>>()?;
    localized.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.generators().cmp(b.generators())));
    MonomialIdeal::intersect_all(&localized)
}

/// Dispatch on the route. The decomposition route uses `components` when
/// supplied and the computed irreducible decomposition otherwise.
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    n: u32,
    method: SymbolicMethod,
    primes: PrimeSelection,
    components: Option<&[MonomialIdeal]>,
) -> Result<MonomialIdeal> {
    match method {
        SymbolicMethod::Squarefree => symbolic_power_squarefree(ideal, n),
        SymbolicMethod::Decomposition => match components {
            Some(c) => symbolic_power_from_decomposition(c, n),
            None => {
                let d = irreducible_decomposition(ideal)?;
                symbolic_power_from_decomposition(&d.components, n)
            }
        },
        SymbolicMethod::Saturation => symbolic_power_saturation(ideal, n, primes),
    }
}
