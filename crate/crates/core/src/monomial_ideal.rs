//! Monomial ideals in canonical form.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::RingRef;

/// A monomial ideal represented by its unique minimal generating set.
///
/// Generators are kept sorted in canonical order (degree, then exponent
/// vector). The zero ideal has no generators; the unit ideal is generated by
/// the unit monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingRef,
    gens: Vec<Monomial>,
}

/// Degree statistics over the minimal generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    /// `d(I)`, the largest minimal generator degree. `None` for the zero ideal.
    pub max_gen_degree: Option<u64>,
    /// `Beg(I)`, the smallest minimal generator degree. `None` for the zero ideal.
    pub beg: Option<u64>,
    pub count: usize,
}

/// Reduce a monomial list to its minimal generators in canonical order.
pub(crate) fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A proper divisor has strictly smaller degree, so it was seen earlier.
    for g in gens {
        if !kept.iter().any(|k| k.degree() < g.degree() && k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Build the canonical ideal generated by `gens`.
pub fn minimalize(ring: &RingRef, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(ring.clone(), gens)
}

impl MonomialIdeal {
    pub fn new(ring: RingRef, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::RingMismatch(format!(
                "monomial over {} variables in {ring}",
                bad.nvars()
            )));
        }
        Ok(MonomialIdeal::from_trusted(ring, gens))
    }

    /// Caller guarantees every generator lives in `ring`.
    pub(crate) fn from_trusted(ring: RingRef, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { gens: minimal_generators(gens), ring }
    }

    pub fn zero(ring: RingRef) -> MonomialIdeal {
        MonomialIdeal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: RingRef) -> MonomialIdeal {
        let one = Monomial::one(ring.nvars());
        MonomialIdeal { ring, gens: vec![one] }
    }

    /// The prime generated by the listed variables.
    pub fn variable_prime(ring: RingRef, indices: impl IntoIterator<Item = usize>) -> MonomialIdeal {
        let n = ring.nvars();
        let gens = indices.into_iter().map(|i| Monomial::variable(n, i)).collect();
        MonomialIdeal::from_trusted(ring, gens)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Generated by pure powers of variables (irreducible, when proper and nonzero).
    pub fn is_pure_power_generated(&self) -> bool {
        self.gens.iter().all(|g| g.pure_power_index().is_some())
    }

    /// Generated by variables (a monomial prime).
    pub fn is_variable_prime(&self) -> bool {
        !self.gens.is_empty() && self.gens.iter().all(|g| g.degree() == 1)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    fn check_monomial(&self, u: &Monomial) -> Result<()> {
        if u.nvars() == self.ring.nvars() {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("monomial over {} variables in {}", u.nvars(), self.ring)))
        }
    }

    /// True iff some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> Result<bool> {
        self.check_monomial(u)?;
        Ok(self.contains_unchecked(u))
    }

    pub(crate) fn contains_unchecked(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// Intersection via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                lcms.push(u.lcm(v));
            }
        }
        Ok(MonomialIdeal::from_trusted(self.ring.clone(), lcms))
    }

    /// Left fold of binary intersections, minimalizing after each step.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<MonomialIdeal> {
        let mut iter = ideals.into_iter();
        let first = iter.next().ok_or(Error::EmptyDecomposition)?.clone();
        iter.try_fold(first, |acc, next| acc.intersect(next))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                prods.push(u.checked_mul(v)?);
            }
        }
        Ok(MonomialIdeal::from_trusted(self.ring.clone(), prods))
    }

    /// `I^n` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// The ideal quotient `(I : u)`.
    pub fn quotient(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(u)?;
        let gens = self.gens.iter().map(|g| g.saturating_div(u)).collect();
        Ok(MonomialIdeal::from_trusted(self.ring.clone(), gens))
    }

    /// `(I : u^∞)` by iterating quotients to a fixed point.
    pub fn saturate(&self, u: &Monomial) -> Result<MonomialIdeal> {
        self.saturate_counting(u).map(|(ideal, _)| ideal)
    }

    /// Saturation together with the number of quotient steps that changed the ideal.
    pub fn saturate_counting(&self, u: &Monomial) -> Result<(MonomialIdeal, usize)> {
        self.check_monomial(u)?;
        if u.is_one() {
            return Ok((self.clone(), 0));
        }
        let mut current = self.clone();
        let mut steps = 0;
        loop {
            let next = current.quotient(u)?;
            if next == current {
                return Ok((current, steps));
            }
            current = next;
            steps += 1;
        }
    }

    /// Radical: supports of the generators, minimalized.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::support_monomial).collect();
        MonomialIdeal::from_trusted(self.ring.clone(), gens)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats {
            max_gen_degree: self.gens.iter().map(Monomial::degree).max(),
            beg: self.gens.iter().map(Monomial::degree).min(),
            count: self.gens.len(),
        }
    }

    /// lcm of all minimal generators, `None` for the zero ideal.
    pub fn generator_lcm(&self) -> Option<Monomial> {
        let mut iter = self.gens.iter();
        let first = iter.next()?.clone();
        Some(iter.fold(first, |acc, g| acc.lcm(g)))
    }

    pub fn display(&self) -> IdealDisplay<'_> {
        IdealDisplay(self)
    }

    /// Generators printed with ring variable names.
    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.display(&self.ring).to_string()).collect()
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal({})", self.display())
    }
}

pub struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ideal = self.0;
        f.write_str("(")?;
        for (i, g) in ideal.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&ideal.ring))?;
        }
        f.write_str(")")
    }
}
