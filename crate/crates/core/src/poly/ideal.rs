//! Ideals of the polynomial ring over the rationals.

use std::sync::OnceLock;

use super::groebner::{buchberger, check_deadline, GroebnerBasis};
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;
use crate::ring::RingRef;

/// A polynomial ideal given by generators, with a lazily computed reduced
/// Gröbner basis in degrevlex.
#[derive(Debug)]
pub struct PolyIdeal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        PolyIdeal { ring: self.ring.clone(), gens: self.gens.clone(), basis }
    }
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(ring: RingRef, gens: Vec<Polynomial>) -> Result<PolyIdeal> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::RingMismatch(format!("polynomial over {} variables in {ring}", bad.nvars())));
        }
        let gens = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_order(MonomialOrder::DegRevLex))
            .collect();
        Ok(PolyIdeal { ring, gens, basis: OnceLock::new() })
    }

    fn with_basis(ring: RingRef, basis: GroebnerBasis) -> PolyIdeal {
        debug_assert_eq!(basis.order(), MonomialOrder::DegRevLex);
        let gens = basis.polys().to_vec();
        let cell = OnceLock::new();
        let _ = cell.set(basis);
        PolyIdeal { ring, gens, basis: cell }
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> PolyIdeal {
        let gens = ideal
            .generators()
            .iter()
            .map(|m| Polynomial::from_monomial(m.clone(), MonomialOrder::DegRevLex))
            .collect();
        PolyIdeal { ring: ideal.ring().clone(), gens, basis: OnceLock::new() }
    }

    pub fn principal(ring: RingRef, f: Polynomial) -> Result<PolyIdeal> {
        PolyIdeal::new(ring, vec![f])
    }

    pub fn unit(ring: RingRef) -> PolyIdeal {
        let one = Polynomial::one(ring.nvars(), MonomialOrder::DegRevLex);
        PolyIdeal { ring, gens: vec![one], basis: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Every generator a single term.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Largest generator degree over the given generators.
    pub fn max_generator_degree(&self) -> Option<u64> {
        self.gens.iter().filter_map(Polynomial::total_degree).max()
    }

    /// The cached degrevlex reduced basis.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = buchberger(self.ring.nvars(), &self.gens, MonomialOrder::DegRevLex)?;
        let _ = self.basis.set(b);
        Ok(self.basis.get().expect("basis just set"))
    }

    /// A reduced basis in an arbitrary order (not cached).
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        if order == MonomialOrder::DegRevLex {
            return self.groebner_basis().cloned();
        }
        buchberger(self.ring.nvars(), &self.gens, order)
    }

    fn check_ring(&self, other: &PolyIdeal) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() == self.ring.nvars() {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("polynomial over {} variables in {}", f.nvars(), self.ring)))
        }
    }

    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        Ok(self.groebner_basis()?.reduces_to_zero(f))
    }

    /// `other ⊆ self`, by membership of each generator of `other`.
    pub fn contains_ideal(&self, other: &PolyIdeal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        PolyIdeal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        PolyIdeal::new(self.ring.clone(), gens)
    }

    /// Generators are all products of `n` generators (with repetition),
    /// so `M^2` of a 3-generator ideal has 6 generators.
    pub fn power(&self, n: u32) -> Result<PolyIdeal> {
        if n == 0 {
            return Ok(PolyIdeal::unit(self.ring.clone()));
        }
        // multisets of size n as non-decreasing index sequences
        let k = self.gens.len();
        let mut gens = Vec::new();
        let mut idx = vec![0usize; n as usize];
        if k == 0 {
            return PolyIdeal::new(self.ring.clone(), gens);
        }
        loop {
            let mut prod = self.gens[idx[0]].clone();
            for &i in &idx[1..] {
                prod = &prod * &self.gens[i];
            }
            gens.push(prod);
            let Some(pos) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < k) else { break };
            let v = idx[pos] + 1;
            for p in &mut idx[pos..] {
                *p = v;
            }
        }
        PolyIdeal::new(self.ring.clone(), gens)
    }

    /// `I ∩ J` by elimination: the part free of `w` in `w·I + (1 - w)·J`,
    /// using a block order with `w` in the first block.
    pub fn intersect(&self, other: &PolyIdeal) -> Result<PolyIdeal> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return PolyIdeal::new(self.ring.clone(), Vec::new());
        }
        check_deadline("intersection")?;
        let elim = MonomialOrder::Elimination { block: 1 };
        let n = self.ring.nvars() + 1;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(f.prepend_variable(1, elim));
        }
        for g in &other.gens {
            gens.push(&g.prepend_variable(0, elim) - &g.prepend_variable(1, elim));
        }
        let gb = buchberger(n, &gens, elim)?;
        let kept: Vec<Polynomial> = gb
            .polys()
            .iter()
            .filter(|p| p.leading_monomial().is_some_and(|m| m.exponent(0) == 0))
            .map(|p| p.drop_first_variable(MonomialOrder::DegRevLex))
            .collect();
        // The kept part is the reduced basis for the restricted order, which is degrevlex.
        let mut kept = kept;
        kept.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
        let basis = buchberger_trusted(self.ring.nvars(), kept);
        Ok(PolyIdeal::with_basis(self.ring.clone(), basis))
    }

    /// Left fold of binary intersections.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a PolyIdeal>) -> Result<PolyIdeal> {
        let mut iter = ideals.into_iter();
        let first = iter.next().ok_or(Error::EmptyDecomposition)?.clone();
        iter.try_fold(first, |acc, next| acc.intersect(next))
    }

    /// `(I : f) = (I ∩ (f)) / f`.
    pub fn quotient(&self, f: &Polynomial) -> Result<PolyIdeal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::Precondition("quotient by the zero polynomial".into()));
        }
        let principal = PolyIdeal::principal(self.ring.clone(), f.clone())?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = g
                .div_exact(f)
                .ok_or_else(|| Error::Internal("generator of I ∩ (f) not divisible by f".into()))?;
            gens.push(q);
        }
        PolyIdeal::new(self.ring.clone(), gens)
    }

    /// Equality of reduced degrevlex bases.
    pub fn equals(&self, other: &PolyIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    /// Equality of reduced bases in the given order.
    pub fn equals_in(&self, other: &PolyIdeal, order: MonomialOrder) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner_basis_in(order)? == other.groebner_basis_in(order)?)
    }

    /// The monomial ideal, when the reduced basis consists of monomials.
    pub fn to_monomial_ideal(&self) -> Result<Option<MonomialIdeal>> {
        let gb = self.groebner_basis()?;
        if !gb.polys().iter().all(Polynomial::is_monomial) {
            return Ok(None);
        }
        MonomialIdeal::new(self.ring.clone(), gb.leading_monomials()).map(Some)
    }
}

/// Wrap a list already known to be a reduced degrevlex basis.
fn buchberger_trusted(nvars: usize, polys: Vec<Polynomial>) -> GroebnerBasis {
    GroebnerBasis::from_reduced(nvars, MonomialOrder::DegRevLex, polys)
}
