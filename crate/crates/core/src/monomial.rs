//! Exponent-vector monomials.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ring::Ring;

pub(crate) type Exponents = SmallVec<[u32; 8]>;

/// A monomial `x_1^{e_1} ... x_m^{e_m}`, stored as its exponent vector.
///
/// The degree is cached and always equals the exponent sum. The canonical
/// ordering (`Ord`) is ascending by degree, then lexicographic on the
/// exponent vector with variables in ring order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u64,
}

impl Monomial {
    pub fn new(exps: impl Into<Vec<u32>>) -> Monomial {
        let exps: Vec<u32> = exps.into();
        Monomial::from_exps(Exponents::from_vec(exps))
    }

    pub(crate) fn from_exps(exps: Exponents) -> Monomial {
        let degree = exps.iter().map(|&e| e as u64).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn variable(nvars: usize, index: usize) -> Monomial {
        Monomial::variable_power(nvars, index, 1)
    }

    pub fn variable_power(nvars: usize, index: usize, exponent: u32) -> Monomial {
        let mut exps = Exponents::from_elem(0, nvars);
        exps[index] = exponent;
        Monomial { exps, degree: exponent as u64 }
    }

    /// Product of the variables whose indices are listed.
    pub fn product_of(nvars: usize, indices: impl IntoIterator<Item = usize>) -> Monomial {
        let mut exps = Exponents::from_elem(0, nvars);
        for i in indices {
            exps[i] = 1;
        }
        Monomial::from_exps(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// Support as a bitmask. Only meaningful for rings with at most 64 variables.
    pub(crate) fn support_mask(&self) -> u64 {
        self.support().fold(0u64, |m, i| m | (1u64 << i))
    }

    /// `Some(i)` when the monomial is a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut support = self.support();
        let first = support.next()?;
        support.next().is_none().then_some(first)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Exponents>>()?;
        Ok(Monomial { exps, degree: self.degree + other.degree })
    }

    /// Product used by the polynomial kernel.
    ///
    /// Panics on exponent overflow; kernel exponents are bounded by the
    /// degrees of the input generators, far below `u32::MAX`.
    pub(crate) fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow in polynomial arithmetic")
    }

    pub fn checked_pow(&self, n: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<Exponents>>()?;
        Ok(Monomial::from_exps(exps))
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.saturating_div(other))
    }

    /// Componentwise `max(a_i - b_i, 0)`, the generator of `(self) : (other)`.
    pub fn saturating_div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_exps(self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect())
    }

    /// Exponents clamped to 0/1.
    pub fn support_monomial(&self) -> Monomial {
        Monomial::from_exps(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    /// Drop the first variable.
    pub(crate) fn drop_first(&self) -> Monomial {
        Monomial::from_exps(self.exps[1..].iter().copied().collect())
    }

    /// Prepend a variable with the given exponent at index 0.
    pub(crate) fn prepend(&self, exponent: u32) -> Monomial {
        let mut exps = Exponents::with_capacity(self.exps.len() + 1);
        exps.push(exponent);
        exps.extend_from_slice(&self.exps);
        Monomial { exps, degree: self.degree + exponent as u64 }
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        MonomialDisplay { monomial: self, ring }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps.as_slice())
    }
}

fn check_len(u: &Monomial, v: &Monomial) -> Result<()> {
    if u.nvars() == v.nvars() {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!("monomials over {} and {} variables", u.nvars(), v.nvars())))
    }
}

/// Least common multiple: the componentwise maximum of exponent vectors.
pub fn lcm(u: &Monomial, v: &Monomial) -> Result<Monomial> {
    check_len(u, v)?;
    Ok(u.lcm(v))
}

pub fn divides(u: &Monomial, v: &Monomial) -> Result<bool> {
    check_len(u, v)?;
    Ok(u.divides(v))
}

/// Prints as `x^2*y`, factors in ring order, `1` for the unit monomial.
pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
