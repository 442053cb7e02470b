//! Sparse polynomials with exact rational coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use crate::monomial::Monomial;
use crate::ring::Ring;

pub type Coefficient = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Coefficient,
    pub monomial: Monomial,
}

/// A polynomial as a list of terms, strictly descending under `order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Polynomial {
        Polynomial { nvars, order, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Coefficient) -> Polynomial {
        Polynomial::from_terms(nvars, order, vec![Term { coeff: c, monomial: Monomial::one(nvars) }])
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Polynomial {
        Polynomial::constant(nvars, order, Coefficient::one())
    }

    pub fn from_monomial(monomial: Monomial, order: MonomialOrder) -> Polynomial {
        let nvars = monomial.nvars();
        Polynomial { nvars, order, terms: vec![Term { coeff: Coefficient::one(), monomial }] }
    }

    pub fn variable(nvars: usize, index: usize, order: MonomialOrder) -> Polynomial {
        Polynomial::from_monomial(Monomial::variable(nvars, index), order)
    }

    /// Combine like terms, drop zeros and sort.
    pub fn from_terms(nvars: usize, order: MonomialOrder, mut terms: Vec<Term>) -> Polynomial {
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            debug_assert_eq!(t.monomial.nvars(), nvars);
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => last.coeff += t.coeff,
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff.is_zero() {
                            out.pop();
                        }
                    }
                    out.push(t)
                }
            }
        }
        if out.last().is_some_and(|t| t.coeff.is_zero()) {
            out.pop();
        }
        Polynomial { nvars, order, terms: out }
    }

    /// Terms already sorted strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(nvars: usize, order: MonomialOrder, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial { nvars, order, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    /// A single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].monomial.degree() == w[1].monomial.degree())
    }

    /// Re-sort under another order; the term multiset is unchanged.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        Polynomial { nvars: self.nvars, order, terms }
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.clone() }).collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    pub fn mul_term(&self, c: &Coefficient, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        // multiplication by a monomial preserves the order of terms
        let terms = self.terms.iter().map(|t| Term { coeff: &t.coeff * c, monomial: t.monomial.mul(m) }).collect();
        Polynomial { nvars: self.nvars, order: self.order, terms }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars, self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self / divisor` when the division is exact.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let lt = divisor.leading_term()?;
        let divisor = divisor.with_order(self.order);
        let lt = Term { coeff: lt.coeff.clone(), monomial: divisor.leading_monomial().unwrap().clone() };
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(head) = rest.leading_term() {
            let m = head.monomial.checked_div(&lt.monomial)?;
            let c = &head.coeff / &lt.coeff;
            rest = &rest - &divisor.mul_term(&c, &m);
            quotient.push(Term { coeff: c, monomial: m });
        }
        Some(Polynomial::from_sorted_terms(self.nvars, self.order, quotient))
    }

    /// Multivariate division remainder by `divisors`, in list order.
    ///
    /// Each step cancels the current leading term with the first divisor whose
    /// leading monomial divides it, otherwise moves that term to the remainder.
    pub fn normal_form(&self, divisors: &[Polynomial]) -> Polynomial {
        let divisors: Vec<Polynomial> =
            divisors.iter().filter(|d| !d.is_zero()).map(|d| d.with_order(self.order).monic()).collect();
        let mut rest = self.clone();
        let mut remainder = Vec::new();
        while let Some(head) = rest.terms.first().cloned() {
            match divisors.iter().find(|d| d.terms[0].monomial.divides(&head.monomial)) {
                Some(d) => {
                    let m = head.monomial.saturating_div(&d.terms[0].monomial);
                    rest = &rest - &d.mul_term(&head.coeff, &m);
                }
                None => {
                    remainder.push(head);
                    rest.terms.remove(0);
                }
            }
        }
        Polynomial::from_sorted_terms(self.nvars, self.order, remainder)
    }

    /// Add a variable with exponent `exponent` in front of every term.
    pub(crate) fn prepend_variable(&self, exponent: u32, order: MonomialOrder) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.prepend(exponent) }).collect();
        Polynomial::from_terms(self.nvars + 1, order, terms)
    }

    /// Drop the first variable, which must not occur.
    pub(crate) fn drop_first_variable(&self, order: MonomialOrder) -> Polynomial {
        debug_assert!(self.terms.iter().all(|t| t.monomial.exponent(0) == 0));
        let terms = self.terms.iter().map(|t| Term { coeff: t.coeff.clone(), monomial: t.monomial.drop_first() }).collect();
        Polynomial::from_terms(self.nvars - 1, order, terms)
    }

    /// All coefficients in lowest terms with positive denominators.
    pub fn coefficients_normalized(&self) -> bool {
        self.terms.iter().all(|t| {
            let d = t.coeff.denom();
            d.is_positive() && num_integer::Integer::gcd(t.coeff.numer(), d).is_one()
        })
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, ring }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let converted;
        let other = if other.order == self.order {
            other
        } else {
            converted = other.with_order(self.order);
            &converted
        };
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Coefficient| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { coeff: sign(&b[j].coeff), monomial: b[j].monomial.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].coeff - &b[j].coeff } else { &a[i].coeff + &b[j].coeff };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, monomial: a[i].monomial.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term { coeff: sign(&t.coeff), monomial: t.monomial.clone() }));
        Polynomial { nvars: self.nvars, order, terms: out }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coefficient::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                terms.push(Term { coeff: &a.coeff * &b.coeff, monomial: a.monomial.mul(&b.monomial) });
            }
        }
        Polynomial::from_terms(self.nvars, self.order, terms)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter().map(|t| (t.coeff.to_string(), t.monomial.exponents().to_vec()))).finish()
    }
}

/// Terms in descending degrevlex, explicit signs, unit coefficients omitted.
pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    ring: &'a Ring,
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.poly.with_order(MonomialOrder::DegRevLex);
        if p.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in p.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", t.monomial.display(self.ring))?;
            }
        }
        Ok(())
    }
}

/// Shorthand for an integer coefficient.
pub fn int(c: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    const O: MonomialOrder = MonomialOrder::DegRevLex;

    fn var(i: usize) -> Polynomial {
        Polynomial::variable(3, i, O)
    }

    #[test]
    fn arithmetic() {
        let (x, y) = (var(0), var(1));
        let d = &x - &y;
        let sq = &d * &d;
        assert_eq!(sq.terms().len(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.div_exact(&d).unwrap(), d);
        assert!(sq.div_exact(&(&x + &var(2))).is_none());
        assert_eq!(d.pow(2), sq);
    }

    #[test]
    fn display_format() {
        let ring = Ring::new(&["x", "y", "z"]).unwrap();
        let (x, y) = (var(0), var(1));
        let p = &(&(&x * &x) - &(&x * &y).scale(&int(2))) + &Polynomial::one(3, O);
        assert_eq!(p.display(&ring).to_string(), "x^2 - 2*x*y + 1");
        assert_eq!((-&x).display(&ring).to_string(), "-x");
        assert_eq!(Polynomial::zero(3, O).display(&ring).to_string(), "0");
    }

    #[test]
    fn normal_form_examples() {
        let (x, y) = (var(0), var(1));
        let f = &(&x * &y) - &y;
        assert!(f.normal_form(std::slice::from_ref(&f)).is_zero());
        assert!((&x * &x).normal_form(std::slice::from_ref(&x)).is_zero());
        // y - z against x*y: no leading-term divisibility
        let g = &y - &var(2);
        assert_eq!(g.normal_form(&[&x * &y]), g);
    }

    #[test]
    fn order_change_keeps_terms() {
        let p = &(&var(0) * &var(2)) + &(&var(1) * &var(1));
        let q = p.with_order(MonomialOrder::Lex);
        assert_ne!(p.leading_monomial(), q.leading_monomial());
        let mut a: Vec<_> = p.terms().to_vec();
        let mut b: Vec<_> = q.terms().to_vec();
        a.sort_by(|s, t| s.monomial.cmp(&t.monomial));
        b.sort_by(|s, t| s.monomial.cmp(&t.monomial));
        assert_eq!(a, b);
    }
}
