//! Buchberger's algorithm over the rationals.
//!
//! Internally every polynomial is kept as a primitive integer polynomial with
//! positive leading coefficient; reductions are fraction-free and the
//! content is removed after each one. Only the final reduced basis is
//! converted back to monic rational polynomials.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::order::MonomialOrder;
use super::polynomial::{Polynomial, Term};
use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Per-thread kernel settings.
#[derive(Debug, Clone, Copy, Default)]
pub struct KernelSettings {
    /// Verify the Buchberger postconditions on every basis computed.
    pub self_check: bool,
    /// Abort with [`Error::BudgetExhausted`] once passed.
    pub deadline: Option<Instant>,
}

/// Counters accumulated while a settings scope is active.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KernelStats {
    pub bases_computed: usize,
    pub bases_checked: usize,
    pub pairs_reduced: usize,
    pub pairs_pruned: usize,
}

#[derive(Default)]
struct Session {
    settings: KernelSettings,
    stats: KernelStats,
}

thread_local! {
    static SESSION: RefCell<Session> = RefCell::new(Session::default());
}

/// Run `f` on this thread with the given kernel settings and return the
/// statistics gathered meanwhile. The previous settings are restored
/// afterwards and the statistics are also added to the enclosing scope.
pub fn with_settings<R>(settings: KernelSettings, f: impl FnOnce() -> R) -> (R, KernelStats) {
    struct Restore(Option<Session>);
    impl Drop for Restore {
        fn drop(&mut self) {
            if let Some(mut saved) = self.0.take() {
                SESSION.with(|s| {
                    let inner = s.borrow().stats;
                    saved.stats.bases_computed += inner.bases_computed;
                    saved.stats.bases_checked += inner.bases_checked;
                    saved.stats.pairs_reduced += inner.pairs_reduced;
                    saved.stats.pairs_pruned += inner.pairs_pruned;
                    *s.borrow_mut() = saved;
                });
            }
        }
    }
    let fresh = Session { settings, stats: KernelStats::default() };
    let guard = Restore(Some(SESSION.with(|s| std::mem::replace(&mut *s.borrow_mut(), fresh))));
    let result = f();
    let stats = SESSION.with(|s| s.borrow().stats);
    drop(guard);
    (result, stats)
}

pub(crate) fn current_settings() -> KernelSettings {
    SESSION.with(|s| s.borrow().settings)
}

fn record(f: impl FnOnce(&mut KernelStats)) {
    SESSION.with(|s| f(&mut s.borrow_mut().stats));
}

pub(crate) fn check_deadline(stage: &str) -> Result<()> {
    match current_settings().deadline {
        Some(d) if Instant::now() > d => Err(Error::BudgetExhausted(stage.to_string())),
        _ => Ok(()),
    }
}

type ITerm = (Monomial, BigInt);

#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    terms: Vec<ITerm>,
    sugar: u64,
}

impl IntPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: MonomialOrder) -> IntPoly {
        let p = p.with_order(order);
        let denom_lcm = p.terms().iter().fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let terms = p
            .terms()
            .iter()
            .map(|t| (t.monomial.clone(), t.coeff.numer() * (&denom_lcm / t.coeff.denom())))
            .collect();
        let sugar = p.total_degree().unwrap_or(0);
        let mut ip = IntPoly { terms, sugar };
        ip.make_primitive();
        ip
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn make_primitive(&mut self) {
        let negate = self.terms.first().is_some_and(|t| t.1.is_negative());
        divide_content(&mut self.terms, negate);
    }

    fn to_monic(&self, nvars: usize, order: MonomialOrder) -> Polynomial {
        let lc = self.lc().clone();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Term { coeff: BigRational::new(c.clone(), lc.clone()), monomial: m.clone() })
            .collect();
        Polynomial::from_sorted_terms(nvars, order, terms)
    }
}

/// Divide by the gcd of all coefficients, negated when `negate`.
fn divide_content(terms: &mut [ITerm], negate: bool) {
    let Some(first) = terms.first() else { return };
    let mut g = first.1.abs();
    for (_, c) in &terms[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    if !g.is_one() || negate {
        let g = if negate { -g } else { g };
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn max_bits(terms: &[ITerm]) -> u64 {
    terms.iter().map(|t| t.1.bits()).max().unwrap_or(0)
}

/// `a·p - b·q·g` for descending term slices.
fn axpy(a: &BigInt, p: &[ITerm], b: &BigInt, q: &Monomial, g: &[ITerm], order: MonomialOrder) -> Vec<ITerm> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let scale = |c: &BigInt| if a.is_one() { c.clone() } else { a * c };
    let (mut i, mut j) = (0, 0);
    let mut gj: Option<Monomial> = g.first().map(|t| t.0.mul(q));
    while i < p.len() {
        let Some(gm) = gj.as_ref() else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push((p[i].0.clone(), scale(&p[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gj.take().unwrap(), -(b * &g[j].1)));
                j += 1;
                gj = g.get(j).map(|t| t.0.mul(q));
            }
            Ordering::Equal => {
                let c = scale(&p[i].1) - b * &g[j].1;
                if !c.is_zero() {
                    out.push((gj.take().unwrap(), c));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|t| t.0.mul(q));
            }
        }
    }
    out.extend(p[i..].iter().map(|(m, c)| (m.clone(), scale(c))));
    if let Some(gm) = gj {
        out.push((gm, -(b * &g[j].1)));
        out.extend(g[j + 1..].iter().map(|(m, c)| (m.mul(q), -(b * c))));
    }
    out
}

struct Reducers<'a> {
    polys: Vec<&'a IntPoly>,
    masks: Vec<u64>,
}

fn mask(m: &Monomial) -> u64 {
    m.exponents().iter().enumerate().fold(0u64, |acc, (i, &e)| if e > 0 { acc | (1u64 << (i % 64)) } else { acc })
}

impl<'a> Reducers<'a> {
    fn new(polys: impl IntoIterator<Item = &'a IntPoly>) -> Reducers<'a> {
        let polys: Vec<&IntPoly> = polys.into_iter().filter(|p| !p.is_zero()).collect();
        let masks = polys.iter().map(|p| mask(p.lm())).collect();
        Reducers { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<&'a IntPoly> {
        let mm = mask(m);
        self.polys
            .iter()
            .zip(&self.masks)
            .find(|(p, &pm)| pm & !mm == 0 && p.lm().divides(m))
            .map(|(p, _)| *p)
    }
}

/// Reduce `p` by `reducers`: everything when `full`, only the head otherwise.
fn reduce(p: IntPoly, reducers: &Reducers<'_>, order: MonomialOrder, full: bool) -> IntPoly {
    match reduce_with(p, reducers, order, full, &mut || Ok(())) {
        Ok(r) => r,
        Err(_) => unreachable!("no budget check"),
    }
}

/// [`reduce`] that also honours the session deadline.
fn reduce_checked(p: IntPoly, reducers: &Reducers<'_>, order: MonomialOrder, full: bool) -> Result<IntPoly> {
    reduce_with(p, reducers, order, full, &mut || check_deadline("polynomial reduction"))
}

fn reduce_with(
    p: IntPoly,
    reducers: &Reducers<'_>,
    order: MonomialOrder,
    full: bool,
    tick: &mut dyn FnMut() -> Result<()>,
) -> Result<IntPoly> {
    let IntPoly { mut terms, mut sugar } = p;
    let mut pos = 0;
    let mut steps = 0u32;
    // Fraction-free steps multiply the whole polynomial by leading
    // coefficients; strip the content once coefficients double in size.
    let mut baseline = max_bits(&terms);
    while pos < terms.len() {
        let Some(g) = reducers.find(&terms[pos].0) else {
            if !full {
                break;
            }
            pos += 1;
            continue;
        };
        steps = steps.wrapping_add(1);
        if steps.is_multiple_of(256) {
            tick()?;
        }
        let q = terms[pos].0.saturating_div(g.lm());
        let c = &terms[pos].1;
        let gcd = c.gcd(g.lc());
        let a = g.lc() / &gcd;
        let b = c / &gcd;
        let tail = axpy(&a, &terms[pos + 1..], &b, &q, &g.terms[1..], order);
        if !a.is_one() {
            for t in &mut terms[..pos] {
                t.1 = &t.1 * &a;
            }
        }
        terms.truncate(pos);
        terms.extend(tail);
        sugar = sugar.max(q.degree() + g.sugar);
        let bits = terms.get(pos).map_or(0, |t| t.1.bits());
        if bits > 2 * baseline + 64 {
            divide_content(&mut terms, false);
            baseline = max_bits(&terms);
        }
    }
    let mut out = IntPoly { terms, sugar };
    out.make_primitive();
    Ok(out)
}

fn s_polynomial(f: &IntPoly, g: &IntPoly, order: MonomialOrder) -> IntPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.saturating_div(f.lm());
    let mg = l.saturating_div(g.lm());
    let gcd = f.lc().gcd(g.lc());
    let a = g.lc() / &gcd;
    let b = f.lc() / &gcd;
    // a·mf·f - b·mg·g, leading terms cancel
    let left: Vec<ITerm> = f.terms[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    let terms = axpy(&a, &left, &b, &mg, &g.terms[1..], order);
    let sugar = (f.sugar + mf.degree()).max(g.sugar + mg.degree());
    let mut s = IntPoly { terms, sugar };
    s.make_primitive();
    s
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct Buchberger {
    order: MonomialOrder,
    polys: Vec<IntPoly>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    pruned: usize,
}

impl Buchberger {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lm()
    }

    /// Gebauer–Möller installation of a new element: prune new pairs by the
    /// coprime and chain criteria, drop old pairs the new lead monomial
    /// makes redundant, and remove basis elements whose lead it divides.
    fn update(&mut self, h: IntPoly) {
        let hi = self.polys.len();
        let h_lm = h.lm().clone();
        let h_sugar = h.sugar;
        self.polys.push(h);

        let mut candidates: Vec<(usize, Monomial)> =
            self.basis.iter().map(|&g| (g, h_lm.lcm(self.lm(g)))).collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = h_lm.is_coprime(self.lm(g1));
            let dominated = candidates.iter().chain(kept.iter()).any(|(_, l2)| l2.divides(&l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            } else {
                self.pruned += 1;
            }
        }
        let before = self.pairs.len();
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !(h_lm.divides(&p.lcm)
                    && self.lm(p.i).lcm(&h_lm) != p.lcm
                    && self.lm(p.j).lcm(&h_lm) != p.lcm)
            })
            .collect();
        self.pruned += before - self.pairs.len();
        for (g, l) in kept {
            if h_lm.is_coprime(self.lm(g)) {
                self.pruned += 1;
                continue;
            }
            let sugar = (h_sugar + l.degree() - h_lm.degree()).max(self.polys[g].sugar + l.degree() - self.lm(g).degree());
            self.pairs.push(Pair { i: g, j: hi, lcm: l, sugar });
        }
        let basis = std::mem::take(&mut self.basis);
        self.basis = basis.into_iter().filter(|&g| !h_lm.divides(self.lm(g))).collect();
        self.basis.push(hi);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            let first = if order == MonomialOrder::DegRevLex { p.sugar.cmp(&q.sugar) } else { order.cmp(&p.lcm, &q.lcm) };
            first
                .then_with(|| p.lcm.degree().cmp(&q.lcm.degree()))
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers::new(self.basis.iter().map(|&i| &self.polys[i]))
    }
}

/// A reduced Gröbner basis: monic, interreduced, sorted ascending by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

/// Compute the reduced Gröbner basis of the ideal generated by `gens`.
///
/// Critical pairs are selected by sugar degree under degrevlex and by the
/// smallest lcm in the term order otherwise (the normal strategy); sugar
/// on lex or elimination orders can wander into huge intermediate
/// elements. New elements are fully reduced. An empty or all-zero input
/// yields the empty basis of the zero ideal.
pub fn buchberger(nvars: usize, gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    check_deadline("groebner basis")?;
    let inputs: Vec<IntPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| IntPoly::from_poly(g, order)).collect();
    let mut state = Buchberger { order, polys: Vec::new(), basis: Vec::new(), pairs: Vec::new(), pruned: 0 };
    for p in inputs.iter().cloned() {
        let r = reduce_checked(p, &state.reducers(), order, true)?;
        if !r.is_zero() {
            state.update(r);
        }
    }
    let mut reduced_pairs = 0;
    while let Some(pair) = state.select() {
        check_deadline("groebner basis")?;
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j], order);
        reduced_pairs += 1;
        if s.is_zero() {
            continue;
        }
        let r = reduce_checked(s, &state.reducers(), order, true)?;
        if !r.is_zero() {
            state.update(r);
        }
    }
    let pruned = state.pruned;
    let basis = interreduce(state.basis.iter().map(|&i| state.polys[i].clone()).collect(), order);
    let polys = basis.iter().map(|p| p.to_monic(nvars, order)).collect();
    let gb = GroebnerBasis { nvars, order, polys };
    record(|s| {
        s.bases_computed += 1;
        s.pairs_reduced += reduced_pairs;
        s.pairs_pruned += pruned;
    });
    if current_settings().self_check {
        gb.verify(gens)?;
        record(|s| s.bases_checked += 1);
    }
    Ok(gb)
}

/// Minimize leading monomials and fully reduce every element by the others.
fn interreduce(mut basis: Vec<IntPoly>, order: MonomialOrder) -> Vec<IntPoly> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<IntPoly> = Vec::with_capacity(basis.len());
    for p in basis {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p));
        out.push(reduce(minimal[i].clone(), &others, order, true));
    }
    out
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(nvars: usize, order: MonomialOrder, polys: Vec<Polynomial>) -> GroebnerBasis {
        GroebnerBasis { nvars, order, polys }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// True for the basis `{1}` of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p.leading_monomial().unwrap().clone()).collect()
    }

    /// The unique remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        f.with_order(self.order).normal_form(&self.polys)
    }

    /// Membership by fraction-free reduction to zero.
    pub fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        let ints: Vec<IntPoly> = self.polys.iter().map(|p| IntPoly::from_poly(p, self.order)).collect();
        let reducers = Reducers::new(ints.iter());
        reduce(IntPoly::from_poly(f, self.order), &reducers, self.order, false).is_zero()
    }

    /// Check the defining properties of a reduced basis of `⟨inputs⟩`:
    /// monic, interreduced, every S-polynomial and every input reduces to 0.
    pub fn verify(&self, inputs: &[Polynomial]) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(format!("groebner postcondition: {what}")));
        let ints: Vec<IntPoly> = self.polys.iter().map(|p| IntPoly::from_poly(p, self.order)).collect();
        for (i, p) in self.polys.iter().enumerate() {
            if !p.leading_coeff().is_some_and(|c| c.is_one()) {
                return fail(format!("element {i} is not monic"));
            }
            if !p.coefficients_normalized() {
                return fail(format!("element {i} has unnormalized coefficients"));
            }
            for (j, q) in self.polys.iter().enumerate() {
                let lm = q.leading_monomial().unwrap();
                if i != j && p.terms().iter().any(|t| lm.divides(&t.monomial)) {
                    return fail(format!("element {i} is not reduced by element {j}"));
                }
            }
        }
        let reducers = Reducers::new(ints.iter());
        for i in 0..ints.len() {
            for j in i + 1..ints.len() {
                let s = s_polynomial(&ints[i], &ints[j], self.order);
                if !reduce(s, &reducers, self.order, false).is_zero() {
                    return fail(format!("S-polynomial ({i}, {j}) does not reduce to 0"));
                }
            }
        }
        for (k, f) in inputs.iter().enumerate() {
            if !f.is_zero() && !reduce(IntPoly::from_poly(f, self.order), &reducers, self.order, false).is_zero() {
                return fail(format!("input {k} does not reduce to 0"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::int;

    fn var(n: usize, i: usize, o: MonomialOrder) -> Polynomial {
        Polynomial::variable(n, i, o)
    }

    #[test]
    fn linear_lex_example() {
        let o = MonomialOrder::Lex;
        let (x, y, z) = (var(3, 0, o), var(3, 1, o), var(3, 2, o));
        let gb = buchberger(3, &[&x - &y, &y - &z], o).unwrap();
        assert_eq!(gb.polys(), &[&y - &z, &x - &z]);
        gb.verify(&[&x - &y, &y - &z]).unwrap();
    }

    #[test]
    fn monomial_input_gives_minimal_generators() {
        let o = MonomialOrder::DegRevLex;
        let (x, y) = (var(2, 0, o), var(2, 1, o));
        let gens = [(&x * &y).scale(&int(3)), &(&x * &x) * &y, y.scale(&int(-2)).pow(2)];
        let gb = buchberger(2, &gens, o).unwrap();
        assert_eq!(gb.polys(), &[&y * &y, &x * &y]);
    }

    #[test]
    fn unit_ideal() {
        let o = MonomialOrder::DegRevLex;
        let x = var(2, 0, o);
        let gb = buchberger(2, &[x.clone(), &x - &Polynomial::one(2, o)], o).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn zero_ideal() {
        let gb = buchberger(2, &[Polynomial::zero(2, MonomialOrder::DegRevLex)], MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn twisted_cubic() {
        let o = MonomialOrder::DegRevLex;
        let v: Vec<Polynomial> = (0..4).map(|i| var(4, i, o)).collect();
        let gens = [
            &(&v[0] * &v[2]) - &(&v[1] * &v[1]),
            &(&v[1] * &v[3]) - &(&v[2] * &v[2]),
            &(&v[0] * &v[3]) - &(&v[1] * &v[2]),
        ];
        let (gb, stats) = with_settings(KernelSettings { self_check: true, deadline: None }, || buchberger(4, &gens, o));
        let gb = gb.unwrap();
        assert_eq!(gb.len(), 3);
        assert_eq!(stats.bases_checked, 1);
    }

    #[test]
    fn lex_basis_without_coefficient_swell() {
        let ring = crate::Ring::shared(&["x", "y", "z"]).unwrap();
        let gens = crate::text::parse_generators(&ring, "3*x^3 + y*z + 3, 2*x^2*z - 3*y^2*z + x*z, 3*x*y*z + 2*x*z + 1")
            .unwrap()
            .into_iter()
            .map(|g| g.with_order(MonomialOrder::Lex))
            .collect::<Vec<_>>();
        let deadline = Some(Instant::now() + std::time::Duration::from_secs(20));
        let (gb, _) = with_settings(KernelSettings { deadline, self_check: true }, || buchberger(3, &gens, MonomialOrder::Lex));
        let gb = gb.unwrap();
        // x - p(z), y - q(z), and a degree-9 polynomial in z.
        assert_eq!(gb.len(), 3);
        assert_eq!(gb.leading_monomials().iter().map(|m| m.exponents().to_vec()).collect::<Vec<_>>(), [
            vec![0, 0, 9],
            vec![0, 1, 0],
            vec![1, 0, 0]
        ]);
    }

    #[test]
    fn deadline_aborts() {
        let o = MonomialOrder::DegRevLex;
        let v: Vec<Polynomial> = (0..3).map(|i| var(3, i, o)).collect();
        let gens = [&(&v[0] * &v[0]) - &v[1], &(&v[1] * &v[1]) - &v[2]];
        let past = Instant::now() - std::time::Duration::from_secs(1);
        let (r, _) = with_settings(KernelSettings { self_check: false, deadline: Some(past) }, || buchberger(3, &gens, o));
        assert!(matches!(r, Err(Error::BudgetExhausted(_))));
    }
}
