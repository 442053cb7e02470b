//! Independent oracles over plain exponent vectors. Nothing here calls the
//! library's ideal algorithms.

#![allow(dead_code)]

use proptest::prelude::*;
use sympow_core::{Monomial, MonomialIdeal, Ring, RingRef};

pub type Exps = Vec<u32>;

/// Case count (overridable by `PROPTEST_CASES`) with no regression files;
/// integration tests have no lib.rs to anchor them.
pub fn config(cases: u32) -> ProptestConfig {
    let cases = std::env::var("PROPTEST_CASES").ok().and_then(|v| v.parse().ok()).unwrap_or(cases);
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

pub fn ring(n: usize) -> RingRef {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    Ring::shared(&names).unwrap()
}

pub fn ideal(ring: &RingRef, gens: &[Exps]) -> MonomialIdeal {
    MonomialIdeal::new(ring.clone(), gens.iter().map(|e| Monomial::new(e.clone())).collect()).unwrap()
}

pub fn exps_of(ideal: &MonomialIdeal) -> Vec<Exps> {
    ideal.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Exps], w: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, w))
}

/// Minimal elements under divisibility, sorted by (degree, exponents).
pub fn minimal(gens: Vec<Exps>) -> Vec<Exps> {
    let mut out: Vec<Exps> = Vec::new();
    for g in &gens {
        let dominated = gens.iter().any(|h| h != g && divides(h, g));
        if !dominated && !out.contains(g) {
            out.push(g.clone());
        }
    }
    out.sort_by_key(|e| (e.iter().map(|&x| x as u64).sum::<u64>(), e.clone()));
    out
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mul(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn intersect(a: &[Exps], b: &[Exps]) -> Vec<Exps> {
    minimal(a.iter().flat_map(|u| b.iter().map(move |v| lcm(u, v))).collect())
}

pub fn power(gens: &[Exps], nvars: usize, n: u32) -> Vec<Exps> {
    let mut acc = vec![vec![0; nvars]];
    for _ in 0..n {
        acc = minimal(acc.iter().flat_map(|u| gens.iter().map(move |g| mul(u, g))).collect());
    }
    acc
}

/// All exponent vectors in `[0, bound]^nvars`.
pub fn boxed(nvars: usize, bound: u32) -> Vec<Exps> {
    let mut out = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|v: Exps| {
                (0..=bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Minimal vertex covers of the supports, by enumerating every subset.
pub fn minimal_covers(gens: &[Exps], nvars: usize) -> Vec<Vec<usize>> {
    let covers: Vec<u32> = (0u32..1 << nvars)
        .filter(|&s| gens.iter().all(|g| g.iter().enumerate().any(|(i, &e)| e > 0 && s & (1 << i) != 0)))
        .collect();
    covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| (0..nvars).filter(|i| s & (1 << i) != 0).collect())
        .collect()
}

/// The n-th symbolic power of a squarefree ideal: `w` belongs iff every
/// minimal cover `C` has `Σ_{i∈C} w_i ≥ n`. Generators have exponents ≤ n.
pub fn squarefree_symbolic(gens: &[Exps], nvars: usize, n: u32) -> Vec<Exps> {
    let covers = minimal_covers(gens, nvars);
    let members = boxed(nvars, n)
        .into_iter()
        .filter(|w| covers.iter().all(|c| c.iter().map(|&i| w[i]).sum::<u32>() >= n))
        .collect();
    minimal(members)
}

pub fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Exps> {
    prop::collection::vec(0..=max_exp, nvars)
}

pub fn nonunit_monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Exps> {
    monomial(nvars, max_exp).prop_filter("not 1", |e| e.iter().any(|&x| x > 0))
}

/// A space of monomial ideals in `nvars` variables.
pub fn gens(nvars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = Vec<Exps>> {
    prop::collection::vec(nonunit_monomial(nvars, max_exp), 1..=max_gens)
}

/// Squarefree generators with degree at most `max_deg`.
pub fn squarefree_gens(nvars: usize, max_deg: usize, max_gens: usize) -> impl Strategy<Value = Vec<Exps>> {
    let one = prop::collection::vec(0..=1u32, nvars)
        .prop_filter("degree in range", move |e| (1..=max_deg).contains(&(e.iter().sum::<u32>() as usize)));
    prop::collection::vec(one, 1..=max_gens)
}
