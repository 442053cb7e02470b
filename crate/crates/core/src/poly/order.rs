use std::cmp::Ordering;

use serde::Serialize;

use crate::monomial::Monomial;

/// A monomial order on exponent vectors, variables in ring index order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    DegRevLex,
    /// Pure lexicographic with `x_0 > x_1 > ...`.
    Lex,
    /// Block order: degrevlex on the first `block` variables, ties broken by
    /// degrevlex on the rest. Any monomial involving the first block is
    /// larger than every monomial free of it.
    Elimination { block: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in ea.iter().zip(eb).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::Elimination { block } => {
                let k = block.min(ea.len());
                degrevlex(&ea[..k], &eb[..k]).then_with(|| degrevlex(&ea[k..], &eb[k..]))
            }
        }
    }
}
