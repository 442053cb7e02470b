//! Fixtures shared by the benchmarks.

use sympow_core::cases::{builtin_case_a6, CounterexampleCase};
use sympow_core::poly::PolyIdeal;
use sympow_core::MonomialIdeal;

/// Ten squarefree cubics in six variables.
pub fn terai() -> MonomialIdeal {
    sympow_core::reproduction::terai()
}

/// The six-variable binomial case and the squares of its listed primes.
pub fn six_variable_case() -> (CounterexampleCase, Vec<PolyIdeal>) {
    let case = builtin_case_a6();
    let squares = case.primes.iter().map(|p| p.power(2).unwrap()).collect();
    (case, squares)
}
