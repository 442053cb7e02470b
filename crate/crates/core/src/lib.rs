//! Exact computations with symbolic powers of ideals.
//!
//! The monomial engine ([`MonomialIdeal`], [`symbolic`]) handles monomial
//! ideals combinatorially. The polynomial engine ([`poly`]) is a small
//! Buchberger-based Gröbner kernel over the rationals used to verify the
//! non-monomial counterexamples in [`cases`]. [`bounds`] audits generator
//! degrees of symbolic powers against linear bounds.

pub mod bounds;
pub mod cases;
pub mod error;
pub mod monomial;
pub mod monomial_ideal;
pub mod poly;
pub mod reproduction;
pub mod ring;
pub mod symbolic;
pub mod text;

pub use error::{Error, Result};
pub use monomial::Monomial;
pub use monomial_ideal::{minimalize, DegreeStats, MonomialIdeal};
pub use poly::{MonomialOrder, PolyIdeal, Polynomial};
pub use ring::{Ring, RingRef};
pub use symbolic::{Decomposition, DecompositionKind, PrimeSelection, SymbolicMethod, VariablePrime};
