//! Gröbner-basis kernel over the rationals.

pub mod groebner;
pub mod ideal;
pub mod order;
pub mod polynomial;

pub use groebner::{buchberger, with_settings, GroebnerBasis, KernelSettings, KernelStats};
pub use ideal::PolyIdeal;
pub use order::MonomialOrder;
pub use polynomial::{int, Coefficient, Polynomial, Term};
