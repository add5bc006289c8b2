//! Exact integer, rational and polynomial arithmetic.

pub mod bigint_str;
pub mod hensel;
pub mod nt;
pub mod poly;
pub mod rat;

pub use hensel::{hensel_root_valuations, Decomposition, PlaceValuation};
pub use nt::{kronecker_symbol, mult_order, totient};
pub use poly::{weil_functional_equation, IntPoly};
pub use rat::Rat;
