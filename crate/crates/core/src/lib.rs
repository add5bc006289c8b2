pub mod amitsur;
pub mod arith;
pub mod classify;
pub mod error;
pub mod fields;
pub mod weil;

pub use error::{Error, Result};
