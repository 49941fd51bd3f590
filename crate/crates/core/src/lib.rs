//! Monic Gröbner bases in free associative algebras over commutative rings.

pub mod coeff;
pub mod error;
pub mod gbcheck;
pub mod lhx;
pub mod linalg;
pub mod monoid;
pub mod order;
pub mod pbw;
pub mod poly;
pub mod presentation;
pub mod presets;
pub mod reduce;
mod syntax;

pub use coeff::{CoefficientRing, RingElement};
pub use error::{Error, Result};
pub use monoid::{WeightVector, Word};
pub use order::{MonomialOrder, OrderKind};
pub use poly::{NcPoly, Term};
pub use presentation::Presentation;
