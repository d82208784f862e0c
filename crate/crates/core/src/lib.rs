//! Exact arithmetic for Alexander polynomials of lens space surgery knots.

pub mod alexander;
pub mod arith;
pub mod catalog;
pub mod laurent;
pub mod lattice;
pub mod params;
pub mod verify;

pub use alexander::{KnotClass, LSpaceClass, Source};
pub use laurent::{LaurentPoly, NonZeroProfile};
pub use lattice::{CoefficientGrid, GridKind, NonZeroCurve, Window};
pub use params::SurgeryParameter;
pub use verify::{Finding, Status, VerificationReport};
