//! Exact constructive projective plane geometry over the rationals.
//!
//! Points and lines are homogeneous integer triples. Apartness is decidable
//! and every construction reports the side condition it needs when that
//! condition fails.

pub mod conic;
pub mod error;
pub mod harmonic;
pub mod hvec;
pub mod matrix;
pub mod oracle;
pub mod plane;
pub mod projectivity;
#[cfg(feature = "random")]
pub mod random;
pub mod scalar;

pub use conic::{conic_through_five, sixth_point, Conic, DualConic, Secant};
pub use error::{GeomError, Result};
pub use harmonic::{harmonic_conjugate, harmonic_conjugate_line, is_harmonic_set, Quadrangle};
pub use hvec::HVec;
pub use matrix::Mat3;
pub use plane::{incident, join, meet, outside, Line, Point};
pub use projectivity::{PencilProjectivity, RangeProjectivity};
pub use scalar::Scalar;
