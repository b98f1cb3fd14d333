//! Stable planar and spherical curves: the S/J/Z move system, the
//! quadratic-cost normalization to canonical curves, order-1 invariants
//! with distance lower bounds, extremal families, and an exact-distance
//! explorer for desk-scale verification.

pub mod code;
pub mod curve;
pub mod invariants;
pub mod error;

pub use code::{Ambient, SignedGaussCode};
pub use curve::{Curve, Loop};
pub use error::{CurveError, Result};
