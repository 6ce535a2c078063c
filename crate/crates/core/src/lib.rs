//! Invariants of plane-curve cusp collections and the criteria built on them.
//!
//! A collection of cusp types (multiplicity sequences, Newton pairs or
//! semigroup generators) determines counting functions `H_i`, Alexander
//! polynomials `Δ_i`, and from those the functions `H` (min-convolution) and
//! `F` (sequence calculus on the `Δ_i`). Those feed
//!
//! - the Bézout and Borodzik–Livingston tests for rational cuspidal curve
//!   candidates, and the two conjectured inequalities on `F` ([`criteria`]);
//! - the normalized Euler characteristics of the lattice cohomology of the
//!   surgery manifold `S³₋d(K)` ([`invariants`]);
//! - a brute-force cubical-complex oracle for those Euler characteristics
//!   ([`cubical`]).

pub mod cli;
pub mod criteria;
pub mod cubical;
pub mod cusp;
pub mod error;
pub mod invariants;
pub mod semigroup;
pub mod seqcalc;
pub mod series;

pub use cusp::CuspType;
pub use error::{Error, Result};
pub use invariants::{CuspCollection, EuReport, IntPoly};
pub use semigroup::{AperySet, MultSeq, NewtonPairs, Semigroup};
pub use seqcalc::{CountingFn, IntSeq};
