//! Exact analysis of the fundamental cone of finite-geometry LDPC codes.
//!
//! The crate builds parity-check matrices from projective planes `PG(2,q)`
//! and reduced Euclidean planes `EG(2,q)` (with `q` a power of two),
//! enumerates the extreme rays of their fundamental cones (the minimal
//! pseudo-codewords), computes channel pseudo-weights and spectra, checks
//! the known pseudo-weight lower bounds, and provides exact ML/LP decision
//! tests plus a floating point sum-product decoder.
//!
//! Everything here is `no_std` with `alloc`. File formats, simulation and
//! the command line front end live in the `fgcone` crate.

#![no_std]
// Dense index loops read better than iterator chains in the linear algebra.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod bounds;
pub mod cone;
pub mod decode;
pub mod error;
pub mod field;
pub mod geometry;
pub mod gf2;
pub mod lincode;
pub mod matrix;
pub mod pweight;
pub mod rational;
pub mod simplex;
pub mod subsets;

pub use cone::{ConeDescription, PseudoCodeword, TypeVector};
pub use error::{Error, Result};
pub use geometry::{Family, Plane};
pub use matrix::ParityCheckMatrix;
pub use pweight::{Channel as PwChannel, Spectrum};
pub use rational::Rational;
