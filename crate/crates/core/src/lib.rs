//! Exact algebra for pure Betti rays and related certificates.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable values; no floating point is used anywhere.
//!
//! - [`exactcore`]: big rationals, integer polynomials, GF(2) polynomials,
//!   exact linear solving and GF(2) kernels.
//! - [`pureray`]: degree sequences, Herzog–Kühl residuals and primitive
//!   integral points.
//! - [`hilbert`]: alternating Betti polynomials, PBW Hilbert series and
//!   divisibility verdicts.
//! - [`obstruction`]: Krull and Lie-algebra realizability verdicts and the
//!   counterexample search.
//! - [`groupring`]: the ε-basis group ring `A[(Z/2Z)^m]` over a GF(2)
//!   polynomial base ring.
//! - [`intpoly`]: valuations on `F2(t)` and the integer-valued polynomial
//!   certificates over `D = F2 + t(t+1)T`.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

mod error;
pub mod exactcore;
pub mod groupring;
pub mod hilbert;
pub mod intpoly;
pub mod obstruction;
pub mod pureray;

pub use error::{Error, Result};
