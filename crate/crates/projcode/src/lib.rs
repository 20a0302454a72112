//! Subspace codes in projective space over finite fields.
//!
//! Field and matrix arithmetic, canonical subspaces, the dimension metric,
//! rank-metric codes, constructions, bounds, index encoding and an
//! operator-channel simulator. `no_std` with `alloc`.
#![no_std]
extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod ff;
pub mod matgf;
pub mod subspace;
pub mod distance;
pub mod rankmetric;
pub mod construct;
pub mod bounds;
pub mod enumerate;
pub mod channel;
