//! Exact-arithmetic building blocks for finite group actions on
//! Floer-Novikov style chain complexes.
//!
//! The crate is organized around five subject areas:
//!
//! * [`groupcoh`] — finite group cohomology in degree ≤ 2 with `Z/2`
//!   coefficients, central extensions, and invariant ranks of
//!   representations over cyclotomic fields.
//! * [`novikov`] — truncated formal `T`-series, weighted group-ring
//!   elements and period lattices, all over exact rationals.
//! * [`gcomplex`] — graded chain complexes with signed group actions,
//!   invariant subcomplexes, homology ranks, and energy-zero subgroups
//!   of weighted graphs.
//! * [`ainfinity`] — finite A∞-structures with group representations:
//!   relation/equivariance checking, invariant restriction, morphism
//!   averaging, and the weak-action homotopy identity.
//! * [`mirror`] — Laurent-polynomial matrix factorizations over
//!   cyclotomic fields and the rank bookkeeping for the worked
//!   mirror-symmetry examples.
//!
//! Everything is computed exactly: scalars are arbitrary-precision
//! rationals or elements of `Q[t]/Φ_n(t)`; no floating point anywhere.

pub mod ainfinity;
pub mod field;
pub mod formats;
pub mod gcomplex;
pub mod groupcoh;
pub mod intlattice;
pub mod linalg;
pub mod mirror;
pub mod novikov;

pub use field::{Cyc3, Cyclotomic, Gf2, Rat, Scalar};
