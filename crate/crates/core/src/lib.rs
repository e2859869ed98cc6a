//! Optical orthogonal codes from multi-orbit cyclic subspace codes.
//!
//! The construction runs in four steps:
//!
//! 1. pick `k`-dimensional `F_q`-subspaces `U_1..U_r` of `F_{q^m}` whose orbits
//!    under `F_{q^m}^*` form a cyclic subspace code of minimum distance `d`
//!    ([`subspace`]);
//! 2. translate each `U_i` by pairwise non-proportional quotient
//!    representatives, giving the affine family `A(U_1..U_r)`;
//! 3. take discrete logarithms of every coset to get subsets of `Z_{q^m-1}`;
//! 4. read those subsets as supports of binary words ([`ooc`]).
//!
//! The result is a `(q^m - 1, q^k, q^{k-d/2})` optical orthogonal code with
//! `r (q^{m-k} - 1)/(q - 1)` codewords, and every run re-checks the
//! correlation properties by exhaustive shift sweeps.

pub mod error;
pub mod field;
pub mod io;
pub mod ooc;
pub mod subspace;

pub use error::{Error, Result};
