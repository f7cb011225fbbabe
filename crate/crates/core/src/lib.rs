//! Exact-arithmetic toolkit for finite-dimensional Lie algebras over ℚ and
//! their extensions.
//!
//! Everything here is computed over arbitrary-precision rationals — there is
//! no floating point anywhere, so every decision procedure (equivalence of
//! extensions, vanishing of an obstruction class, splitness) returns an exact
//! yes/no, never an approximation.
//!
//! The crate is organised bottom-up:
//!
//! - [`linalg`]: dense rational matrices, reduced row echelon form, canonical
//!   subspaces, linear solving and quotients. All higher layers reduce their
//!   questions to these primitives.
//! - [`lie`]: Lie algebras given by structure constants, representations,
//!   derivations, centers, and the outer-derivation algebra `der(h)/ad(h)`.
//! - [`cochain`]: alternating multilinear forms with values in a vector
//!   space, together with the differential-style operators on them.
//! - [`cohomology`]: Chevalley–Eilenberg cohomology of a representation —
//!   dimensions, representative cocycles, coboundary tests, classes.
//! - [`ext`]: extensions `0 → h → e → g → 0` described by a pair `(α, ρ)`
//!   relative to a section, their equivalence, splitting, classification by
//!   outer actions, and the degree-3 obstruction class.
//! - [`io`]: the JSON file formats understood by the `liext` command-line
//!   tool, with byte-stable canonical serialization.
//! - [`cli`]: the command-line driver itself (the `liext` binary is a thin
//!   wrapper around [`cli::run`]).
//!
//! [`samples`] provides the small algebras used throughout the tests and
//! documentation: abelian algebras, the 3-dimensional Heisenberg algebra,
//! `sl2`, and the nonabelian 2-dimensional algebra.

pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod ext;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod samples;

pub use linalg::Rat;
