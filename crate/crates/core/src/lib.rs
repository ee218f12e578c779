//! Exact computer algebra for infinitesimal bialgebras.
//!
//! Infinitesimal bialgebras (ε-bialgebras) are triples `(A, μ, Δ)` where the
//! coproduct is a derivation: `Δ(ab) = a·Δ(b) + Δ(a)·b`. This crate presents
//! them by exact rational structure constants (or ℤ-indexed closed-form
//! rules), builds the canonical constructions attached to them — the
//! Drinfeld double, pre-Lie, dendriform and brace structures, Hopf
//! (bi)modules, Baxter operators, and the circular/augmented monoidal
//! correspondences — and verifies every law as a machine-checkable identity
//! with zero tolerance.
//!
//! Every checker returns a [`report::Report`] whose witnesses pinpoint the
//! violating basis tuple and residual, so broken presentations are as easy
//! to diagnose as valid ones are to certify.

pub mod bimodules;
pub mod brace;
pub mod categorical;
pub mod derived;
pub mod double;
pub mod endspace;
pub mod error;
pub mod fixtures;
pub mod laurent;
pub mod linalg;
pub mod probe;
pub mod quasi;
pub mod quiver;
pub mod report;
pub mod scalar;
pub mod structures;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use tensor::{Element, Idx, Tensor2, Tensor3};
