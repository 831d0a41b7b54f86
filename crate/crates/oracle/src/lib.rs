//! Reference engines for cross-checking the `cga-core` kernel.
//!
//! Nothing here shares code with the kernel's product engine:
//!
//! * [`rewrite`] normalizes generator words with the defining relations directly
//!   in the null basis;
//! * [`basis_change`] builds its own orthonormal model (different bit layout)
//!   and exact change-of-basis matrices;
//! * [`matrix`] is the 32×32 left-regular representation built from the
//!   rewriting engine.
//!
//! [`random`] has seeded generators for test inputs.

pub mod basis_change;
pub mod matrix;
pub mod random;
pub mod rewrite;

pub use basis_change::BasisChange;
pub use matrix::LeftRegularRep;
