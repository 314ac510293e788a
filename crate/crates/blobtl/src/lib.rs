//! Exact computations in type B and type D Temperley-Lieb algebras.
//!
//! Elements are linear combinations of dotted planar diagrams with
//! coefficients in `Z[q, q^-1]`, `Q(q)`, or truncated Laurent series. On top
//! of that sit Jones-Wenzl projectors, braid evaluation, the q-adic
//! convergence of full twists, the hyperoctahedral group and its group
//! algebra, and the matrix model on tensor powers of a two-dimensional space.

pub mod coefficients;
pub mod diagrams;
pub mod tl_algebra;
pub mod jones_wenzl;
pub mod weyl_group;
pub mod group_algebra;
pub mod braids;
pub mod convergence;
pub mod coideal_rep;
mod modp;
mod error;

pub use error::{Error, Result};
