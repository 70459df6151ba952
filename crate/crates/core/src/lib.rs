//! Graded modules over `k[x0..xn]`, their explicit truncation and symmetric
//! power presentations, and the cocontinuous tensor functor on
//! quasi-coherent sheaves on projective space determined by a line bundle
//! with global sections, evaluated over affine target rings.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactlinalg`]: exact fields, dense/block-sparse ranks, `k[t]` and its
//!   Smith and Hermite normal forms.
//! - [`polyring`]: the graded ring `S = k[x0..xn]`, monomial bases, and
//!   substitution of ring elements for the variables.
//! - [`grmod`]: finitely presented graded modules and the degreewise
//!   exactness engine.
//! - [`koszulsym`]: truncation presentations of twists, the recursive
//!   extension of a compatible tuple to a graded map, and symmetric powers.
//! - [`tensorfunctor`]: target rings, the good-epimorphism test, functor
//!   evaluation, truncation isomorphisms, morphism reconstruction, base
//!   change and affine descent.
//! - [`cli`]: the `.qpk` declaration language and its JSON Lines reports.

pub mod cli;
pub mod exactlinalg;
pub mod grmod;
pub mod koszulsym;
pub mod polyring;
pub mod random;
pub mod tensorfunctor;

pub use exactlinalg::{Field, Scalar, UPoly};
pub use grmod::{DegreeWindow, FPGradedModule, GradedFree, GradedMatrix, GradedModuleMap};
pub use polyring::{HomPoly, Monomial, PolyRing};
