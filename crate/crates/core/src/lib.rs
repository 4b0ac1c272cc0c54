//! Exact computations with KLR (quiver Hecke) algebras of types `A_∞` and
//! `A^(1)_{e-1}`, the permutation modules `M^λ` on their row-standard bases,
//! and the Specht filtrations and Specht resolutions built from Garnir
//! relations.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: quivers, residues, roots and multicharges.
//! * [`partitions`]: partitions, multipartitions, hooks, dominance, dimension counts.
//! * [`perm`] and [`tableaux`]: the symmetric group and tableau combinatorics.
//! * [`garnir`]: Garnir nodes, belts, tableaux and their ψ-words.
//! * [`klr`]: normal-form arithmetic in `R_α`.
//! * [`module`]: the action of `R_α` on `M^λ`, spans and identity checks.
//! * [`filtration`] and [`decomp`]: the filtration constructors, their verifiers
//!   and the level-two decomposition data.

pub mod cartan;
pub mod decomp;
pub mod error;
pub mod filtration;
pub mod garnir;
pub mod identities;
pub mod klr;
pub mod module;
pub mod partitions;
pub mod perm;
pub mod scalar;
pub mod tableaux;

pub use cartan::{Adjacency, Multicharge, PositiveRoot, Quiver, Residue};
pub use error::{Error, Result};
pub use partitions::{Multipartition, Node, Partition};
pub use scalar::{Fp, Rational, Scalar};
pub use tableaux::{ReducedWord, Tableau};
