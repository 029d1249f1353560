//! Exact symmetric functions as a biring and a plethory.
//!
//! The ring Λ is realized with five bases over the rationals. On top of it
//! sit the four co-operations (coaddition, co-zero, comultiplication,
//! co-one) and the antipode, the plethysm product with its Adams operations,
//! the positive cone of Schur-positive elements with two-term complexes, and
//! a brute-force Young-symmetrizer oracle that checks dimensions against the
//! hook-content formula.

pub mod birig;
pub mod characters;
pub mod cli;
pub mod error;
pub mod grothendieck;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod plethysm;
pub mod rational;
pub mod report;
pub mod sparse;
pub mod symfunc;

pub use error::{Error, Result};
pub use birig::TensorElem;
pub use partitions::{partitions_of, Partition};
pub use rational::Q;
pub use symfunc::{BasisTag, Lambda, Polynomial, SymFunc};
