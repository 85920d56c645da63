//! Arrangements of double pseudolines: side-cycle encoding, validation,
//! flag complexes, canonical forms, mutations, chirotopes and cocycle labels.

pub mod arrangement;
pub mod catalog;
pub mod chirotope;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod flags;
pub mod mutation;
pub mod words;

pub use arrangement::Arrangement;
pub use cocycle::CocycleLabel;
pub use error::{DplError, Result};
pub use flags::{FlagComplex, KeyMode};
pub use words::{CrossingSymbol, Head, SignedIndex, SignedPair, SignedPermutation};
