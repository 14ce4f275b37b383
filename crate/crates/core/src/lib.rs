//! Exact computations with q-characters of quantum affine algebras: root
//! data, braid group actions, Frenkel–Mukhin expansions, w-normalized
//! q-characters and their projected limits.

pub mod braid;
pub mod cartan;
pub mod error;
pub mod io;
pub mod limits;
pub mod qchar;
pub mod rings;

pub use error::{Error, Result};

/// Engine version, part of every cache key.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
