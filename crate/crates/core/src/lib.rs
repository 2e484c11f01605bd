//! Cyclic codes over the Galois ring `GR(p^2, s)`: canonical forms, duals,
//! self-dual enumeration, closed-form counts and the discrete Fourier
//! transform decomposition for composite lengths.

pub mod cli;
pub mod counting;
pub mod cyclic;
pub mod dft;
pub mod duality;
pub mod error;
pub mod field;
pub mod galois_ring;
pub mod literal;
pub mod numtheory;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
