//! Exact computations around immanants of Jacobi-Trudi and Giambelli matrices:
//! symmetric polynomials in finitely many variables, symmetric-group characters,
//! lattice-path networks, and saturated Newton polytope (SNP) verification.

pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod lp;
pub mod matrices;
pub mod networks;
pub mod newton;
pub mod poly;
pub mod scan;
pub mod stembridge;
pub mod symmetric;

pub use error::{Error, Result};
