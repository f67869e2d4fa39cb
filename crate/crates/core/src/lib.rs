//! Exact growth and conjugacy-growth counting for concrete finitely
//! generated groups.
//!
//! Every family-specific counting routine (free groups, right-angled Artin
//! groups, the lamplighter group) is paired with the generic brute-force
//! Cayley-graph engine in [`cayley_oracle`], which also hosts the infinite
//! dihedral group, the integer Heisenberg group and free abelian groups.

pub mod budget;
pub mod cayley_oracle;
pub mod cli;
pub mod cyclic_language;
pub mod error;
pub mod free_group;
pub mod lamplighter;
pub mod raag;
pub mod sequences;

pub use error::{Error, Result};
