//! Exact model of the group `BS(1,2) ⋉ Ω`, its left orders, and a finite-scale
//! realization of those orders as maps of the line, with auditing of the
//! properties the construction is claimed to have.

pub mod cli;
pub mod error;
pub mod group;
pub mod orders;
pub mod realization;
pub mod report;
pub mod ring;
pub mod suites;

pub use error::{Error, Result};
