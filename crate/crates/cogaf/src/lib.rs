//! Solver for finite abstract argumentation frameworks.
//!
//! Enumerates conflict-free, admissible, cogent, and weakly admissible
//! extensions, and ships a verification harness that checks the
//! inclusion of cogent sets among weakly admissible ones on exhaustive
//! and randomized framework sweeps.

pub mod af;
pub mod cli;
pub mod error;
pub mod gen;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod semantics;

#[cfg(test)]
pub(crate) mod test_util;

pub use af::{ArgSet, ExtensionSet, Framework};
pub use error::{Error, Result};
