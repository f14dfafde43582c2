//! Core data model: frameworks, argument subsets and extension
//! collections, together with the definitional attack queries.

mod arg_set;
mod extension_set;
mod framework;

pub use arg_set::ArgSet;
pub use extension_set::ExtensionSet;
pub use framework::Framework;
