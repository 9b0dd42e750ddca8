//! IO, command line tools, simulation and search built on `fgcone-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod pipeline;
pub mod search;
pub mod simulate;

pub use error::{Error, Result};
