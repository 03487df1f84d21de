//! Exact structure theory for solvable Lie algebras over the rationals and
//! small finite fields.

mod error;
pub mod aclass;
pub mod config;
pub mod decomp;
pub mod exec;
pub mod field;
pub mod generators;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
