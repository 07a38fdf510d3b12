//! Integral bases for norm form equations that turn a chosen coordinate
//! sequence of `β·ε^k` into a linear divisibility sequence.

pub mod basis;
pub mod cli;
pub mod coordseq;
pub mod dk;
pub mod error;
pub mod field;
pub mod linalg;
pub mod lucas;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
