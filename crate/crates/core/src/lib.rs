//! Monomial ideals, Borel-type and d-fixed ideals, and their
//! Castelnuovo-Mumford regularity computed along several independent paths.

pub mod borel;
pub mod cli;
pub mod dfixed;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod oracle;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
