//! Quantile double autoregression (QDAR) toolkit.

pub mod error;

pub use error::{Error, Result};
