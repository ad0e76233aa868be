pub mod cli;
pub mod error;
pub mod exact;
pub mod hyp;
pub mod numeric;
pub mod operator;

pub use error::{Error, Result};
