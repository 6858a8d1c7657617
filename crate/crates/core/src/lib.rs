pub mod cli;
pub mod error;
pub mod exact;
pub mod form;
pub mod dof;
pub mod linalg;
pub mod properties;
pub mod proxy;
pub mod spaces;

pub use error::{Error, Result};
