pub mod error;
pub mod linalg;

pub use error::{LieError, Result};
pub mod catalog;
pub mod cohomology;
pub mod deform;
pub mod free_nilpotent;
pub mod lie;
