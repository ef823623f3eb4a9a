pub mod assemble;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod jump;
pub mod paths;
pub mod pivot;
pub mod radial;
pub mod verify;

pub use error::{Error, Result};
