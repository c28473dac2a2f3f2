pub mod cli;
pub mod error;
pub mod polarization;
pub mod ratlp;
pub mod report;
pub mod rootsys;
pub mod stability;
pub mod weyl;
pub mod wonderful;

pub use error::{Error, Result};
