pub mod cli;
pub mod error;
pub mod prolate;
pub mod quad;
pub mod scaling;
pub mod slit;
pub mod synth;
pub mod verify;
pub mod xprec;

pub use error::{Error, Result};
