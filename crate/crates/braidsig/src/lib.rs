//! Verification harness and command-line front end for the signature
//! pipelines in `braidsig-core`.

pub mod cli;
pub mod error;
pub mod formats;
pub mod sample;
pub mod verifier;

pub use error::{Result, VerifyError};
