//! Process exit codes. These are part of the command-line interface and
//! do not change between releases.

use std::fmt;

use hyperc::{Error, Method};

pub const OK: u8 = 0;
pub const FAILURE: u8 = 1;
/// I/O, parse, and usage errors.
pub const IO: u8 = 2;
pub const CONNECTIVITY: u8 = 3;
pub const CONVERGENCE: u8 = 4;
pub const MISMATCH: u8 = 5;

/// Inputs that disagree on their node set or length.
#[derive(Debug)]
pub struct Mismatch(pub String);

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Mismatch {}

/// Methods whose solver stopped before meeting its tolerance.
#[derive(Debug)]
pub struct Unconverged(pub Vec<Method>);

impl fmt::Display for Unconverged {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|m| m.name()).collect();
        write!(f, "did not converge: {}", names.join(", "))
    }
}

impl std::error::Error for Unconverged {}

fn library_code(e: &Error) -> u8 {
    match e {
        Error::NotConnected | Error::EmptyHypergraph => CONNECTIVITY,
        Error::NotConverged { .. } | Error::NoConvergedRestarts { .. } => CONVERGENCE,
        Error::DimensionMismatch { .. } => MISMATCH,
        Error::Io(_)
        | Error::Parse { .. }
        | Error::TooManyMalformed { .. }
        | Error::InvalidHypergraph(_)
        | Error::EdgeArity { .. }
        | Error::WeightCount { .. }
        | Error::InvalidUniformity { .. }
        | Error::InvalidArgument(_) => IO,
        _ => FAILURE,
    }
}

pub fn code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.is::<Mismatch>() {
            return MISMATCH;
        }
        if cause.is::<Unconverged>() {
            return CONVERGENCE;
        }
        if let Some(e) = cause.downcast_ref::<Error>() {
            return library_code(e);
        }
        if cause.is::<std::io::Error>() || cause.is::<serde_json::Error>() {
            return IO;
        }
    }
    FAILURE
}
