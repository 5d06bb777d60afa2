//! Standard-library companion to `kuelshammer-core`: JSON formats, input
//! resolution, sweeps, table output and the acceptance suite behind the
//! `kuel` binary.

pub mod acceptance;
pub mod formats;
pub mod input;
pub mod render;
pub mod sweep;

use kuelshammer_core::{Error, ErrorClass};

/// Exit codes of the `kuel` binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const VALIDATION: i32 = 2;
    pub const RESOURCE: i32 = 3;
    pub const INTERNAL: i32 = 4;
}

/// Maps an error to an exit code through the first library error in its
/// chain. Anything else (bad JSON, unreadable file) counts as validation.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()).map(Error::class) {
        Some(ErrorClass::Resource) => exit::RESOURCE,
        Some(ErrorClass::Internal) => exit::INTERNAL,
        Some(ErrorClass::Validation) | None => exit::VALIDATION,
    }
}
