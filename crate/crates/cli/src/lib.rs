//! Command-line plumbing for `msq`: input specs, result records, search
//! campaigns and the verification suite.

pub mod campaign;
pub mod input;
pub mod record;
pub mod verify;
