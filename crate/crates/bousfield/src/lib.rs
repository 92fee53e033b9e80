//! File formats, the verification harness and the command-line front end
//! for [`bousfield_core`].

pub mod cli;
pub mod format;
pub mod verify;
