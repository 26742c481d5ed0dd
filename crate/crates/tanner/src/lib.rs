//! File formats, exhaustive sweeps and the `tanner` command-line tool built
//! on [`tanner_core`].

pub use tanner_core as core;

pub mod format;
pub mod expansion;
pub mod sweep;
pub mod cli;
