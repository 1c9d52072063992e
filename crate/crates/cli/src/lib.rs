//! File formats behind the `bialg` command line.

pub mod format;
