//! File formats, bundled fixtures and the command-line front end for
//! [`graphdesign_core`].

pub mod cli;
pub mod fixtures;
pub mod io;
pub mod report;
