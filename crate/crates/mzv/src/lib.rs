//! Command-line front end, JSON and LaTeX formats, and parallel sweeps for
//! [`mzv_core`].

pub mod cli;
pub mod json;
pub mod latex;
pub mod parse;
pub mod sweep;
