//! Library surface of the covhom CLI: input parsing, command runners, and
//! the deterministic report documents. The binary in main.rs is a thin clap
//! wrapper over these.

pub mod jobspec;
pub mod report;
pub mod run;
