//! Command-line front end for `kashaev-core`: input resolution, the bundled
//! corpus, JSON and CSV reports, and the seeded verification harness.

pub mod commands;
pub mod corpus;
pub mod fuzz;

pub use commands::{
    alexander, info, matrices, resolve, scan, signature_at, verify, CliError, Input, ScanFormat, VerifyOutcome,
    FUZZ_POINTS,
};
pub use corpus::{corpus, lookup, CorpusEntry};
