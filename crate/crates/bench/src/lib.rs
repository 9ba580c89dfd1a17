//! Instance I/O, benchmark sweeps and validation suites for `dyck-core`.

pub mod bench;
pub mod corpus;
pub mod format;
pub mod validate;
