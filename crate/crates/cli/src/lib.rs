//! Command-line front end: problem files, the `normalize` and `bench`
//! runners, and their text/JSON/CSV renderings.

pub mod bench;
pub mod exit;
pub mod normalize;
pub mod problem;

pub use bench::{run_bench, BenchRow, Family};
pub use exit::ExitStatus;
pub use normalize::{run_normalize, Flags, Outcome};
pub use problem::{parse_input, ProblemError, ProblemFile};
