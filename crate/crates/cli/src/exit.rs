use fpnorm_core::Error;

/// Process exit codes. The numeric values are part of the interface and
/// must not change.
///
/// | code | meaning |
/// |------|---------|
/// | 0 | success |
/// | 2 | bad command line |
/// | 3 | input file unreadable, or output file unwritable |
/// | 4 | malformed problem file or `--conductor` expression |
/// | 5 | no usable Jacobian minor |
/// | 6 | iteration cap reached |
/// | 7 | supplied conductor is zero in the ring |
/// | 8 | `--verify` found a failing check |
/// | 9 | resource limit (pair cap, split depth) |
/// | 10 | relations generate the unit ideal |
/// | 11 | any other algebra error |
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    Usage,
    Io,
    Parse,
    ConductorNotFound,
    IterationLimit,
    BadConductor,
    VerifyFailed,
    ResourceLimit,
    ZeroRing,
    Internal,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::Usage => 2,
            ExitStatus::Io => 3,
            ExitStatus::Parse => 4,
            ExitStatus::ConductorNotFound => 5,
            ExitStatus::IterationLimit => 6,
            ExitStatus::BadConductor => 7,
            ExitStatus::VerifyFailed => 8,
            ExitStatus::ResourceLimit => 9,
            ExitStatus::ZeroRing => 10,
            ExitStatus::Internal => 11,
        }
    }
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } | Error::ExponentOverflow | Error::InvalidModulus(_) => {
                ExitStatus::Parse
            }
            Error::ConductorNotFound(_) => ExitStatus::ConductorNotFound,
            Error::IterationLimitExceeded(_) => ExitStatus::IterationLimit,
            Error::DZero => ExitStatus::BadConductor,
            Error::PairLimitExceeded(_) | Error::SplitDepthExceeded(_) => ExitStatus::ResourceLimit,
            Error::ZeroRing | Error::UnitIdeal => ExitStatus::ZeroRing,
            _ => ExitStatus::Internal,
        }
    }
}
