use std::fmt;
use std::process::ExitCode;

/// Process exit status. Batch commands report the most severe status over
/// all graphs they processed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Success,
    /// a labeling or extension was proven not to exist
    Negative,
    /// search exhausted its budget or the criterion was inconclusive
    Unknown,
    VerificationFailed,
    Usage,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Negative => 1,
            Status::VerificationFailed => 2,
            Status::Unknown => 3,
            Status::Usage => 64,
        }
    }
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s.code())
    }
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { status: Status::Usage, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure { status: Status::VerificationFailed, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}
