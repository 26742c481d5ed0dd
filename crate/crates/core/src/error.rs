use core::fmt;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A node index does not exist in the graph it refers to.
    IndexOutOfRange { index: usize, len: usize },
    /// An edge joins a node to itself.
    SelfLoop(usize),
    /// The same edge was given twice.
    DuplicateEdge(usize, usize),
    /// A variable node has more edges than the requested left degree.
    DegreeExceeded { var: usize, degree: usize, gamma: usize },
    /// The graph is not left-regular where a regular graph is required.
    NotLeftRegular,
    /// Two word lengths disagree.
    LengthMismatch { expected: usize, found: usize },
    /// A check node degree differs from the sub-code block length.
    CheckDegreeMismatch { check: usize, degree: usize, expected: usize },
    /// A parameter lies outside the domain of a formula or construction.
    Domain(&'static str),
    /// Rational arithmetic overflowed `i128`.
    Overflow,
    /// An exhaustive search would exceed its budget.
    BudgetExceeded { needed: u128, budget: u128 },
    /// No cage witness ships for the requested parameters.
    UnknownCage { degree: usize, girth: usize },
    /// A construction could not meet its targets within its budget.
    ConstructionFailed(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (size {len})")
            }
            Error::SelfLoop(u) => write!(f, "self-loop at node {u}"),
            Error::DuplicateEdge(a, b) => write!(f, "duplicate edge ({a}, {b})"),
            Error::DegreeExceeded { var, degree, gamma } => {
                write!(f, "variable {var} has degree {degree} > {gamma}")
            }
            Error::NotLeftRegular => write!(f, "graph is not left-regular"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::CheckDegreeMismatch { check, degree, expected } => write!(
                f,
                "check {check} has degree {degree}, sub-code length is {expected}"
            ),
            Error::Domain(msg) => write!(f, "parameter out of domain: {msg}"),
            Error::Overflow => write!(f, "rational arithmetic overflow"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "search needs {needed} evaluations, budget is {budget}")
            }
            Error::UnknownCage { degree, girth } => {
                write!(f, "no verified ({degree},{girth})-cage witness available")
            }
            Error::ConstructionFailed(msg) => write!(f, "construction failed: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
