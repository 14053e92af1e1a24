use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
///
/// Variants split into three groups: malformed inputs (bad digits, wrong
/// component counts), domain restrictions (odd bases where only even ones
/// make sense, bases without a closed-form catalogue), and the one
/// *semantic* terminal: repdigits, whose difference collapses to zero and
/// stays there, so they are rejected rather than iterated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(u32),

    #[error("digit {digit} is out of range for base {base}")]
    DigitOutOfRange { base: u8, digit: u8 },

    #[error("a digit string must contain at least one digit")]
    EmptyDigitString,

    #[error("an index for base {base} needs exactly {base} components, got {got}")]
    WrongComponentCount { base: u8, got: usize },

    #[error("an index must describe at least one digit")]
    EmptyIndex,

    #[error("digit count {0} overflows the supported range")]
    DigitCountOverflow(u64),

    #[error("repdigit: all digits equal, the transformation maps this to zero once and for all")]
    Repdigit,

    #[error("digit strings of width {left} and {right} cannot be compared")]
    WidthMismatch { left: usize, right: usize },

    #[error("mixed bases: {left} vs {right}")]
    BaseMismatch { left: u8, right: u8 },

    #[error("base {base} is odd; {operation} is defined for even bases only")]
    OddBase { base: u8, operation: &'static str },

    #[error("base {base} is not supported by {operation}")]
    UnsupportedBase { base: u8, operation: &'static str },

    #[error("{operation} expects {requirement}, got {got}")]
    DomainError {
        operation: &'static str,
        requirement: &'static str,
        got: String,
    },

    #[error("the index is not a fixed point of the transformation")]
    NotAFixedPoint,

    #[error("the given members do not form a cycle: {0}")]
    NotACycle(String),

    #[error("the index is neither symmetric nor almost symmetric")]
    NotSymmetric,

    #[error("state space of {required} states exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("cannot parse {text:?} as digits in base {base}: {reason}")]
    DigitParse {
        base: u8,
        text: String,
        reason: String,
    },
}
