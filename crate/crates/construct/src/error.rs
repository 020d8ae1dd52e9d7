use std::error::Error;
use std::fmt;

/// Errors reported by the generators in this crate.
///
/// All variants are data-dependent refusals; argument-contract violations
/// (see each function's `# Panics` section) panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// A cyclic construction was asked for a row shift sharing a factor
    /// with the order, which would repeat symbols within columns.
    ShiftNotCoprime { order: usize, shift: usize },
    /// A product operand failed the Latin check.
    OperandNotLatin { operand: &'static str },
    /// The requested order lies outside the range the construction is
    /// proven (or possible) for.
    OrderUnsupported { order: usize, reason: &'static str },
    /// Explicit construction parameters violate a validity condition.
    InvalidParams { reason: String },
    /// A parameter search found no valid tuple at this order.
    NoParams { order: usize },
    /// A p,q specification is not a pair of distinct odd primes in order.
    InvalidPQ { reason: String },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::ShiftNotCoprime { order, shift } => write!(
                f,
                "row shift {shift} shares a factor with order {order}; columns would repeat"
            ),
            ConstructError::OperandNotLatin { operand } => {
                write!(f, "{operand} operand is not a Latin square")
            }
            ConstructError::OrderUnsupported { order, reason } => {
                write!(f, "order {order} is unsupported: {reason}")
            }
            ConstructError::InvalidParams { reason } => {
                write!(f, "invalid construction parameters: {reason}")
            }
            ConstructError::NoParams { order } => {
                write!(f, "no valid construction parameters exist at order {order}")
            }
            ConstructError::InvalidPQ { reason } => {
                write!(f, "invalid p,q specification: {reason}")
            }
        }
    }
}

impl Error for ConstructError {}
