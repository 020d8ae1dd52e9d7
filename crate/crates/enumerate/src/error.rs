use std::fmt;

/// Why a search could not run or complete.
///
/// A search that finishes always reports an exact result; in particular a
/// blown node budget is an error, never a silently truncated count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    /// The configured node budget was reached before the search space was
    /// exhausted.
    BudgetExceeded {
        /// The budget that was in force.
        budget: u64,
    },
    /// The order is outside what the engine's bitmask state supports.
    OrderUnsupported {
        /// The requested order.
        order: usize,
    },
    /// An explicit first row was not a permutation of `1..=n`.
    BadFirstRow {
        /// The requested order.
        order: usize,
    },
    /// The naive engine was asked to run outside its guarded cost range
    /// without the explicit override.
    OracleGuard {
        /// The requested order.
        order: usize,
        /// Which guard condition failed.
        reason: &'static str,
    },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::BudgetExceeded { budget } => {
                write!(f, "node budget of {budget} exceeded before the search finished")
            }
            EnumerateError::OrderUnsupported { order } => {
                write!(f, "order {order} is outside the searchable range")
            }
            EnumerateError::BadFirstRow { order } => {
                write!(f, "fixed first row is not a permutation of 1..={order}")
            }
            EnumerateError::OracleGuard { order, reason } => {
                write!(f, "naive engine refused at order {order}: {reason}")
            }
        }
    }
}

impl std::error::Error for EnumerateError {}
