use thiserror::Error;

/// Errors raised by the algebraic layer and the search pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NwError {
    #[error("order must be odd, got {0}")]
    EvenOrder(usize),
    #[error("order {0} exceeds the supported bound {max}", max = crate::row::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("row entries must be +1 or -1, found {0} at index {1}")]
    InvalidEntry(i64, usize),
    #[error("rows have different orders ({0} and {1})")]
    MixedOrders(usize, usize),
    #[error("row {0} is not symmetric")]
    NotSymmetric(char),
    #[error("{0} is not a unit modulo {1}")]
    NotAUnit(usize, usize),
    #[error("row sum {sum} is not realisable by a symmetric row of order {order}")]
    InfeasibleSum { order: usize, sum: i64 },
    #[error("quadruple does not satisfy the additivity identity")]
    NotAdditive,
    #[error("matrix entry at ({0}, {1}) is not a fourth root of unity")]
    NonUnitEntry(usize, usize),
    #[error("search requires order at most {max}, got {0}", max = crate::search::MAX_SEARCH_ORDER)]
    SearchOrderTooLarge(usize),
    #[error("row placed in slot {0} has no symmetric signed shift")]
    NoSymmetricForm(char),
}

pub type Result<T> = std::result::Result<T, NwError>;
