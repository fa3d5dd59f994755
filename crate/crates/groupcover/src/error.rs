use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle notation parse error: {0}")]
    Parse(String),
    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: u32, degree: u32 },
    #[error("point {0} repeated within a cycle expression")]
    RepeatedPoint(u32),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("enumeration budget exceeded: needed {needed}, budget {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("unknown subgroup class {0:?}")]
    UnknownClass(String),
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("inventory identity violated: {count} * {subgroups} subgroups is not a multiple of {elements} elements")]
    InventoryIdentity {
        count: u64,
        subgroups: u64,
        elements: u64,
    },
    #[error("infeasible cover instance: element {0} is covered by no set")]
    Infeasible(usize),
    #[error("unknown column label {0:?}")]
    UnknownLabel(String),
    #[error("column index {index} out of range (1..={columns})")]
    IndexOutOfRange { index: usize, columns: usize },
    #[error("malformed solution line: {0:?}")]
    MalformedSolution(String),
    #[error("missing data file {0:?}")]
    MissingData(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
