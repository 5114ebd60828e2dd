use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// Variants split into two families: malformed input (parse errors, size
/// mismatches, bad indices) and domain failures where the input is well
/// formed but lies outside the locus an operation is defined on (a tuple
/// that is not a system of parameters, a degenerate form, and so on).
/// [`Error::is_domain`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("inhomogeneous input: term at byte {pos} has degree {found}, expected {expected}")]
    Inhomogeneous { pos: usize, expected: u32, found: u32 },

    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },

    #[error("variable index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },

    #[error("number of variables mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("matrix size mismatch: expected {expected}x{expected}, found {rows}x{cols}")]
    SizeMismatch { expected: usize, rows: usize, cols: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("operation requires binary forms, found {num_vars} variables")]
    NotBinary { num_vars: usize },

    #[error("zero input")]
    ZeroInput,

    #[error("degree {found} is below the minimum {minimum}")]
    DegreeTooLow { minimum: u32, found: u32 },

    #[error("degree {degree} is out of range 0..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },

    #[error("degree {0} is odd")]
    OddDegree(u32),

    #[error("polar pairing: degree {operator} exceeds degree {target}")]
    DegreeExcess { operator: u32, target: u32 },

    #[error("not a homogeneous system of parameters: quotient has dimension {found} in degree {degree}, expected {expected}")]
    NotHsop { degree: u32, expected: usize, found: usize },

    #[error("degenerate tuple: entry {0} is zero")]
    DegenerateTuple(usize),

    #[error("degenerate form: discriminant vanishes")]
    Degenerate,

    #[error("subspace has dimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("partial derivatives are linearly dependent (power of a linear form)")]
    DependentPartials,

    #[error("limit undefined: subspace is not semistable in this frame (mu = {mu})")]
    LimitNotSemistable { mu: i64 },

    #[error("socle coordinate of the jacobian vanishes")]
    SocleVanishes,
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::Inhomogeneous { .. } => "inhomogeneous",
            Error::UnknownVariable { .. } => "unknown_variable",
            Error::IndexOutOfRange { .. } => "index_out_of_range",
            Error::VarCountMismatch { .. } => "var_count_mismatch",
            Error::DegreeMismatch { .. } => "degree_mismatch",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::SizeMismatch { .. } => "size_mismatch",
            Error::SingularMatrix => "singular_matrix",
            Error::NotBinary { .. } => "not_binary",
            Error::ZeroInput => "zero_input",
            Error::DegreeTooLow { .. } => "degree_too_low",
            Error::DegreeOutOfRange { .. } => "degree_out_of_range",
            Error::OddDegree(_) => "odd_degree",
            Error::DegreeExcess { .. } => "degree_excess",
            Error::NotHsop { .. } => "not_hsop",
            Error::DegenerateTuple(_) => "degenerate_tuple",
            Error::Degenerate => "degenerate",
            Error::Dimension { .. } => "dimension",
            Error::DependentPartials => "dependent_partials",
            Error::LimitNotSemistable { .. } => "limit_not_semistable",
            Error::SocleVanishes => "socle_vanishes",
        }
    }

    /// True for failures where the input was well formed but outside the
    /// domain of the operation.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotHsop { .. }
                | Error::DegenerateTuple(_)
                | Error::Degenerate
                | Error::Dimension { .. }
                | Error::DependentPartials
                | Error::LimitNotSemistable { .. }
                | Error::SingularMatrix
                | Error::ZeroInput
                | Error::OddDegree(_)
                | Error::SocleVanishes
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
