//! Error types for the exact-arithmetic and operator layers.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator in rational function")]
    ZeroDenominator,

    #[error("valuation of the zero function is undefined")]
    ZeroValuation,

    #[error("pole outside the given list: {factor}")]
    PoleOutsideList { factor: String },

    #[error("denominator does not split into linear factors over the rationals: {factor}")]
    NonRationalPoles { factor: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OdoError {
    #[error("leading coefficient is not a polynomial: {coeff}")]
    NonPolynomialLeading { coeff: String },

    #[error("the zero operator has no degree")]
    ZeroOperator,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PsdoError {
    #[error("operand validity window too shallow: trusted down to {have}, need {need}")]
    InsufficientDepth { have: i64, need: i64 },

    #[error("cannot invert the zero operator")]
    ZeroOperator,

    #[error("nth root requires leading term D^{n}, found order {order} with leading coefficient {leading}")]
    BadRootShape { n: u32, order: i64, leading: String },

    #[error("expansion requires a function vanishing at infinity, got {func}")]
    NotVanishingAtInfinity { func: String },

    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GrError {
    #[error("condition jet must have a nonzero coefficient")]
    ZeroCondition,

    #[error("Gr-ad only: a condition may involve a single support point, found {n} distinct points")]
    MultiPointCondition { n: usize },

    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BakerError {
    #[error("degenerate Baker system: rank {rank} < {size} (first failing pivot column {col})")]
    DegenerateSystem { rank: usize, size: usize, col: usize },

    #[error("correction coefficient does not vanish at infinity: {coeff}")]
    NotVanishing { coeff: String },

    #[error("{f} does not multiply W into itself")]
    NotInSpectralAlgebra { f: String },

    #[error("operator does not preserve the point")]
    NotInOperatorRing,

    #[error("residual negative part after conjugation: {term}")]
    ResidualNegativePart { term: String },

    #[error("cannot realize the transposed Baker function as a Gr-ad point: {reason}")]
    DualNotRealizable { reason: String },

    #[error(transparent)]
    Psdo(#[from] PsdoError),

    #[error(transparent)]
    Arith(#[from] ArithError),

    #[error(transparent)]
    Gr(#[from] GrError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MadError {
    #[error("dual subalgebra requires a box with V = W")]
    NotEndomorphic,

    #[error("B-check trivial: no positive-order element")]
    TrivialDual,

    #[error("generators do not commute: [g{i}, g{j}] != 0")]
    NonCommutingGenerators { i: usize, j: usize },

    #[error("valuation of p at the chosen point is zero, outside the hypothesis")]
    ZeroValuationBranch,

    #[error(transparent)]
    Odo(#[from] OdoError),

    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CmError {
    #[error("matrix is not square or sizes differ: X is {x_rows}x{x_cols}, Y is {y_rows}x{y_cols}")]
    ShapeMismatch {
        x_rows: usize,
        x_cols: usize,
        y_rows: usize,
        y_cols: usize,
    },

    #[error("input pair fails the rank-one condition")]
    NotRankOne,
}
