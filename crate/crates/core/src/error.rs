use thiserror::Error;

/// Errors raised by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("monomial order mismatch between operands")]
    OrderMismatch,

    #[error("{element} is not a unit in {ring}")]
    NonUnit { element: String, ring: String },

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(String),

    #[error("{0} is not representable in {1}")]
    OutsideRing(String, String),

    #[error("cannot map {element} into {target}")]
    Unmappable { element: String, target: String },

    #[error("variable index {index} out of range for {count} variables")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("empty word where a nonempty word is required")]
    EmptyWord,

    #[error("zero polynomial has no leading data")]
    ZeroPolynomial,

    #[error("relation #{index} is zero")]
    ZeroRelation { index: usize },

    #[error("relation #{index} has leading monomial 1")]
    UnitRelation { index: usize },

    #[error("relation #{index} is not monic (leading coefficient {lc}); unit leading coefficients can be normalised with monicize")]
    NonMonic { index: usize, lc: String },

    #[error("relation #{index}: leading coefficient {lc} is not a unit")]
    NonUnitLeading { index: usize, lc: String },

    #[error("relation #{index}: leading monomial changes under base change")]
    LmNotPreserved { index: usize },

    #[error("{0} is not a field")]
    NotField(String),

    #[error("operation requires a graded monomial order")]
    NotGraded,

    #[error("relation set is not a certified Groebner basis")]
    Uncertified,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
