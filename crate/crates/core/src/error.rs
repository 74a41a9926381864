use thiserror::Error;

/// Errors surfaced by the exact-arithmetic engine.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("characteristic {0} is not 0 or prime")]
    CompositeCharacteristic(u64),
    #[error("characteristic {0} exceeds the supported word size")]
    CharacteristicTooLarge(u64),
    #[error("extension too large: degree {requested} exceeds cap {cap}")]
    ExtensionTooLarge { requested: usize, cap: usize },
    #[error("invalid extension degree {0}")]
    BadExtensionDegree(usize),
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("operand does not belong to the field: {0}")]
    MixedFields(String),
    #[error("polynomial must be monic and nonconstant")]
    BadPolynomial,
    #[error("factorization incomplete over the rationals: {0} has an unresolved factor of degree >= 4")]
    IncompleteFactorization(String),

    #[error("rewrite system is not confluent: monomial {overlap} reduces to both {left} and {right}")]
    NonConfluent {
        overlap: String,
        left: String,
        right: String,
    },
    #[error("quotient is not finite-dimensional: more than {0} irreducible monomials")]
    InfiniteDimensional(usize),
    #[error("relation {lhs} -> {rhs} is not compatible with the monomial order")]
    BadRelation { lhs: String, rhs: String },
    #[error("relation {lhs} -> {rhs} is not homogeneous mod {modulus}")]
    InhomogeneousRelation {
        lhs: String,
        rhs: String,
        modulus: i64,
    },
    #[error("algebra invariant violated: {0}")]
    InvariantViolation(String),
    #[error("element has odd-degree components where an even element is required")]
    OddDegree,
    #[error("element does not lie in the requested block")]
    NotInBlock,

    #[error("odd-degree support is not allowed here: {0}")]
    OddSupport(String),
    #[error("field does not contain all required roots of unity ({0} missing)")]
    MissingRootsOfUnity(String),
    #[error("search domain is infinite; a finite field is required")]
    InfiniteSearchDomain,
    #[error("search space of size {size} exceeds the bound {bound}")]
    SearchBoundExceeded { size: u128, bound: u128 },

    #[error("morphism shapes do not compose: {0}")]
    ShapeMismatch(String),
    #[error("morphism is not closed")]
    NotClosed,
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("Maurer-Cartan equation fails at {0} entries")]
    MaurerCartan(usize),
    #[error("unsupported group {0}; supported families: U(n), SU(n), Sp(n)")]
    UnsupportedGroup(String),

    #[error("length bound exceeds the memory budget: {0}")]
    LengthBoundExceeded(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
