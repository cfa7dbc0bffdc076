use alloc::string::String;

/// Errors raised by diagram construction and the exact-algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed record on line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("edge label {label} appears {count} time(s); expected exactly 2")]
    EdgeMultiplicity { label: i64, count: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("diagram is not planar: {crossings} crossings, {edges} edges, {faces} faces")]
    NonPlanar { crossings: usize, edges: usize, faces: usize },
    #[error("strand orientation is inconsistent at crossing {crossing}")]
    Orientation { crossing: usize },
    #[error("braid generator {generator} out of range for {strands} strands")]
    BraidGenerator { generator: i64, strands: usize },
    #[error("invalid edge {0}")]
    InvalidEdge(usize),
    #[error("invalid region {0}")]
    InvalidRegion(usize),
    #[error("edges {0} and {1} do not bound a common region")]
    NoCommonRegion(usize, usize),
    #[error("regions {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("shape mismatch: {0}")]
    Shape(&'static str),
    #[error("realified signature {0} is odd")]
    OddRealifiedSignature(i64),
    #[error("evaluation at zero")]
    ZeroEvaluation,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("empty interval")]
    EmptyInterval,
    #[error("closure has {0} components; a knot is required")]
    NotAKnot(usize),
    #[error("braid column {0} carries no crossing")]
    EmptyColumn(usize),
    #[error("omega = 1 is excluded")]
    OmegaOne,
    #[error("not a point of the unit circle")]
    OffCircle,
    #[error("checkerboard colours disagree on the classical signature: {white} vs {black}")]
    ColourDisagreement { white: i64, black: i64 },
    #[error("cross-colour block of the x = 0 matrix is nonzero")]
    CrossColourBlock,
    #[error("Kashaev matrix entry is not in Z[2x]")]
    NotIntegral,
    #[error("vanishing Alexander polynomial")]
    VanishingAlexander,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
}

pub type Result<T> = core::result::Result<T, Error>;
