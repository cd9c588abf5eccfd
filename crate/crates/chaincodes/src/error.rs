use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("defining polynomial is reducible over F_p")]
    ReducibleDefiningPolynomial,
    #[error("operands come from different rings")]
    RingMismatch,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("gcd(n, q) != 1 for n = {n}, q = {q}")]
    NotCoprimeLength { n: u64, q: u64 },
    #[error("polynomial does not divide the target")]
    NotADivisor,
    #[error("target has a repeated residue factor")]
    NonSquareFreeResidue,
    #[error("element is not a primitive root of unity of the required order")]
    NotARootOfUnity,
    #[error("modulus is not basic irreducible")]
    NotBasicIrreducible,
    #[error("degree {0} does not give a subextension")]
    NotASubextension(usize),
    #[error("no unit of order {0}")]
    NoSuchOrder(u128),
    #[error("expected {expected} components, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("factors are not pairwise coprime")]
    NotCoprimeFactors,
    #[error("product of factors differs from the modulus")]
    ProductMismatch,
    #[error("component {0} is not reduced modulo its factor")]
    ComponentDegreeTooHigh(usize),
    #[error("family members are not pairwise coprime")]
    NotCoprime,
    #[error("code is not free")]
    NotFree,
    #[error("n is not invertible in the ring")]
    NonInvertibleN,
    #[error("exponents {0} and {1} lie in the same cyclotomic coset")]
    CosetCollision(u64, u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("enumeration of {needed} words exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("no element with trace 1")]
    NoTraceUnityElement,
    #[error("annihilator is not of free form")]
    NotFreeForm,
    #[error("block {0} is not divisible by the required power of gamma")]
    BlockMembershipViolated(usize),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("operation requires F2+uF2")]
    UnsupportedRing,
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
