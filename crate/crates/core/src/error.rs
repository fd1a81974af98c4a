use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    ZeroDegree,
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u64,
    },
    DivisionByZero,
    /// An operand does not belong to the field or group it was used with.
    FieldMismatch,
    NotInGroup,
    NotASubgroup,
    /// Fingerprints computed against different class tables.
    TableMismatch,
    /// Generator multiset is not closed under inversion.
    NotSymmetric,
    OrderMismatch {
        expected: usize,
        found: usize,
    },
    UnsupportedType {
        family: char,
        rank: usize,
    },
    /// Type A_1 is excluded from the lattice pipeline.
    ExcludedA1,
    Characteristic {
        required: &'static str,
        p: u64,
    },
    NotCoprime {
        g: u64,
        modulus: u64,
    },
    /// `p == ℓ`: the conductor itself ramifies.
    Ramified(u64),
    ConductorTooSmall(u64),
    EmptyCandidates,
    InvalidCandidate(u64),
    InvalidParameter(&'static str),
    DegreeTooSmall(u64),
    /// A group order that should divide exactly did not.
    Indivisible,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroDegree => write!(f, "extension degree must be at least 1"),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{what}: size {size} exceeds cap {cap}")
            }
            Error::DivisionByZero => write!(f, "inversion of zero"),
            Error::FieldMismatch => write!(f, "operand does not belong to this field"),
            Error::NotInGroup => write!(f, "element is not in the ambient group"),
            Error::NotASubgroup => write!(f, "element set is not a subgroup"),
            Error::TableMismatch => write!(f, "fingerprints come from different class tables"),
            Error::NotSymmetric => write!(f, "generator multiset is not closed under inversion"),
            Error::OrderMismatch { expected, found } => {
                write!(f, "expected order {expected}, found {found}")
            }
            Error::UnsupportedType { family, rank } => {
                write!(f, "unsupported Lie type {family}{rank}")
            }
            Error::ExcludedA1 => write!(f, "type A1 is excluded"),
            Error::Characteristic { required, p } => {
                write!(f, "characteristic {p} not allowed: requires {required}")
            }
            Error::NotCoprime { g, modulus } => write!(f, "gcd({g}, {modulus}) != 1"),
            Error::Ramified(l) => write!(f, "{l} ramifies in its own conductor field"),
            Error::ConductorTooSmall(l) => write!(f, "conductor {l} is too small"),
            Error::EmptyCandidates => write!(f, "candidate set is empty"),
            Error::InvalidCandidate(g) => write!(f, "candidate {g} is not one of 5, 7, 11"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DegreeTooSmall(d) => write!(f, "degree {d} is below the minimum"),
            Error::Indivisible => write!(f, "group order is not divisible as required"),
        }
    }
}

impl core::error::Error for Error {}
