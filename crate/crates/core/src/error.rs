use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A modulus or other argument that must be a positive integer was not.
    NonPositive {
        what: &'static str,
        value: i128,
    },
    /// Plain power with exponent 0; use `signed_power` for the `a^0` convention.
    ZeroExponent,
    /// A product of moduli or a function value left the u64 range.
    Overflow,
    /// CRT input with overlapping moduli.
    NotCoprime {
        m1: u64,
        m2: u64,
    },
    EmptyInput,
    NotIdempotent {
        m: u64,
        value: u64,
    },
    NotRegular {
        m: u64,
        value: u64,
    },
    /// Two operands from different classes `R_m^e`.
    ClassMismatch {
        m: u64,
        a: u64,
        b: u64,
    },
    NotWeaklyEven {
        m: u64,
    },
    EvenModulus {
        m: u64,
    },
    /// Full-set enumeration would exceed the configured cap.
    EnumerationCap {
        m: u64,
        cap: u64,
    },
    /// Any other violated precondition, described in words.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive { what, value } => write!(f, "{what} must be positive, got {value}"),
            Error::ZeroExponent => f.write_str("exponent must be at least 1"),
            Error::Overflow => f.write_str("value exceeds the 64-bit range"),
            Error::NotCoprime { m1, m2 } => write!(f, "moduli {m1} and {m2} are not coprime"),
            Error::EmptyInput => f.write_str("empty input"),
            Error::NotIdempotent { m, value } => write!(f, "{value} is not idempotent mod {m}"),
            Error::NotRegular { m, value } => write!(f, "{value} is not regular mod {m}"),
            Error::ClassMismatch { m, a, b } => {
                write!(f, "{a} and {b} lie in different idempotent classes mod {m}")
            }
            Error::NotWeaklyEven { m } => write!(f, "{m} is not weakly even"),
            Error::EvenModulus { m } => write!(f, "{m} is even; an odd modulus is required"),
            Error::EnumerationCap { m, cap } => {
                write!(f, "modulus {m} exceeds the enumeration cap {cap}")
            }
            Error::Precondition(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
