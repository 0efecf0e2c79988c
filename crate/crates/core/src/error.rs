use std::fmt;

/// Errors raised by the exact-arithmetic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MathError {
    /// `value` shares a factor with the modulus; carries the offending gcd.
    NotInvertible { value: u64, modulus: u64, gcd: u64 },
    /// Jacobi symbols are only defined for odd positive denominators.
    BadJacobiDenominator(u64),
    /// A parameter that must be prime failed the primality check.
    NotPrime(u64),
    /// `p^a` exceeds the loop-bound guard for streaming sums.
    PrimePowerTooLarge { p: u64, a: u32 },
    /// A binomial stream was advanced past its final term.
    StreamExhausted,
    /// A Lucas value that must be divisible by `p` was not. This would
    /// falsify a known theorem, so it fails loudly instead of truncating.
    DivisibilityViolation { p: u64, index: u64, value: u64 },
    /// A rational that must be `p`-integral had `p` in its denominator.
    NotPIntegral { p: u64 },
    /// A parameter violated the valid range of a congruence clause.
    ParameterOutOfRange(&'static str),
}

impl fmt::Display for MathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MathError::NotInvertible { value, modulus, gcd } => {
                write!(f, "{value} is not invertible mod {modulus} (gcd {gcd})")
            }
            MathError::BadJacobiDenominator(n) => {
                write!(f, "Jacobi denominator must be odd and positive, got {n}")
            }
            MathError::NotPrime(n) => write!(f, "{n} is not prime"),
            MathError::PrimePowerTooLarge { p, a } => {
                write!(f, "{p}^{a} exceeds the streaming guard")
            }
            MathError::StreamExhausted => write!(f, "binomial stream exhausted"),
            MathError::DivisibilityViolation { p, index, value } => {
                write!(f, "u_{index} = {value} is not divisible by {p}")
            }
            MathError::NotPIntegral { p } => {
                write!(f, "rational has {p} in its denominator")
            }
            MathError::ParameterOutOfRange(what) => write!(f, "parameter out of range: {what}"),
        }
    }
}

impl std::error::Error for MathError {}
