use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("the valuation of 0 is infinite")]
    ZeroArgument,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),

    #[error("N = {n} exceeds the big-integer oracle limit of {cap}")]
    SizeLimit { n: u64, cap: u64 },

    #[error("pole at s = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("requested {requested} Bernoulli numbers, at most {max} are supported")]
    BernoulliCount { requested: usize, max: usize },

    #[error("argument out of domain: {0}")]
    Domain(&'static str),

    #[error("{what} is not defined for p = 3")]
    PrimeThree { what: &'static str },

    #[error("coefficient set was built for p = {expected}, got p = {actual}")]
    PrimeMismatch { expected: u64, actual: u64 },

    #[error("imaginary residue {0:e} of a real Fourier series exceeds tolerance")]
    ImaginaryResidue(f64),
}
