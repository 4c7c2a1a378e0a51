use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Beyond this the rationals only grow; the zeta tail needs far fewer.
pub const MAX_BERNOULLI_COUNT: usize = 64;

/// Exact Bernoulli numbers `B_0, B_1, …` with the `B_1 = −1/2` convention.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&BigRational> {
        self.values.get(index)
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.values
    }

    pub fn to_f64(&self, index: usize) -> Option<f64> {
        self.get(index).map(rational_to_f64)
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    // Both parts stay far inside f64 range for the sizes used here.
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// The first `count` Bernoulli numbers from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(count: usize) -> Result<BernoulliTable> {
    if count > MAX_BERNOULLI_COUNT {
        return Err(Error::BernoulliCount {
            requested: count,
            max: MAX_BERNOULLI_COUNT,
        });
    }
    if count == 0 {
        return Err(Error::Domain("Bernoulli count must be positive"));
    }
    let mut values: Vec<BigRational> = Vec::with_capacity(count);
    values.push(BigRational::from_integer(BigInt::from(1)));
    for m in 1..count {
        // binomials C(m+1, j) for j = 0..m
        let mut binom = BigInt::from(1);
        let mut acc = BigRational::zero();
        for (j, b) in values.iter().enumerate() {
            acc += b * BigRational::from_integer(binom.clone());
            binom = binom * BigInt::from((m + 1 - j) as u64) / BigInt::from((j + 1) as u64);
        }
        // binom is now C(m+1, m) = m + 1
        values.push(-acc / BigRational::from_integer(binom));
    }
    Ok(BernoulliTable { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn anchors() {
        let t = bernoulli_numbers(3).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t.get(0), Some(&rat(1, 1)));
        assert_eq!(t.get(1), Some(&rat(-1, 2)));
        assert_eq!(t.get(2), Some(&rat(1, 6)));
        let t = bernoulli_numbers(5).unwrap();
        assert_eq!(t.get(4), Some(&rat(-1, 30)));
        assert_eq!(bernoulli_numbers(2).unwrap().get(1), Some(&rat(-1, 2)));
    }

    #[test]
    fn odd_indices_vanish_and_known_values() {
        let t = bernoulli_numbers(MAX_BERNOULLI_COUNT).unwrap();
        for i in (3..MAX_BERNOULLI_COUNT).step_by(2) {
            assert!(t.get(i).unwrap().is_zero(), "B_{i}");
        }
        assert_eq!(t.get(12), Some(&rat(-691, 2730)));
        assert_eq!(t.get(14), Some(&rat(7, 6)));
        assert_eq!(t.get(20), Some(&rat(-174611, 330)));
    }

    #[test]
    fn count_limits() {
        assert!(bernoulli_numbers(MAX_BERNOULLI_COUNT).is_ok());
        assert_eq!(
            bernoulli_numbers(65),
            Err(Error::BernoulliCount {
                requested: 65,
                max: 64
            })
        );
        assert!(bernoulli_numbers(0).is_err());
    }
}
