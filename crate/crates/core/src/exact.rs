//! Integer ground truth for `v_p(T(N))`.
//!
//! Three independent routes are provided:
//!
//! - [`vp_t_digit_sum`]: `(Σ S_p(N+j) − Σ S_p(3j+1)) / (p−1)` over `0 ≤ j < N`.
//! - [`vp_t_legendre`]: `Σ v_p((3j+1)!) − Σ v_p((N+j)!)` with Legendre's floor
//!   sums, evaluated in closed form over each arithmetic progression.
//! - [`vp_t_bignum`]: the product `T(N)` as an exact big integer, then
//!   repeated division by `p`.
//!
//! All arithmetic is checked; overflow is reported, never wrapped.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest `N` accepted by [`vp_t_bignum`].
pub const BIGNUM_N_CAP: u64 = 30;

/// A prime number, validated by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self> {
        if is_prime(value) {
            Ok(Self(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    #[inline]
    pub const fn get(self) -> u64 {
        self.0
    }

    /// `p − 1`, the divisor in Legendre's digit-sum form.
    #[inline]
    pub const fn pred(self) -> u64 {
        self.0 - 1
    }
}

impl core::fmt::Display for Prime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// One evaluation point `(p, N)` of `v_p(T(N))`.
///
/// `N = 0` is accepted: `T(0)` is the empty product and has valuation 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ValuationQuery {
    pub p: Prime,
    pub n: u64,
}

impl ValuationQuery {
    pub const fn new(p: Prime, n: u64) -> Self {
        Self { p, n }
    }
}

/// Sum of the base-`p` digits of `n`.
pub fn digit_sum(p: Prime, mut n: u64) -> u64 {
    let base = p.get();
    let mut sum = 0;
    while n != 0 {
        sum += n % base;
        n /= base;
    }
    sum
}

/// Largest `k` with `p^k | m`.
pub fn vp_integer(p: Prime, mut m: u64) -> Result<u32> {
    if m == 0 {
        return Err(Error::ZeroArgument);
    }
    let base = p.get();
    let mut k = 0;
    while m.is_multiple_of(base) {
        m /= base;
        k += 1;
    }
    Ok(k)
}

/// `v_p(m!) = Σ_{i≥1} ⌊m / p^i⌋`.
pub fn vp_factorial_legendre(p: Prime, m: u64) -> u64 {
    let base = p.get();
    let mut q = m / base;
    let mut total = 0;
    while q != 0 {
        total += q;
        q /= base;
    }
    total
}

/// `v_p(m!) = (m − S_p(m)) / (p − 1)`.
pub fn vp_factorial_digit_sum(p: Prime, m: u64) -> Result<u64> {
    let num = m - digit_sum(p, m);
    if !num.is_multiple_of(p.pred()) {
        return Err(Error::Inconsistent("m - S_p(m) is not divisible by p - 1"));
    }
    Ok(num / p.pred())
}

/// Base-`p` counter with an incrementally maintained digit sum.
///
/// Advancing by a small step touches only the digits that carry, so walking an
/// arithmetic progression costs amortized O(1) per term.
#[derive(Debug, Clone)]
pub struct DigitOdometer {
    base: u64,
    value: u64,
    digits: [u64; 64],
    sum: u64,
}

impl DigitOdometer {
    pub fn new(p: Prime, start: u64) -> Self {
        let base = p.get();
        let mut digits = [0u64; 64];
        let mut n = start;
        let mut i = 0;
        let mut sum = 0;
        while n != 0 {
            digits[i] = n % base;
            sum += digits[i];
            n /= base;
            i += 1;
        }
        Self {
            base,
            value: start,
            digits,
            sum,
        }
    }

    #[inline]
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `S_p` of the current value.
    #[inline]
    pub fn digit_sum(&self) -> u64 {
        self.sum
    }

    pub fn advance(&mut self, step: u64) -> Result<()> {
        self.value = self
            .value
            .checked_add(step)
            .ok_or(Error::Overflow("digit odometer"))?;
        let mut carry = step;
        let mut i = 0;
        while carry != 0 {
            let d = self.digits[i] + carry;
            let digit = d % self.base;
            carry = d / self.base;
            self.sum = self.sum - self.digits[i] + digit;
            self.digits[i] = digit;
            i += 1;
        }
        Ok(())
    }
}

/// `Σ_{i=0}^{count-1} S_p(start + i·step)` by direct summation.
fn progression_digit_sum(p: Prime, start: u64, step: u64, count: u64) -> Result<u64> {
    if count == 0 {
        return Ok(0);
    }
    let mut odo = DigitOdometer::new(p, start);
    let mut total = odo.digit_sum();
    for _ in 1..count {
        odo.advance(step)?;
        total = total
            .checked_add(odo.digit_sum())
            .ok_or(Error::Overflow("digit-sum accumulation"))?;
    }
    Ok(total)
}

/// `Σ_{n=0}^{N-1} S_p(n)` by direct summation.
pub fn prefix_digit_sum(p: Prime, n: u64) -> Result<u64> {
    progression_digit_sum(p, 0, 1, n)
}

/// `v_p(T(N))` from the digit-sum identity
/// `(Σ_{j<N} S_p(N+j) − Σ_{j<N} S_p(3j+1)) / (p−1)`.
pub fn vp_t_digit_sum(q: &ValuationQuery) -> Result<u64> {
    let n = q.n;
    if n == 0 {
        return Ok(0);
    }
    let upper = progression_digit_sum(q.p, n, 1, n)?;
    let lower = progression_digit_sum(q.p, 1, 3, n)?;
    digit_difference_to_valuation(q.p, upper as i128 - lower as i128)
}

fn digit_difference_to_valuation(p: Prime, diff: i128) -> Result<u64> {
    let d = p.pred() as i128;
    if diff % d != 0 {
        return Err(Error::Inconsistent(
            "digit-sum difference is not divisible by p - 1",
        ));
    }
    let v = diff / d;
    u64::try_from(v).map_err(|_| Error::Inconsistent("negative valuation from digit sums"))
}

/// Consecutive values `v_p(T(N)), v_p(T(N+1)), …` from the digit-sum identity.
///
/// Uses `D(N+1) = D(N) + S_p(2N) + S_p(2N+1) − S_p(N) − S_p(3N+1)` for the
/// numerator `D(N) = Σ S_p(N+j) − Σ S_p(3j+1)`, so a range costs O(1) digit
/// sums per step after the first point.
#[derive(Debug, Clone)]
pub struct DigitSumSweep {
    p: Prime,
    n: u64,
    numerator: i128,
}

impl DigitSumSweep {
    pub fn starting_at(p: Prime, n: u64) -> Result<Self> {
        let numerator = if n == 0 {
            0
        } else {
            progression_digit_sum(p, n, 1, n)? as i128 - progression_digit_sum(p, 1, 3, n)? as i128
        };
        Ok(Self { p, n, numerator })
    }

    /// Current `(N, v_p(T(N)))`.
    pub fn current(&self) -> Result<(u64, u64)> {
        Ok((
            self.n,
            digit_difference_to_valuation(self.p, self.numerator)?,
        ))
    }

    pub fn step(&mut self) -> Result<()> {
        let n = self.n;
        let two_n = n.checked_mul(2).ok_or(Error::Overflow("sweep index"))?;
        let three_n1 = n
            .checked_mul(3)
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow("sweep index"))?;
        let s = |m| digit_sum(self.p, m) as i128;
        self.numerator += s(two_n) + s(two_n + 1) - s(n) - s(three_n1);
        self.n += 1;
        Ok(())
    }
}

impl Iterator for DigitSumSweep {
    type Item = Result<(u64, u64)>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current();
        if out.is_err() {
            return Some(out);
        }
        if let Err(e) = self.step() {
            return Some(Err(e));
        }
        Some(out)
    }
}

/// `Σ_{i=0}^{n-1} ⌊(a·i + b) / m⌋` in O(log m) steps.
fn floor_sum(n: u128, m: u128, a: u128, b: u128) -> Result<u128> {
    const CTX: &str = "floor sum";
    let (mut n, mut m, mut a, mut b) = (n, m, a, b);
    let mut acc: u128 = 0;
    let ovf = || Error::Overflow(CTX);
    loop {
        if n == 0 {
            return Ok(acc);
        }
        if a >= m {
            let tri = n.checked_mul(n - 1).ok_or_else(ovf)? / 2;
            acc = acc
                .checked_add(tri.checked_mul(a / m).ok_or_else(ovf)?)
                .ok_or_else(ovf)?;
            a %= m;
        }
        if b >= m {
            acc = acc
                .checked_add(n.checked_mul(b / m).ok_or_else(ovf)?)
                .ok_or_else(ovf)?;
            b %= m;
        }
        let y_max = a
            .checked_mul(n)
            .and_then(|x| x.checked_add(b))
            .ok_or_else(ovf)?;
        if y_max < m {
            return Ok(acc);
        }
        n = y_max / m;
        b = y_max % m;
        core::mem::swap(&mut m, &mut a);
    }
}

/// `v_p(T(N))` from Legendre's formula:
/// `Σ_{i≥1} Σ_{j<N} (⌊(3j+1)/p^i⌋ − ⌊(N+j)/p^i⌋)`.
///
/// Each inner sum over `j` is a floor sum over an arithmetic progression and is
/// evaluated in closed form; no digit sums are involved.
pub fn vp_t_legendre(q: &ValuationQuery) -> Result<u64> {
    let n = q.n as u128;
    if n == 0 {
        return Ok(0);
    }
    let p = q.p.get() as u128;
    // Largest factorial argument is 3N − 2 (N + j never exceeds it for N ≥ 1).
    let top = 3 * n - 2;
    let mut total: i128 = 0;
    let mut pk = p;
    while pk <= top {
        let numer = floor_sum(n, pk, 3, 1)?;
        let denom = floor_sum(n, pk, 1, n)?;
        total += numer as i128 - denom as i128;
        pk = match pk.checked_mul(p) {
            Some(x) => x,
            None => break,
        };
    }
    u64::try_from(total).map_err(|_| Error::Inconsistent("negative valuation from Legendre sums"))
}

/// `T(N)` as an exact integer. `T(0) = 1`.
pub fn asm_count(n: u64) -> Result<BigUint> {
    if n > BIGNUM_N_CAP {
        return Err(Error::SizeLimit {
            n,
            cap: BIGNUM_N_CAP,
        });
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let top = (3 * n - 2) as usize;
    let mut factorials: Vec<BigUint> = Vec::with_capacity(top + 1);
    factorials.push(BigUint::one());
    for m in 1..=top {
        let next = &factorials[m - 1] * BigUint::from(m as u64);
        factorials.push(next);
    }
    let mut numer = BigUint::one();
    let mut denom = BigUint::one();
    for j in 0..n as usize {
        numer *= &factorials[3 * j + 1];
        denom *= &factorials[n as usize + j];
    }
    let t = &numer / &denom;
    if !(&numer % &denom).is_zero() {
        return Err(Error::Inconsistent("T(N) is not an integer"));
    }
    Ok(t)
}

/// `v_p(T(N))` by computing `T(N)` exactly and dividing out `p`.
///
/// Limited to `N ≤` [`BIGNUM_N_CAP`].
pub fn vp_t_bignum(q: &ValuationQuery) -> Result<u64> {
    let mut t = asm_count(q.n)?;
    let p = BigUint::from(q.p.get());
    let mut k = 0;
    loop {
        let r = &t % &p;
        if !r.is_zero() {
            return Ok(k);
        }
        t /= &p;
        k += 1;
    }
}

/// Checks `S_p(m) − S_p(m−1) = 1 − (p−1)·v_p(m)`. Returns `false` for `m = 0`.
pub fn digit_sum_step_identity_check(p: Prime, m: u64) -> bool {
    let Ok(v) = vp_integer(p, m) else {
        return false;
    };
    let lhs = digit_sum(p, m) as i64 - digit_sum(p, m - 1) as i64;
    lhs == 1 - p.pred() as i64 * v as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(13).is_ok());
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert_eq!(Prime::new(0), Err(Error::NotPrime(0)));
        assert!(Prime::new(1_000_000_007).is_ok());
    }

    #[test]
    fn digit_sum_examples() {
        assert_eq!(digit_sum(p(2), 5), 2);
        assert_eq!(digit_sum(p(3), 10), 2);
        assert_eq!(digit_sum(p(2), 0), 0);
    }

    #[test]
    fn vp_integer_examples() {
        assert_eq!(vp_integer(p(2), 8), Ok(3));
        assert_eq!(vp_integer(p(5), 7), Ok(0));
        assert_eq!(vp_integer(p(3), 54), Ok(3));
        assert_eq!(vp_integer(p(3), 0), Err(Error::ZeroArgument));
    }

    #[test]
    fn factorial_valuation_examples() {
        assert_eq!(vp_factorial_legendre(p(2), 10), 8);
        assert_eq!(vp_factorial_legendre(p(3), 10), 4);
        assert_eq!(vp_factorial_legendre(p(7), 6), 0);
        assert_eq!(vp_factorial_digit_sum(p(2), 10), Ok(8));
        assert_eq!(vp_factorial_digit_sum(p(3), 10), Ok(4));
        assert_eq!(vp_factorial_digit_sum(p(7), 6), Ok(0));
    }

    #[test]
    fn small_asm_numbers() {
        // 1, 1, 2, 7, 42, 429, 7436
        let expected = [1u64, 1, 2, 7, 42, 429, 7436];
        for (n, &t) in expected.iter().enumerate() {
            assert_eq!(asm_count(n as u64).unwrap(), BigUint::from(t));
        }
    }

    #[test]
    fn valuation_examples() {
        let q = |pv, n| ValuationQuery::new(p(pv), n);
        assert_eq!(vp_t_digit_sum(&q(2, 2)), Ok(1));
        assert_eq!(vp_t_digit_sum(&q(7, 3)), Ok(1));
        assert_eq!(vp_t_digit_sum(&q(5, 1)), Ok(0));
        assert_eq!(vp_t_legendre(&q(2, 2)), Ok(1));
        assert_eq!(vp_t_legendre(&q(3, 4)), Ok(1));
        assert_eq!(vp_t_legendre(&q(11, 1)), Ok(0));
        assert_eq!(vp_t_bignum(&q(2, 4)), Ok(1));
        assert_eq!(vp_t_bignum(&q(3, 4)), Ok(1));
        assert_eq!(vp_t_bignum(&q(13, 4)), Ok(0));
    }

    #[test]
    fn n_zero_is_empty_product() {
        let q = ValuationQuery::new(p(5), 0);
        assert_eq!(vp_t_digit_sum(&q), Ok(0));
        assert_eq!(vp_t_legendre(&q), Ok(0));
        assert_eq!(vp_t_bignum(&q), Ok(0));
    }

    #[test]
    fn bignum_rejects_large_n() {
        let q = ValuationQuery::new(p(2), BIGNUM_N_CAP + 1);
        assert_eq!(vp_t_bignum(&q), Err(Error::SizeLimit { n: 31, cap: 30 }));
    }

    #[test]
    fn prefix_digit_sum_examples() {
        assert_eq!(prefix_digit_sum(p(2), 4), Ok(4));
        assert_eq!(prefix_digit_sum(p(3), 3), Ok(3));
        assert_eq!(prefix_digit_sum(p(2), 0), Ok(0));
    }

    #[test]
    fn step_identity_examples() {
        assert!(digit_sum_step_identity_check(p(2), 8));
        assert!(digit_sum_step_identity_check(p(5), 25));
        assert!(digit_sum_step_identity_check(p(3), 7));
        assert!(!digit_sum_step_identity_check(p(3), 0));
    }

    #[test]
    fn floor_sum_matches_naive() {
        for n in 0..40u128 {
            for m in 1..20u128 {
                for a in 0..7u128 {
                    for b in 0..25u128 {
                        let naive: u128 = (0..n).map(|i| (a * i + b) / m).sum();
                        assert_eq!(floor_sum(n, m, a, b).unwrap(), naive, "{n} {m} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn odometer_tracks_digit_sum() {
        for &pv in &[2u64, 3, 5, 7] {
            for &step in &[1u64, 3, 10] {
                let mut odo = DigitOdometer::new(p(pv), 17);
                for _ in 0..2000 {
                    assert_eq!(odo.digit_sum(), digit_sum(p(pv), odo.value()));
                    odo.advance(step).unwrap();
                }
            }
        }
    }

    #[test]
    fn odometer_overflow_is_an_error() {
        let mut odo = DigitOdometer::new(p(2), u64::MAX - 1);
        assert!(odo.advance(1).is_ok());
        assert_eq!(odo.advance(1), Err(Error::Overflow("digit odometer")));
    }

    #[test]
    fn sweep_matches_pointwise() {
        for &pv in &[2u64, 3, 7] {
            let sweep = DigitSumSweep::starting_at(p(pv), 5).unwrap();
            for item in sweep.take(300) {
                let (n, v) = item.unwrap();
                assert_eq!(v, vp_t_digit_sum(&ValuationQuery::new(p(pv), n)).unwrap());
            }
        }
    }
}
