//! Exact coefficient arithmetic: rationals, the value group with `±inf`,
//! and `p`-adic valuations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (the backing type normalizes on construction).
pub type Rational = num_rational::BigRational;

/// Parse a rational written as `a` or `a/b` with optional sign.
pub fn rational_from_str(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{}'", s));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer = BigInt::from_str(num).map_err(|_| bad())?;
    let denom = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

/// Division that reports a zero divisor instead of panicking.
pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational, Error> {
    if b.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(a / b)
    }
}

/// Element of the value group `Q ∪ {−inf, +inf}`.
///
/// `+inf` is the valuation of zero; `−inf` shows up as the Gauss valuation
/// of terms involving a variable of infinite log-radius (elimination mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtValue {
    NegInfinity,
    Finite(Rational),
    Infinity,
}

impl ExtValue {
    pub fn zero() -> Self {
        ExtValue::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtValue::Finite(Rational::from_integer(BigInt::from(n)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtValue::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtValue::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// Finite value or panic; for call sites where infinity is impossible.
    pub fn expect_finite(&self, what: &str) -> &Rational {
        self.as_finite()
            .unwrap_or_else(|| panic!("expected finite value for {}, got {}", what, self))
    }
}

impl PartialOrd for ExtValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtValue::*;
        match (self, other) {
            (NegInfinity, NegInfinity) | (Infinity, Infinity) => Ordering::Equal,
            (NegInfinity, _) | (_, Infinity) => Ordering::Less,
            (_, NegInfinity) | (Infinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtValue {
    type Output = ExtValue;
    fn add(self, rhs: ExtValue) -> ExtValue {
        use ExtValue::*;
        match (self, rhs) {
            (Infinity, NegInfinity) | (NegInfinity, Infinity) => {
                panic!("indeterminate sum inf + (-inf)")
            }
            (Infinity, _) | (_, Infinity) => Infinity,
            (NegInfinity, _) | (_, NegInfinity) => NegInfinity,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }
}

impl Neg for ExtValue {
    type Output = ExtValue;
    fn neg(self) -> ExtValue {
        match self {
            ExtValue::NegInfinity => ExtValue::Infinity,
            ExtValue::Infinity => ExtValue::NegInfinity,
            ExtValue::Finite(q) => ExtValue::Finite(-q),
        }
    }
}

impl Sub for ExtValue {
    type Output = ExtValue;
    fn sub(self, rhs: ExtValue) -> ExtValue {
        self + (-rhs)
    }
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::NegInfinity => write!(f, "-inf"),
            ExtValue::Infinity => write!(f, "inf"),
            ExtValue::Finite(q) => write!(f, "{}", q),
        }
    }
}

impl FromStr for ExtValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtValue::Infinity),
            "-inf" => Ok(ExtValue::NegInfinity),
            other => Ok(ExtValue::Finite(rational_from_str(other)?)),
        }
    }
}

/// A checked prime `p` together with the `p`-adic valuation it induces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeContext {
    p: u64,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self, Error> {
        if is_prime_u64(p) {
            Ok(PrimeContext { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `p`-adic valuation of a rational; `+inf` exactly for zero.
    pub fn valuation(&self, q: &Rational) -> ExtValue {
        match self.valuation_i64(q) {
            Some(v) => ExtValue::Finite(Rational::from_integer(BigInt::from(v))),
            None => ExtValue::Infinity,
        }
    }

    /// The valuation as a plain integer; `None` exactly for zero. The value
    /// group of `Q_p` itself is `Z`, so this loses nothing.
    pub fn valuation_i64(&self, q: &Rational) -> Option<i64> {
        if q.is_zero() {
            return None;
        }
        Some(self.int_valuation(q.numer()) - self.int_valuation(q.denom()))
    }

    /// Largest `k` with `p^k` dividing `n`; `n` must be nonzero.
    fn int_valuation(&self, n: &BigInt) -> i64 {
        debug_assert!(!n.is_zero());
        let p = BigInt::from(self.p);
        let mut n = n.abs();
        let mut v = 0i64;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return v;
            }
            v += 1;
            n = q;
        }
    }

    /// `p^k` as an exact rational, for integer `k` of either sign.
    pub fn power(&self, k: i64) -> Rational {
        let mag = BigInt::from(self.p).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Rational::from_integer(mag)
        } else {
            Rational::new(BigInt::one(), mag)
        }
    }
}

/// `p`-adic valuation of `q`, with the primality of `p` vouched by `ctx`.
pub fn padic_valuation(q: &Rational, ctx: &PrimeContext) -> ExtValue {
    ctx.valuation(q)
}

/// Deterministic Miller–Rabin for `u64`.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        rational_from_str(s).unwrap()
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-3/-9"), q("1/3"));
        assert_eq!(q("3/-9").to_string(), "-1/3");
        assert_eq!(q("7").to_string(), "7");
    }

    #[test]
    fn rational_arith() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("1/2") * q("2/3"), q("1/3"));
        assert_eq!(checked_div(&q("1"), &q("3")).unwrap(), q("1/3"));
        assert_eq!(checked_div(&q("1"), &q("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_parse_rejects_garbage() {
        assert!(rational_from_str("a/b").is_err());
        assert!(rational_from_str("1.5").is_err());
        assert!(rational_from_str("").is_err());
        assert_eq!(rational_from_str("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn prime_check() {
        assert!(PrimeContext::new(2).is_ok());
        assert!(PrimeContext::new(3).is_ok());
        assert!(PrimeContext::new(5).is_ok());
        assert!(PrimeContext::new(101).is_ok());
        assert_eq!(PrimeContext::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeContext::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeContext::new(91), Err(Error::NotPrime(91))); // 7 * 13
        assert!(PrimeContext::new(2u64.pow(61) - 1).is_ok()); // Mersenne
    }

    #[test]
    fn padic_values() {
        let p2 = PrimeContext::new(2).unwrap();
        let p5 = PrimeContext::new(5).unwrap();
        assert_eq!(p2.valuation(&q("4")), ExtValue::from_int(2));
        assert_eq!(p2.valuation(&q("3/8")), ExtValue::from_int(-3));
        assert_eq!(p5.valuation(&q("0")), ExtValue::Infinity);
        assert_eq!(p2.valuation(&q("1")), ExtValue::zero());
        assert_eq!(p5.valuation(&q("50")), ExtValue::from_int(2));
        assert_eq!(p5.valuation(&q("-2/25")), ExtValue::from_int(-2));
    }

    #[test]
    fn padic_additivity_and_ultrametric() {
        let p3 = PrimeContext::new(3).unwrap();
        let samples = ["6", "-9/2", "1/3", "5", "27/4", "-1/81", "2"];
        for a in samples.iter().map(|s| q(s)) {
            for b in samples.iter().map(|s| q(s)) {
                let va = p3.valuation(&a);
                let vb = p3.valuation(&b);
                assert_eq!(p3.valuation(&(&a * &b)), va.clone() + vb.clone());
                let sum = &a + &b;
                assert!(p3.valuation(&sum) >= va.min(vb));
            }
        }
    }

    #[test]
    fn ext_value_order_and_arith() {
        use ExtValue::*;
        assert!(NegInfinity < ExtValue::from_int(-100));
        assert!(ExtValue::from_int(3) < Infinity);
        assert!(ExtValue::from_int(1) < ExtValue::from_int(2));
        assert_eq!(ExtValue::from_int(1) + ExtValue::from_int(2), ExtValue::from_int(3));
        assert_eq!(Infinity + ExtValue::from_int(5), Infinity);
        assert_eq!(NegInfinity + ExtValue::from_int(5), NegInfinity);
        assert_eq!(ExtValue::from_int(5) - Infinity, NegInfinity);
        assert_eq!("inf".parse::<ExtValue>().unwrap(), Infinity);
        assert_eq!("-inf".parse::<ExtValue>().unwrap(), NegInfinity);
        assert_eq!("-3/8".parse::<ExtValue>().unwrap(), ExtValue::Finite(q("-3/8")));
        assert_eq!(ExtValue::from_int(-2).to_string(), "-2");
    }

    #[test]
    #[should_panic(expected = "indeterminate")]
    fn ext_value_indeterminate_sum() {
        let _ = ExtValue::Infinity + ExtValue::NegInfinity;
    }

    #[test]
    fn prime_powers() {
        let p2 = PrimeContext::new(2).unwrap();
        assert_eq!(p2.power(3), q("8"));
        assert_eq!(p2.power(0), q("1"));
        assert_eq!(p2.power(-2), q("1/4"));
    }
}
