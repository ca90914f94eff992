//! Generators for the classical benchmark systems.
//!
//! Both families are frozen here rather than read from data files so that
//! timings are reproducible down to the exact input: the Katsura equations
//! in variables `x0, ..., xn` and the cyclic equations in `x1, ..., xn`,
//! with the usual sign and indexing conventions.

use std::fmt;
use std::str::FromStr;

use crate::coeffs::Rational;
use crate::error::Error;
use crate::order::Monomial;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SystemName {
    Katsura,
    Cyclic,
}

/// A benchmark system by name and size, e.g. `katsura:3` or `cyclic:5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SystemSpec {
    pub name: SystemName,
    pub n: usize,
}

impl SystemSpec {
    /// Requires `n ≥ 2`; the degenerate sizes are of no benchmark interest.
    pub fn new(name: SystemName, n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::Parse(format!("system size must be at least 2, got {}", n)));
        }
        Ok(SystemSpec { name, n })
    }

    pub fn generate(&self) -> Vec<Polynomial> {
        match self.name {
            SystemName::Katsura => katsura(self.n),
            SystemName::Cyclic => cyclic(self.n),
        }
    }

    pub fn nvars(&self) -> usize {
        match self.name {
            SystemName::Katsura => self.n + 1,
            SystemName::Cyclic => self.n,
        }
    }

    /// Variable names in index order, matching [`generate`](Self::generate).
    pub fn variables(&self) -> Vec<String> {
        match self.name {
            SystemName::Katsura => (0..=self.n).map(|i| format!("x{}", i)).collect(),
            SystemName::Cyclic => (1..=self.n).map(|i| format!("x{}", i)).collect(),
        }
    }
}

impl FromStr for SystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (name, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:n, got {:?}", s)))?;
        let name = match name {
            "katsura" => SystemName::Katsura,
            "cyclic" => SystemName::Cyclic,
            other => return Err(Error::Parse(format!("unknown system {:?}", other))),
        };
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("invalid system size {:?}", n)))?;
        SystemSpec::new(name, n)
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.name {
            SystemName::Katsura => "katsura",
            SystemName::Cyclic => "cyclic",
        };
        write!(f, "{}:{}", name, self.n)
    }
}

fn one_var(nvars: usize, i: usize) -> Monomial {
    Monomial::var(nvars, i, 1)
}

/// Katsura-n: `n + 1` equations in `x0, ..., xn`. For each `k < n` the
/// convolution `Σ_{i=-n..n} x_{|i|} x_{|k-i|} = x_k`, where `x_j` with
/// `j > n` is read as 0, and the normalization `x0 + 2·(x1 + ... + xn) = 1`.
pub fn katsura(n: usize) -> Vec<Polynomial> {
    assert!(n >= 2, "katsura needs n >= 2");
    let nvars = n + 1;
    let mut out = Vec::with_capacity(nvars);
    for k in 0..n {
        let mut terms: Vec<(Monomial, Rational)> = Vec::new();
        for i in -(n as i64)..=(n as i64) {
            let a = i.unsigned_abs() as usize;
            let b = (k as i64 - i).unsigned_abs() as usize;
            if a > n || b > n {
                continue;
            }
            let m = one_var(nvars, a).mul(&one_var(nvars, b));
            terms.push((m, Rational::from_integer(1.into())));
        }
        terms.push((one_var(nvars, k), Rational::from_integer((-1).into())));
        out.push(Polynomial::from_terms(nvars, terms));
    }
    let mut linear: Vec<(Monomial, Rational)> = vec![(one_var(nvars, 0), Rational::from_integer(1.into()))];
    for i in 1..=n {
        linear.push((one_var(nvars, i), Rational::from_integer(2.into())));
    }
    linear.push((Monomial::one(nvars), Rational::from_integer((-1).into())));
    out.push(Polynomial::from_terms(nvars, linear));
    out
}

/// Cyclic-n: for `k = 1..n-1` the sum of all products of `k` cyclically
/// consecutive variables, plus `x1···xn − 1`.
pub fn cyclic(n: usize) -> Vec<Polynomial> {
    assert!(n >= 2, "cyclic needs n >= 2");
    let mut out = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut m = Monomial::one(n);
            for j in i..i + k {
                m = m.mul(&one_var(n, j % n));
            }
            (m, Rational::from_integer(1.into()))
        });
        out.push(Polynomial::from_terms(n, terms));
    }
    let mut all = Monomial::one(n);
    for i in 0..n {
        all = all.mul(&one_var(n, i));
    }
    out.push(Polynomial::from_terms(
        n,
        [
            (all, Rational::from_integer(1.into())),
            (Monomial::one(n), Rational::from_integer((-1).into())),
        ],
    ));
    out
}
