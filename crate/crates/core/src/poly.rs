//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are stored unordered in a map keyed by exponent vector; anything
//! order-dependent (leading term, printing) takes the [`TateOrder`]
//! explicitly. The zero coefficient is never stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::coeffs::{ExtValue, Rational};
use crate::order::{LogRadii, Monomial, MonomialOrder, TateOrder, Term};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn from_term(t: Term) -> Self {
        let (c, m) = t.into_parts();
        let nvars = m.nvars();
        Self::from_terms(nvars, [(m, c)])
    }

    /// Build from (monomial, coefficient) pairs, merging duplicates and
    /// dropping zero coefficients.
    pub fn from_terms<I>(nvars: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in pairs {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            if c.is_zero() {
                continue;
            }
            match terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Polynomial { nvars, terms }
    }

    fn from_map(nvars: usize, terms: BTreeMap<Monomial, Rational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in structural (storage) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Greatest term under the order; `None` for the zero polynomial.
    pub fn leading_term(&self, o: &TateOrder) -> Option<Term> {
        let (m, c) = o.leading_entry(self.terms.iter())?;
        Some(Term::new(c.clone(), m.clone()))
    }

    pub fn leading_monomial(&self, o: &TateOrder) -> Option<Monomial> {
        self.leading_term(o).map(|t| t.into_parts().1)
    }

    pub fn leading_coeff(&self, o: &TateOrder) -> Option<Rational> {
        self.leading_term(o).map(|t| t.into_parts().0)
    }

    /// Gauss valuation: minimum over the terms, `+inf` for zero.
    pub fn gauss_valuation(&self, o: &TateOrder) -> ExtValue {
        self.gauss_valuation_at(o.radii(), o.prime())
    }

    /// Gauss valuation against arbitrary radii (same prime): used when a
    /// polynomial is measured on a polydisk other than the order's own.
    pub fn gauss_valuation_at(&self, radii: &LogRadii, p: &crate::coeffs::PrimeContext) -> ExtValue {
        if let Some(sr) = radii.scaled() {
            let mut min: Option<i128> = None;
            for (m, c) in &self.terms {
                if sr.hits_infinite(m) {
                    // A term on an infinite-radius variable already has
                    // valuation −inf; nothing can go lower.
                    return ExtValue::NegInfinity;
                }
                let v = p.valuation_i64(c).expect("zero coefficient stored") as i128
                    * sr.den() as i128
                    - sr.finite_dot(m);
                min = Some(match min {
                    None => v,
                    Some(cur) => cur.min(v),
                });
            }
            return match min {
                None => ExtValue::Infinity,
                Some(v) => ExtValue::Finite(Rational::new(v.into(), sr.den().into())),
            };
        }
        self.terms
            .iter()
            .map(|(m, c)| p.valuation(c) - radii.weighted_degree(m))
            .min()
            .unwrap_or(ExtValue::Infinity)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial::from_map(self.nvars, terms)
    }

    pub fn mul_term(&self, t: &Term) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.mul(t.monomial()), a * t.coeff()))
            .collect();
        Polynomial::from_map(self.nvars, terms)
    }

    /// In-place `self -= t·g`; the workhorse of the reduction loops.
    pub fn sub_term_mul(&mut self, t: &Term, g: &Polynomial) {
        assert_eq!(self.nvars, g.nvars, "polynomial arity mismatch");
        for (m, c) in &g.terms {
            let m = m.mul(t.monomial());
            let c = c * t.coeff();
            match self.terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
    }

    /// Leading monomial under a bare monomial order, ignoring valuations.
    /// This is the classical notion used by exact polynomial division.
    fn classical_leading(&self, o: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        let mut best: Option<(&Monomial, &Rational)> = None;
        for (m, c) in &self.terms {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if o.cmp_monomials(m, bm) == Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best
    }

    /// Exact division in `Q[X]`: `Some(q)` with `self = q·g`, or `None`
    /// when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        assert!(!g.is_zero(), "division by zero polynomial");
        assert_eq!(self.nvars, g.nvars, "polynomial arity mismatch");
        let o = MonomialOrder::Grevlex;
        let (gm, gc) = g.classical_leading(&o).map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut h = self.clone();
        let mut q = Polynomial::zero(self.nvars);
        while let Some((hm, hc)) = h.classical_leading(&o) {
            let m = hm.div(&gm)?;
            let t = Term::new(hc / &gc, m);
            h.sub_term_mul(&t, g);
            q = &q + &Polynomial::from_term(t);
        }
        Some(q)
    }

    /// Insert the grading variable `t` as a new last variable so that every
    /// term reaches the total degree of the polynomial.
    pub fn homogenize(&self) -> Polynomial {
        let d = self.total_degree().unwrap_or(0);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps.push((d - m.degree()) as u32);
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_map(self.nvars + 1, terms)
    }

    /// Set the last variable to 1 and drop it, merging collapsed terms.
    pub fn dehomogenize(&self) -> Polynomial {
        assert!(self.nvars > 0, "no variable to dehomogenize");
        Polynomial::from_terms(
            self.nvars - 1,
            self.terms.iter().map(|(m, c)| {
                let exps = m.exponents()[..self.nvars - 1].to_vec();
                (Monomial::new(exps), c.clone())
            }),
        )
    }

    /// Rewrite every exponent vector; used for variable permutations and
    /// embeddings into larger algebras.
    pub(crate) fn map_exponents<F>(&self, new_nvars: usize, f: F) -> Polynomial
    where
        F: Fn(&[u32]) -> Vec<u32>,
    {
        Polynomial::from_terms(
            new_nvars,
            self.terms.iter().map(|(m, c)| (Monomial::new(f(m.exponents())), c.clone())),
        )
    }

    /// Canonical string: terms descending under `o`, coefficients in lowest
    /// terms, `*` between factors and `^` for exponents.
    pub fn to_string_with(&self, names: &[String], o: &TateOrder) -> String {
        assert_eq!(names.len(), self.nvars, "name/arity mismatch");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<Term> =
            self.terms.iter().map(|(m, c)| Term::new(c.clone(), m.clone())).collect();
        terms.sort_by(|a, b| o.compare(b, a));
        let mut out = String::new();
        for (i, t) in terms.iter().enumerate() {
            let c = t.coeff();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&format_abs_term(c, t.monomial(), names));
        }
        out
    }
}

fn format_abs_term(c: &Rational, m: &Monomial, names: &[String]) -> String {
    let abs = c.abs();
    let mut factors: Vec<String> = Vec::new();
    if !abs.is_one() || m.is_one() {
        factors.push(abs.to_string());
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(names[i].clone()),
            _ => factors.push(format!("{}^{}", names[i], e)),
        }
    }
    factors.join("*")
}

/// Debug-oriented display with default variable names `x1..xn` and terms in
/// a fixed structural order; canonical printing goes through
/// [`Polynomial::to_string_with`].
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{}", i)).collect();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_abs_term(c, m, &names))?;
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.entry(m.clone()) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Polynomial::from_map(self.nvars, terms)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial::from_map(self.nvars, terms)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "polynomial arity mismatch");
        let mut acc = Polynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            let t = Term::new(c.clone(), m.clone());
            acc = &acc + &self.mul_term(&t);
        }
        acc
    }
}

/// S-polynomial: cross-multiply by the leading terms divided by their
/// monomial gcd (gcd taken with coefficient 1), so the heads cancel.
pub fn spoly(f: &Polynomial, g: &Polynomial, o: &TateOrder) -> Polynomial {
    let lf = f.leading_term(o).expect("s-polynomial of zero polynomial");
    let lg = g.leading_term(o).expect("s-polynomial of zero polynomial");
    let gcd = lf.monomial().gcd(lg.monomial());
    let tf = Term::new(lg.coeff().clone(), lg.monomial().div(&gcd).unwrap());
    let tg = Term::new(lf.coeff().clone(), lf.monomial().div(&gcd).unwrap());
    &f.mul_term(&tf) - &g.mul_term(&tg)
}
