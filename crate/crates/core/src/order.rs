//! Monomials, terms, log-radii and the valuation-first term orders.
//!
//! A term `a·X^i` is compared by its Gauss valuation `val(a) − r·i` (lower
//! valuation means a *greater* term), with a classical monomial order
//! breaking ties. Variables may carry log-radius `+inf`, in which case any
//! term involving them has Gauss valuation `−inf`; those terms compare by
//! their degree in the infinite-radius variables first, which is what makes
//! elimination work.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::coeffs::{ExtValue, PrimeContext, Rational};
use crate::error::Error;

/// Exponent vector. The derived `Ord` is the structural (lexicographic on
/// exponents) order used only for deterministic storage, never for term
/// comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// Single variable `x_i` (0-based) to the given power.
    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        assert!(i < nvars, "variable index {} out of range", i);
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Componentwise difference, `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        assert_eq!(self.nvars(), other.nvars());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Monomial { exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial { exps }
    }
}

/// Nonzero coefficient times a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    coeff: Rational,
    monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, monomial: Monomial) -> Self {
        assert!(!coeff.is_zero(), "zero coefficient in term");
        Term { coeff, monomial }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn monomial(&self) -> &Monomial {
        &self.monomial
    }

    pub fn into_parts(self) -> (Rational, Monomial) {
        (self.coeff, self.monomial)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term::new(&self.coeff * &other.coeff, self.monomial.mul(&other.monomial))
    }

    /// Exact term division, `None` unless the monomial part divides.
    pub fn div(&self, other: &Term) -> Option<Term> {
        let m = self.monomial.div(&other.monomial)?;
        Some(Term::new(&self.coeff / &other.coeff, m))
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.monomial.divides(&other.monomial)
    }
}

/// Log-radii of the polydisk of convergence: one entry per variable, each a
/// finite rational or `+inf` (never `-inf`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogRadii {
    entries: Vec<ExtValue>,
    /// Machine-integer image of the finite entries over a common
    /// denominator, when they fit; valuation arithmetic is exact either
    /// way, this is just the cheap representation.
    scaled: Option<ScaledRadii>,
}

/// The finite radii written as `nums[k] / den` (with `None` marking an
/// infinite entry). Bounds enforced by [`ScaledRadii::build`] keep every
/// dot product and cross product used below inside `i128`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScaledRadii {
    den: i64,
    nums: Vec<Option<i64>>,
}

impl ScaledRadii {
    /// Numerators and the common denominator are capped at 2³¹ so that
    /// `valuation·den − Σ nums_k·e_k` and its cross-denominator products
    /// stay far from `i128` overflow.
    const LIMIT: i64 = 1 << 31;

    fn build(entries: &[ExtValue]) -> Option<ScaledRadii> {
        let mut den: i64 = 1;
        for e in entries {
            if let ExtValue::Finite(q) = e {
                let d: i64 = q.denom().try_into().ok()?;
                den = den.checked_mul(d / num_integer::gcd(den, d))?;
                if den > Self::LIMIT {
                    return None;
                }
            }
        }
        let mut nums = Vec::with_capacity(entries.len());
        for e in entries {
            match e {
                ExtValue::Infinity => nums.push(None),
                ExtValue::Finite(q) => {
                    let n: i64 = q.numer().try_into().ok()?;
                    let d: i64 = q.denom().try_into().ok()?;
                    let scaled = n.checked_mul(den / d)?;
                    if scaled.abs() > Self::LIMIT {
                        return None;
                    }
                    nums.push(Some(scaled));
                }
                ExtValue::NegInfinity => return None,
            }
        }
        Some(ScaledRadii { den, nums })
    }

    pub(crate) fn den(&self) -> i64 {
        self.den
    }

    /// `den · Σ r_k·e_k` over the finite entries.
    pub(crate) fn finite_dot(&self, m: &Monomial) -> i128 {
        let mut acc: i128 = 0;
        for (n, &e) in self.nums.iter().zip(m.exponents()) {
            if let Some(n) = n {
                acc += *n as i128 * e as i128;
            }
        }
        acc
    }

    /// Whether `m` touches an infinite-radius variable.
    pub(crate) fn hits_infinite(&self, m: &Monomial) -> bool {
        self.nums.iter().zip(m.exponents()).any(|(n, &e)| n.is_none() && e > 0)
    }
}

impl LogRadii {
    pub fn new(entries: Vec<ExtValue>) -> Result<Self, Error> {
        if entries.iter().any(|e| *e == ExtValue::NegInfinity) {
            return Err(Error::InvalidRadii("-inf is not a valid log-radius".into()));
        }
        Ok(Self::with_entries(entries))
    }

    fn with_entries(entries: Vec<ExtValue>) -> Self {
        let scaled = ScaledRadii::build(&entries);
        LogRadii { entries, scaled }
    }

    pub fn zeros(n: usize) -> Self {
        Self::with_entries(vec![ExtValue::zero(); n])
    }

    pub fn from_rationals(rs: Vec<Rational>) -> Self {
        Self::with_entries(rs.into_iter().map(ExtValue::Finite).collect())
    }

    pub fn constant(n: usize, q: Rational) -> Self {
        Self::with_entries(vec![ExtValue::Finite(q); n])
    }

    pub(crate) fn scaled(&self) -> Option<&ScaledRadii> {
        self.scaled.as_ref()
    }

    /// Test-only twin that always takes the rational code paths.
    #[cfg(test)]
    pub(crate) fn without_scaled(mut self) -> Self {
        self.scaled = None;
        self
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[ExtValue] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &ExtValue {
        &self.entries[i]
    }

    pub fn is_all_finite(&self) -> bool {
        self.entries.iter().all(|e| e.is_finite())
    }

    /// `Σ r_k·e_k`, with the convention that a zero exponent contributes
    /// zero even against an infinite radius.
    pub fn weighted_degree(&self, m: &Monomial) -> ExtValue {
        assert_eq!(self.len(), m.nvars());
        let mut finite = Rational::zero();
        for (r, &e) in self.entries.iter().zip(m.exponents()) {
            if e == 0 {
                continue;
            }
            match r {
                ExtValue::Infinity => return ExtValue::Infinity,
                ExtValue::Finite(q) => finite += q * Rational::from_integer(e.into()),
                ExtValue::NegInfinity => unreachable!("excluded at construction"),
            }
        }
        ExtValue::Finite(finite)
    }

    /// Weighted degree over the finite-radius variables only.
    pub fn finite_weighted_degree(&self, m: &Monomial) -> Rational {
        assert_eq!(self.len(), m.nvars());
        let mut acc = Rational::zero();
        for (r, &e) in self.entries.iter().zip(m.exponents()) {
            if let ExtValue::Finite(q) = r {
                if e > 0 {
                    acc += q * Rational::from_integer(e.into());
                }
            }
        }
        acc
    }

    /// Total degree of `m` in the infinite-radius variables.
    pub fn infinite_degree(&self, m: &Monomial) -> u64 {
        assert_eq!(self.len(), m.nvars());
        self.entries
            .iter()
            .zip(m.exponents())
            .filter(|(r, _)| **r == ExtValue::Infinity)
            .map(|(_, &e)| e as u64)
            .sum()
    }

    pub fn componentwise_ge(&self, other: &LogRadii) -> bool {
        self.len() == other.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for LogRadii {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        Ok(())
    }
}

impl FromStr for LogRadii {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let entries = s
            .split(',')
            .map(|part| part.trim().parse::<ExtValue>())
            .collect::<Result<Vec<_>, _>>()?;
        if entries.is_empty() {
            return Err(Error::InvalidRadii("empty radii list".into()));
        }
        LogRadii::new(entries)
    }
}

/// Classical monomial order used to break valuation ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Compare the first `len` variables under `left`; on a tie, the rest
    /// under `right`.
    Block {
        len: usize,
        left: Box<MonomialOrder>,
        right: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(len: usize, left: MonomialOrder, right: MonomialOrder) -> Self {
        MonomialOrder::Block { len, left: Box::new(left), right: Box::new(right) }
    }

    /// Check block widths against the ambient variable count.
    pub fn validate(&self, nvars: usize) -> Result<(), Error> {
        match self {
            MonomialOrder::Lex | MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::Block { len, left, right } => {
                if *len > nvars {
                    return Err(Error::InvalidRadii(format!(
                        "block width {} exceeds {} variables",
                        len, nvars
                    )));
                }
                left.validate(*len)?;
                right.validate(nvars - *len)
            }
        }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        assert_eq!(a.nvars(), b.nvars());
        self.cmp_slices(a.exponents(), b.exponents())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => {
                for (&x, &y) in a.iter().zip(b) {
                    match x.cmp(&y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Equal degree: the last differing exponent decides,
                // smaller exponent meaning greater monomial.
                for (&x, &y) in a.iter().zip(b).rev() {
                    match x.cmp(&y) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { len, left, right } => {
                match left.cmp_slices(&a[..*len], &b[..*len]) {
                    Ordering::Equal => right.cmp_slices(&a[*len..], &b[*len..]),
                    other => other,
                }
            }
        }
    }

    /// The induced order after deleting variable `v`.
    pub fn without_var(&self, v: usize) -> MonomialOrder {
        match self {
            MonomialOrder::Lex => MonomialOrder::Lex,
            MonomialOrder::Grevlex => MonomialOrder::Grevlex,
            MonomialOrder::Block { len, left, right } => {
                if v < *len {
                    if *len == 1 {
                        return (**right).clone();
                    }
                    MonomialOrder::block(*len - 1, left.without_var(v), (**right).clone())
                } else {
                    MonomialOrder::block(*len, (**left).clone(), right.without_var(v - *len))
                }
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Block { len, left, right } => {
                write!(f, "block({};{};{})", len, left, right)
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_order(s.trim())
    }
}

fn parse_order(s: &str) -> Result<MonomialOrder, Error> {
    match s {
        "lex" => return Ok(MonomialOrder::Lex),
        "grevlex" => return Ok(MonomialOrder::Grevlex),
        _ => {}
    }
    let inner = s
        .strip_prefix("block(")
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("unknown monomial order '{}'", s)))?;
    let parts = split_top_level(inner);
    if parts.len() != 3 {
        return Err(Error::Parse(format!("block(...) takes 3 arguments, got {}", parts.len())));
    }
    let len: usize = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad block width '{}'", parts[0])))?;
    Ok(MonomialOrder::block(len, parse_order(parts[1].trim())?, parse_order(parts[2].trim())?))
}

/// Split on `;` at parenthesis depth zero.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// The full term order: log-radii, tie-breaking monomial order and prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TateOrder {
    radii: LogRadii,
    tiebreak: MonomialOrder,
    prime: PrimeContext,
    /// Set on orders produced by [`TateOrder::homogenized`]: the last
    /// variable is a degree-grading variable of radius 0 and ties compare
    /// total degree before the monomial order on the original variables.
    homog: bool,
}

impl TateOrder {
    pub fn new(radii: LogRadii, tiebreak: MonomialOrder, prime: PrimeContext) -> Result<Self, Error> {
        tiebreak.validate(radii.len())?;
        Ok(TateOrder { radii, tiebreak, prime, homog: false })
    }

    pub fn nvars(&self) -> usize {
        self.radii.len()
    }

    pub fn radii(&self) -> &LogRadii {
        &self.radii
    }

    pub fn tiebreak(&self) -> &MonomialOrder {
        &self.tiebreak
    }

    pub fn prime(&self) -> &PrimeContext {
        &self.prime
    }

    pub fn is_homogenized(&self) -> bool {
        self.homog
    }

    /// Same tie-break and prime, different radii.
    pub fn with_radii(&self, radii: LogRadii) -> Result<Self, Error> {
        if radii.len() != self.radii.len() {
            return Err(Error::ContextMismatch(format!(
                "expected {} radii, got {}",
                self.radii.len(),
                radii.len()
            )));
        }
        Ok(TateOrder { radii, ..self.clone() })
    }

    /// Order on the algebra extended by a degree variable `t` of radius 0,
    /// comparing (valuation, total degree, original monomial order).
    pub fn homogenized(&self) -> TateOrder {
        assert!(!self.homog, "already homogenized");
        assert!(self.radii.is_all_finite(), "homogenization needs finite radii");
        let mut entries = self.radii.entries().to_vec();
        entries.push(ExtValue::zero());
        TateOrder {
            radii: LogRadii::new(entries).unwrap(),
            tiebreak: self.tiebreak.clone(),
            prime: self.prime.clone(),
            homog: true,
        }
    }

    /// Gauss valuation `val(a) − r·i` of a term; `-inf` when the term
    /// involves an infinite-radius variable.
    pub fn gauss_valuation(&self, t: &Term) -> ExtValue {
        assert_eq!(t.monomial().nvars(), self.nvars(), "term/order variable mismatch");
        self.prime.valuation(t.coeff()) - self.radii.weighted_degree(t.monomial())
    }

    /// Term comparison; `Greater` means greater under the order (closer to
    /// being the leading term). `Equal` is returned exactly for equal
    /// monomials with equal coefficient valuation.
    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        assert_eq!(a.monomial().nvars(), self.nvars(), "term/order variable mismatch");
        assert_eq!(b.monomial().nvars(), self.nvars(), "term/order variable mismatch");
        if let Some(sr) = self.radii.scaled() {
            let ka = self.scaled_key(sr, a.monomial(), a.coeff());
            let kb = self.scaled_key(sr, b.monomial(), b.coeff());
            return match self.rank_keys(&ka, &kb) {
                Ordering::Equal => self.key_tiebreak(a.monomial(), b.monomial()),
                other => other,
            };
        }
        if self.homog {
            return self.compare_homog_inner(a, b);
        }
        let da = self.radii.infinite_degree(a.monomial());
        let db = self.radii.infinite_degree(b.monomial());
        match da.cmp(&db) {
            Ordering::Equal => {}
            other => return other,
        }
        let va = self.finite_valuation(a);
        let vb = self.finite_valuation(b);
        match vb.cmp(&va) {
            Ordering::Equal => {}
            other => return other,
        }
        self.tiebreak.cmp_monomials(a.monomial(), b.monomial())
    }

    /// Per-term comparison key over machine integers, usable whenever the
    /// radii admit a scaled form: degree in the infinite-radius variables,
    /// then the valuation numerator over the radii's common denominator.
    fn scaled_key(&self, sr: &ScaledRadii, m: &Monomial, c: &Rational) -> (u64, i128) {
        let v = self
            .prime
            .valuation_i64(c)
            .expect("zero coefficient in term");
        let inf_deg = if sr.hits_infinite(m) { self.radii.infinite_degree(m) } else { 0 };
        (inf_deg, v as i128 * sr.den() as i128 - sr.finite_dot(m))
    }

    /// Order two scaled keys: higher infinite degree wins, then lower
    /// valuation; `Equal` hands over to the monomial tie-break.
    fn rank_keys(&self, a: &(u64, i128), b: &(u64, i128)) -> Ordering {
        match a.0.cmp(&b.0) {
            Ordering::Equal => b.1.cmp(&a.1),
            other => other,
        }
    }

    fn key_tiebreak(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.homog {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                other => return other,
            }
            let n = self.nvars() - 1;
            self.tiebreak.cmp_slices(&a.exponents()[..n], &b.exponents()[..n])
        } else {
            self.tiebreak.cmp_monomials(a, b)
        }
    }

    /// Greatest `(monomial, coefficient)` pair under the order, computing
    /// one key per term instead of re-deriving valuations pairwise; this is
    /// the scan behind every leading-term lookup.
    pub(crate) fn leading_entry<'a, I>(&self, terms: I) -> Option<(&'a Monomial, &'a Rational)>
    where
        I: IntoIterator<Item = (&'a Monomial, &'a Rational)>,
    {
        let mut it = terms.into_iter();
        let sr = match self.radii.scaled() {
            Some(sr) => sr,
            None => {
                // Radii outside the machine range: fall back to exact
                // rational comparisons.
                return it.fold(None, |best, (m, c)| match best {
                    None => Some((m, c)),
                    Some((bm, bc)) => {
                        let t = Term::new(c.clone(), m.clone());
                        let cur = Term::new(bc.clone(), bm.clone());
                        if self.compare(&t, &cur) == Ordering::Greater {
                            Some((m, c))
                        } else {
                            Some((bm, bc))
                        }
                    }
                });
            }
        };
        let (mut bm, mut bc) = it.next()?;
        let mut bk = self.scaled_key(sr, bm, bc);
        for (m, c) in it {
            let k = self.scaled_key(sr, m, c);
            let greater = match self.rank_keys(&k, &bk) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => self.key_tiebreak(m, bm) == Ordering::Greater,
            };
            if greater {
                bm = m;
                bc = c;
                bk = k;
            }
        }
        Some((bm, bc))
    }

    /// Comparison in the homogenized algebra, taking `self` as the order on
    /// the original variables; `a` and `b` have one extra (last) variable.
    pub fn compare_homog(&self, a: &Term, b: &Term) -> Ordering {
        self.homogenized().compare(a, b)
    }

    fn compare_homog_inner(&self, a: &Term, b: &Term) -> Ordering {
        let va = self.gauss_valuation(a);
        let vb = self.gauss_valuation(b);
        match vb.cmp(&va) {
            Ordering::Equal => {}
            other => return other,
        }
        match a.monomial().degree().cmp(&b.monomial().degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        let n = self.nvars() - 1;
        self.tiebreak
            .cmp_slices(&a.monomial().exponents()[..n], &b.monomial().exponents()[..n])
    }

    /// Valuation with infinite-radius variables ignored; finite by
    /// construction since term coefficients are nonzero.
    fn finite_valuation(&self, t: &Term) -> Rational {
        let v = self.prime.valuation(t.coeff());
        let q = v.expect_finite("coefficient valuation");
        q - self.radii.finite_weighted_degree(t.monomial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::rational_from_str;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        rational_from_str(s).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn t(c: &str, exps: &[u32]) -> Term {
        Term::new(q(c), m(exps))
    }

    fn order(radii: &str, tiebreak: &str, p: u64) -> TateOrder {
        TateOrder::new(
            radii.parse().unwrap(),
            tiebreak.parse().unwrap(),
            PrimeContext::new(p).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn monomial_arithmetic() {
        let a = m(&[2, 0, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.mul(&b), m(&[3, 3, 1]));
        assert_eq!(a.gcd(&b), m(&[1, 0, 0]));
        assert_eq!(a.lcm(&b), m(&[2, 3, 1]));
        assert_eq!(a.div(&m(&[1, 0, 1])), Some(m(&[1, 0, 0])));
        assert_eq!(a.div(&b), None);
        assert!(m(&[1, 0, 0]).divides(&a));
        assert!(!b.divides(&a));
        assert_eq!(a.degree(), 3);
        assert!(Monomial::one(3).is_one());
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp_monomials(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
        assert_eq!(o.cmp_monomials(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::Grevlex;
        // Degree decides first.
        assert_eq!(o.cmp_monomials(&m(&[0, 2]), &m(&[1, 0])), Ordering::Greater);
        // Equal degree: last differing exponent, smaller wins.
        assert_eq!(o.cmp_monomials(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 1, 0]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn block_order() {
        // First variable alone, lex; rest grevlex.
        let o = MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex);
        assert_eq!(o.cmp_monomials(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp_monomials(&m(&[1, 0, 1]), &m(&[1, 1, 0])), Ordering::Less);
        assert!(o.validate(3).is_ok());
        assert!(o.validate(0).is_err());
    }

    #[test]
    fn order_parse_roundtrip() {
        for s in ["lex", "grevlex", "block(1;lex;grevlex)", "block(2;lex;block(1;lex;grevlex))"] {
            let o: MonomialOrder = s.parse().unwrap();
            assert_eq!(o.to_string(), s);
        }
        assert!("degrevlex".parse::<MonomialOrder>().is_err());
        assert!("block(1;lex)".parse::<MonomialOrder>().is_err());
        assert!("block(x;lex;lex)".parse::<MonomialOrder>().is_err());
    }

    #[test]
    fn radii_parse() {
        let r: LogRadii = "inf,0,0,1/2".parse().unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(*r.get(0), ExtValue::Infinity);
        assert_eq!(*r.get(3), ExtValue::Finite(q("1/2")));
        assert_eq!(r.to_string(), "inf,0,0,1/2");
        assert!("-inf,0".parse::<LogRadii>().is_err());
        assert!(!r.is_all_finite());
        assert!(LogRadii::zeros(2).is_all_finite());
    }

    #[test]
    fn radii_componentwise() {
        let r: LogRadii = "0,0".parse().unwrap();
        let s: LogRadii = "1,0".parse().unwrap();
        assert!(s.componentwise_ge(&r));
        assert!(!r.componentwise_ge(&s));
        assert!(("inf,0".parse::<LogRadii>().unwrap()).componentwise_ge(&s));
    }

    #[test]
    fn gauss_valuation_examples() {
        let o = order("0", "grevlex", 2);
        assert_eq!(o.gauss_valuation(&t("4", &[2])), ExtValue::from_int(2));

        let o1 = order("1", "grevlex", 2);
        assert_eq!(o1.gauss_valuation(&t("2", &[3])), ExtValue::from_int(-2));

        // Variables (t, x) with radius (inf, 0): any t-term has valuation -inf.
        let oe = order("inf,0", "block(1;lex;grevlex)", 2);
        assert_eq!(oe.gauss_valuation(&t("3", &[1, 1])), ExtValue::NegInfinity);
        assert_eq!(oe.gauss_valuation(&t("3", &[0, 2])), ExtValue::zero());
    }

    #[test]
    fn compare_by_valuation_then_tiebreak() {
        let o = order("0", "grevlex", 2);
        // val(X) = 0 beats val(2X^2) = 1.
        assert_eq!(o.compare(&t("1", &[1]), &t("2", &[2])), Ordering::Greater);
        // Same valuation and same monomial: equal as terms.
        assert_eq!(o.compare(&t("2", &[1]), &t("6", &[1])), Ordering::Equal);
        assert_eq!(o.compare(&t("2", &[1]), &t("3", &[1])), Ordering::Less);

        let o1 = order("1", "grevlex", 2);
        // val_1(2X^2) = -1 = val_1(X); grevlex breaks the tie upward.
        assert_eq!(o1.compare(&t("2", &[2]), &t("1", &[1])), Ordering::Greater);
    }

    #[test]
    fn compare_elimination_mode() {
        // Variables (t, x, y), radius of t infinite.
        let o = order("inf,0,0", "block(1;lex;grevlex)", 2);
        // Any t-multiple beats any t-free term.
        assert_eq!(o.compare(&t("4", &[1, 0, 0]), &t("1", &[0, 3, 3])), Ordering::Greater);
        // Higher t-degree wins.
        assert_eq!(o.compare(&t("1", &[2, 0, 0]), &t("1", &[1, 5, 0])), Ordering::Greater);
        // Equal t-degree: finite-part valuation decides.
        assert_eq!(o.compare(&t("2", &[1, 1, 0]), &t("1", &[1, 0, 1])), Ordering::Less);
        // Equal t-degree and valuation: monomial tie-break.
        assert_eq!(o.compare(&t("1", &[1, 2, 0]), &t("1", &[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn compare_homogenized() {
        // One variable X with r = 0, homogenization variable t appended.
        let o = order("0", "grevlex", 2);
        // X·t vs X^2: equal valuation 0, equal degree 2, X < X^2.
        assert_eq!(o.compare_homog(&t("1", &[1, 1]), &t("1", &[2, 0])), Ordering::Less);
        // 2X^2 vs X·t: valuation 1 vs 0, lower valuation is greater.
        assert_eq!(o.compare_homog(&t("2", &[2, 0]), &t("1", &[1, 1])), Ordering::Less);
        // t^2 vs X·t: equal valuation and degree, X-part 1 < X.
        assert_eq!(o.compare_homog(&t("1", &[0, 2]), &t("1", &[1, 1])), Ordering::Less);
    }

    #[test]
    fn homogenized_order_shape() {
        let o = order("1/2,0", "grevlex", 3).homogenized();
        assert_eq!(o.nvars(), 3);
        assert!(o.is_homogenized());
        assert_eq!(*o.radii().get(2), ExtValue::zero());
    }

    #[test]
    fn without_var_restriction() {
        let o = MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex);
        assert_eq!(o.without_var(0), MonomialOrder::Grevlex);
        assert_eq!(
            o.without_var(2),
            MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex)
        );
        assert_eq!(MonomialOrder::Grevlex.without_var(1), MonomialOrder::Grevlex);
    }

    fn arb_term(nvars: usize) -> impl Strategy<Value = Term> {
        let coeff = (-40i64..=40, 1i64..=12).prop_filter_map("nonzero", |(n, d)| {
            if n == 0 {
                None
            } else {
                Some(Rational::new(n.into(), d.into()))
            }
        });
        let exps = proptest::collection::vec(0u32..5, nvars);
        (coeff, exps).prop_map(|(c, e)| Term::new(c, Monomial::new(e)))
    }

    proptest! {
        #[test]
        fn compare_transitive(a in arb_term(3), b in arb_term(3), c in arb_term(3)) {
            let o = order("0,1/2,-1", "grevlex", 2);
            if o.compare(&a, &b) != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn compare_multiplicative(a in arb_term(3), b in arb_term(3), s in arb_term(3)) {
            let o = order("0,1/2,-1", "grevlex", 2);
            let before = o.compare(&a, &b);
            let after = o.compare(&a.mul(&s), &b.mul(&s));
            prop_assert_eq!(before, after);
        }

        #[test]
        fn gauss_valuation_additive(a in arb_term(3), b in arb_term(3)) {
            let o = order("0,1/2,-1", "grevlex", 2);
            let sum = o.gauss_valuation(&a) + o.gauss_valuation(&b);
            prop_assert_eq!(o.gauss_valuation(&a.mul(&b)), sum);
        }

        #[test]
        fn compare_multiplicative_elim(a in arb_term(3), b in arb_term(3), s in arb_term(3)) {
            let o = order("inf,0,1/2", "block(1;lex;grevlex)", 3);
            let before = o.compare(&a, &b);
            let after = o.compare(&a.mul(&s), &b.mul(&s));
            prop_assert_eq!(before, after);
        }

        #[test]
        fn scaled_compare_matches_rational_path(a in arb_term(3), b in arb_term(3)) {
            for (radii, tb, p) in [
                ("0,1/2,-1", "grevlex", 2u64),
                ("inf,2/3,-3/4", "block(1;lex;grevlex)", 5),
            ] {
                let fast = order(radii, tb, p);
                prop_assert!(fast.radii().scaled().is_some());
                let slow = fast.with_radii(fast.radii().clone().without_scaled()).unwrap();
                prop_assert_eq!(fast.compare(&a, &b), slow.compare(&a, &b));
            }
        }

        #[test]
        fn scaled_compare_matches_rational_path_homog(a in arb_term(3), b in arb_term(3)) {
            let fast = order("1/2,-1/3", "grevlex", 3).homogenized();
            let slow = TateOrder {
                radii: fast.radii().clone().without_scaled(),
                ..fast.clone()
            };
            prop_assert_eq!(fast.compare(&a, &b), slow.compare(&a, &b));
        }

        #[test]
        fn leading_entry_matches_rational_path(
            terms in proptest::collection::vec(arb_term(3), 1..8),
        ) {
            for (radii, tb, p) in [
                ("0,1/2,-1", "grevlex", 2u64),
                ("inf,2/3,-3/4", "block(1;lex;grevlex)", 3),
            ] {
                let fast = order(radii, tb, p);
                let slow = fast.with_radii(fast.radii().clone().without_scaled()).unwrap();
                let pairs: Vec<(Monomial, Rational)> = terms
                    .iter()
                    .map(|t| (t.monomial().clone(), t.coeff().clone()))
                    .collect();
                let lf = fast.leading_entry(pairs.iter().map(|(m, c)| (m, c)));
                let ls = slow.leading_entry(pairs.iter().map(|(m, c)| (m, c)));
                prop_assert_eq!(lf, ls);
            }
        }
    }

    #[test]
    fn scaled_radii_construction() {
        let r: LogRadii = "1/3,1/2".parse().unwrap();
        let sr = r.scaled().unwrap();
        assert_eq!(sr.den(), 6);
        assert_eq!(sr.finite_dot(&m(&[1, 1])), 5);
        assert!(!sr.hits_infinite(&m(&[2, 2])));

        let e: LogRadii = "inf,1/2".parse().unwrap();
        let se = e.scaled().unwrap();
        assert_eq!(se.den(), 2);
        assert!(se.hits_infinite(&m(&[1, 0])));
        assert!(!se.hits_infinite(&m(&[0, 4])));

        // Denominator past the cap: no scaled form, rational paths take over.
        let huge = format!("1/{}", 1u64 << 40);
        let h: LogRadii = huge.parse().unwrap();
        assert!(h.scaled().is_none());
    }
}
