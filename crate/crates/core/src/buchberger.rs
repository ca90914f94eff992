//! Buchberger's algorithm over Tate term orders, plus the Buchberger
//! criterion as a verifier and leading-term minimalization.
//!
//! The loop is the plain schoolbook one: keep a FIFO queue of index pairs,
//! reduce each S-polynomial to a weak normal form against the current
//! basis, and append nonzero remainders. No product or chain criteria are
//! applied; their soundness for valuation-first orders is an open question,
//! and the plain loop is provably correct. Pair order is deterministic so
//! two runs on the same input produce identical bases.
//!
//! Every remainder appended to the basis has a head that no earlier
//! leading term divides, so the monoid ideal of leading terms grows
//! strictly at each addition; that is the termination argument, and the
//! loop checks it as it goes.

use std::collections::VecDeque;

use num_traits::ToPrimitive;

use crate::error::Error;
use crate::mora;
use crate::order::TateOrder;
use crate::poly::{spoly, Polynomial};

/// A verified (or construction-guaranteed) Gröbner basis together with the
/// order it is a basis for.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: TateOrder,
    minimal: bool,
}

/// Counters from a Buchberger run, for benchmarking and diagnostics.
#[derive(Debug, Clone, Default)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub basis_additions: usize,
    /// Total reduction steps across all weak normal forms.
    pub reduction_steps: usize,
    /// Largest divisor table any single reduction built up.
    pub max_t_size: usize,
    /// Reductions cut off by the budget and treated as zero (only the
    /// overconvergent wrapper produces these).
    pub budget_truncations: usize,
    pub truncated_pairs: Vec<(usize, usize)>,
}

/// Witness that a set fails the Buchberger criterion: the offending pair
/// of indices and the nonzero remainder of its S-polynomial.
#[derive(Debug, Clone)]
pub struct CriterionFailure {
    pub pair: (usize, usize),
    pub remainder: Polynomial,
}

pub(crate) enum ReductionOutcome {
    Remainder(Polynomial),
    /// The reduction hit its budget; the caller treats it as a zero
    /// reduction and logs the pair.
    TreatedAsZero,
}

/// The Buchberger loop, parameterized over the reduction routine so the
/// classical and overconvergent entry points share one implementation.
pub(crate) fn buchberger_loop<R>(
    generators: &[Polynomial],
    order: &TateOrder,
    mut reduce: R,
) -> Result<(Vec<Polynomial>, GbStats), Error>
where
    R: FnMut(&Polynomial, &[Polynomial], &mut GbStats) -> ReductionOutcome,
{
    if generators.is_empty() {
        return Err(Error::EmptyInput("generator list"));
    }
    for g in generators {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial("generator"));
        }
        assert_eq!(g.nvars(), order.nvars(), "polynomial/order variable mismatch");
    }

    let mut basis: Vec<Polynomial> = generators.to_vec();
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for j in 1..basis.len() {
        for i in 0..j {
            queue.push_back((i, j));
        }
    }

    let mut stats = GbStats::default();
    while let Some((i, j)) = queue.pop_front() {
        stats.pairs_processed += 1;
        let sp = spoly(&basis[i], &basis[j], order);
        if sp.is_zero() {
            stats.zero_reductions += 1;
            continue;
        }
        match reduce(&sp, &basis, &mut stats) {
            ReductionOutcome::Remainder(h) if h.is_zero() => stats.zero_reductions += 1,
            ReductionOutcome::Remainder(h) => {
                let lt = h.leading_monomial(order).unwrap();
                debug_assert!(
                    basis.iter().all(|g| !g.leading_monomial(order).unwrap().divides(&lt)),
                    "remainder head reducible against basis"
                );
                let k = basis.len();
                for m in 0..k {
                    queue.push_back((m, k));
                }
                basis.push(h);
                stats.basis_additions += 1;
            }
            ReductionOutcome::TreatedAsZero => {
                stats.zero_reductions += 1;
                stats.budget_truncations += 1;
                stats.truncated_pairs.push((i, j));
            }
        }
    }
    Ok((basis, stats))
}

/// Gröbner basis of the ideal generated by `generators` in `K{X; r}`.
///
/// The output consists of polynomials (finite support, exact rational
/// coefficients): every basis element is obtained from the input by
/// polynomial combinations and unit scalings, so no precision parameter
/// enters at any point.
pub fn groebner(generators: &[Polynomial], o: &TateOrder) -> Result<GroebnerBasis, Error> {
    groebner_with_stats(generators, o).map(|(basis, _)| basis)
}

/// Same as [`groebner`], also returning run statistics.
pub fn groebner_with_stats(
    generators: &[Polynomial],
    o: &TateOrder,
) -> Result<(GroebnerBasis, GbStats), Error> {
    let (elements, stats) = buchberger_loop(generators, o, |sp, basis, stats| {
        let run = mora::reduce(sp, basis, o, false, None);
        stats.reduction_steps += run.result.steps;
        stats.max_t_size = stats.max_t_size.max(run.max_t);
        ReductionOutcome::Remainder(run.result.remainder)
    })?;
    Ok((GroebnerBasis::from_parts(elements, o.clone()), stats))
}

/// Check the Buchberger criterion: every pairwise S-polynomial must reduce
/// to zero against the whole set.
pub fn buchberger_criterion(
    elements: &[Polynomial],
    o: &TateOrder,
) -> Result<(), CriterionFailure> {
    for g in elements {
        assert!(!g.is_zero(), "zero polynomial in candidate basis");
    }
    for j in 1..elements.len() {
        for i in 0..j {
            let sp = spoly(&elements[i], &elements[j], o);
            let h = mora::wnf(&sp, elements, o);
            if !h.is_zero() {
                return Err(CriterionFailure { pair: (i, j), remainder: h });
            }
        }
    }
    Ok(())
}

/// True iff `elements` is a Gröbner basis of the ideal it generates.
/// [`buchberger_criterion`] reports the witness pair on failure.
pub fn is_groebner(elements: &[Polynomial], o: &TateOrder) -> bool {
    buchberger_criterion(elements, o).is_ok()
}

impl GroebnerBasis {
    /// Wrap an externally obtained set after verifying the Buchberger
    /// criterion under `o`.
    pub fn new(elements: Vec<Polynomial>, o: TateOrder) -> Result<Self, Error> {
        match buchberger_criterion(&elements, &o) {
            Ok(()) => Ok(Self::from_parts(elements, o)),
            Err(f) => Err(Error::NotGroebner { pair: f.pair }),
        }
    }

    /// Construction-guaranteed variant for the Buchberger loop's own
    /// output. Detects minimality rather than trusting the caller.
    pub(crate) fn from_parts(elements: Vec<Polynomial>, order: TateOrder) -> Self {
        let lts: Vec<_> =
            elements.iter().map(|g| g.leading_monomial(&order).unwrap()).collect();
        let minimal = lts
            .iter()
            .enumerate()
            .all(|(i, m)| lts.iter().enumerate().all(|(j, d)| i == j || !d.divides(m)));
        GroebnerBasis { elements, order, minimal }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn order(&self) -> &TateOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    /// Drop every element whose leading term is divisible by another's
    /// (on equal leading monomials, the earliest-added element survives)
    /// and normalize each leading coefficient to the power of p carrying
    /// its valuation.
    pub fn minimalize(&self) -> GroebnerBasis {
        let o = &self.order;
        let lts: Vec<_> =
            self.elements.iter().map(|g| g.leading_monomial(o).unwrap()).collect();
        let keep = |i: usize| {
            lts.iter().enumerate().all(|(j, d)| {
                if d == &lts[i] {
                    j >= i
                } else {
                    !d.divides(&lts[i])
                }
            })
        };
        let p = o.prime();
        let elements: Vec<Polynomial> = (0..self.elements.len())
            .filter(|&i| keep(i))
            .map(|i| {
                let lc = self.elements[i].leading_coeff(o).unwrap();
                let k = p
                    .valuation(&lc)
                    .expect_finite("nonzero leading coefficient")
                    .to_integer()
                    .to_i64()
                    .expect("leading coefficient valuation out of range");
                self.elements[i].scale(&(p.power(k) / lc))
            })
            .collect();
        GroebnerBasis { elements, order: self.order.clone(), minimal: true }
    }
}
