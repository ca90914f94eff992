//! Initial ideals as the radii vary, and sample-relative universal bases.
//!
//! Over all rational log-radii an ideal of polynomials has only finitely
//! many initial ideals, but no algorithm is implemented here to enumerate
//! them exactly; this module explores them empirically over user-chosen
//! sample radii. Two samples are considered to give the same initial data
//! when their minimalized bases have identical canonical leading-term
//! sets, where each leading term is recorded as its monomial plus the
//! valuation of its coefficient — the coefficient itself only matters
//! through its valuation class, while the valuation genuinely matters:
//! regions of constant initial ideal are generally not cones.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::buchberger::{self, GroebnerBasis};
use crate::coeffs::Rational;
use crate::error::Error;
use crate::ideals::IdealPresentation;
use crate::order::{LogRadii, Monomial, TateOrder};
use crate::poly::Polynomial;

/// Canonical form of an initial ideal: minimal generating leading
/// monomials paired with the valuations of their coefficients.
pub type LtSet = BTreeSet<(Monomial, Rational)>;

/// One region representative: an LT set, every sampled radii vector that
/// produced it, and the basis computed at the first of them.
#[derive(Debug, Clone)]
pub struct FanEntry {
    pub lt_set: LtSet,
    pub representatives: Vec<LogRadii>,
    pub basis: GroebnerBasis,
}

/// Sampled view of the initial-ideal landscape; entries are pairwise
/// distinct in their LT sets and sorted by them.
#[derive(Debug, Clone)]
pub struct FanReport {
    pub entries: Vec<FanEntry>,
}

impl FanReport {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn require_finite(r: &LogRadii) -> Result<(), Error> {
    if !r.is_all_finite() {
        return Err(Error::InvalidRadii("initial-term sampling needs finite radii".into()));
    }
    Ok(())
}

fn basis_at(i: &IdealPresentation, r: &LogRadii) -> Result<GroebnerBasis, Error> {
    let o = i.order().with_radii(r.clone())?;
    if i.generators().is_empty() {
        return Ok(GroebnerBasis::from_parts(Vec::new(), o));
    }
    Ok(buchberger::groebner(i.generators(), &o)?.minimalize())
}

fn lt_set_of(basis: &GroebnerBasis) -> LtSet {
    let o = basis.order();
    basis
        .elements()
        .iter()
        .map(|g| {
            let lt = g.leading_term(o).unwrap();
            let val = o.prime().valuation(lt.coeff()).expect_finite("leading coefficient").clone();
            (lt.monomial().clone(), val)
        })
        .collect()
}

/// Canonical LT set of the ideal at radii `r` (which must be finite), from
/// a minimalized basis under the presentation's tie-break and prime.
pub fn initial_terms(i: &IdealPresentation, r: &LogRadii) -> Result<LtSet, Error> {
    require_finite(r)?;
    Ok(lt_set_of(&basis_at(i, r)?))
}

/// Group `samples` by their canonical LT sets.
pub fn sample_initial_ideals(
    i: &IdealPresentation,
    samples: &[LogRadii],
) -> Result<FanReport, Error> {
    if samples.is_empty() {
        return Err(Error::EmptyInput("radii samples"));
    }
    let mut groups: BTreeMap<LtSet, FanEntry> = BTreeMap::new();
    for r in samples {
        require_finite(r)?;
        let basis = basis_at(i, r)?;
        let lt_set = lt_set_of(&basis);
        groups
            .entry(lt_set.clone())
            .or_insert_with(|| FanEntry { lt_set, representatives: Vec::new(), basis })
            .representatives
            .push(r.clone());
    }
    Ok(FanReport { entries: groups.into_values().collect() })
}

/// Why a candidate set failed to be a basis at some sampled radii.
#[derive(Debug, Clone)]
pub struct UniversalFailure {
    pub radii: LogRadii,
    pub pair: (usize, usize),
    pub remainder: Polynomial,
}

/// Check that `elements` is a Gröbner basis at every sampled radii vector,
/// under the template's tie-break and prime. The guarantee is relative to
/// the samples; nothing is claimed in between them.
pub fn check_universal(
    elements: &[Polynomial],
    samples: &[LogRadii],
    template: &TateOrder,
) -> Result<(), UniversalFailure> {
    for r in samples {
        let o = template.with_radii(r.clone()).expect("sample arity mismatch");
        if let Err(f) = buchberger::buchberger_criterion(elements, &o) {
            return Err(UniversalFailure {
                radii: r.clone(),
                pair: f.pair,
                remainder: f.remainder,
            });
        }
    }
    Ok(())
}

/// Deduplicated union of the minimalized bases at each sample: a basis of
/// the ideal at every sampled radii vector at once.
pub fn candidate_universal_gb(
    i: &IdealPresentation,
    samples: &[LogRadii],
) -> Result<Vec<Polynomial>, Error> {
    if samples.is_empty() {
        return Err(Error::EmptyInput("radii samples"));
    }
    let mut union: Vec<Polynomial> = Vec::new();
    for r in samples {
        require_finite(r)?;
        for g in basis_at(i, r)?.into_elements() {
            if !union.contains(&g) {
                union.push(g);
            }
        }
    }
    Ok(union)
}
