//! Mora's weak normal form: head reduction that terminates even though the
//! term order ranks "small" terms first.
//!
//! Plain head reduction can loop forever here: reducing `X` by `X − 2X²`
//! over `Q_2` at radius 0 produces `2X², 4X³, 8X⁴, ...` with ever higher
//! valuation and never stops. Mora's fix is to watch the écart (the degree
//! spread between a polynomial and its head) and, whenever the chosen
//! divisor has worse écart than the current remainder, push the remainder
//! itself into the divisor table before reducing. Reductions against such
//! recorded remainders multiply `f` by a unit `1 + (small)`, which is why
//! the result is a *weak* normal form: `μ·f = Σ u_i·g_i + h` with
//! `val(μ − 1) > 0`.
//!
//! The same loop, with a different divisor-selection policy and a budget
//! guard, also powers the overconvergent reducer in [`crate::overconv`].

use std::cmp::Ordering;


use crate::coeffs::{ExtValue, Rational};
use crate::order::{LogRadii, Monomial, TateOrder, Term};
use crate::overconv;
use crate::poly::Polynomial;

/// Which divisor a reduction step used: an input polynomial or a remainder
/// recorded at an earlier iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisorRef {
    Input(usize),
    Recorded(usize),
}

/// One reduction step: at `iteration`, `factor·divisor` was subtracted.
#[derive(Debug, Clone)]
pub struct ReductionStep {
    pub iteration: usize,
    pub divisor: DivisorRef,
    pub factor: Term,
}

/// Outcome of a weak normal form computation, with enough data to check
/// the identity `unit·f = Σ cofactors_i · g_i + remainder` independently.
#[derive(Debug, Clone)]
pub struct WnfResult {
    pub remainder: Polynomial,
    /// The unit `μ`, congruent to 1 modulo positive valuation.
    pub unit: Polynomial,
    /// One cofactor per input divisor.
    pub cofactors: Vec<Polynomial>,
    pub steps: usize,
    pub divisor_log: Vec<ReductionStep>,
}

/// Ways a certificate can fail [`WnfResult::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateError {
    /// `unit·f ≠ Σ u_i·g_i + remainder`.
    Identity,
    /// `val(unit − 1) ≤ 0`.
    UnitNotSmallPerturbation,
    /// The remainder is nonzero but its head is divisible by some `LT(g_i)`.
    ReducibleRemainder,
    /// `LT(u_i·g_i)` exceeds `LT(f)`.
    CofactorHead(usize),
    /// More than one `LT(u_i·g_i)` ties with `LT(f)`.
    MultipleEqualHeads,
}

impl std::fmt::Display for CertificateError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertificateError::Identity => write!(f, "certificate identity does not hold"),
            CertificateError::UnitNotSmallPerturbation => {
                write!(f, "unit is not 1 + (positive valuation)")
            }
            CertificateError::ReducibleRemainder => write!(f, "remainder head is reducible"),
            CertificateError::CofactorHead(i) => {
                write!(f, "cofactor {} raises the head above LT(f)", i)
            }
            CertificateError::MultipleEqualHeads => {
                write!(f, "more than one cofactor head reaches LT(f)")
            }
        }
    }
}

impl WnfResult {
    /// Re-multiply and check every clause of the weak normal form contract.
    pub fn verify(
        &self,
        f: &Polynomial,
        divisors: &[Polynomial],
        o: &TateOrder,
    ) -> Result<(), CertificateError> {
        assert_eq!(divisors.len(), self.cofactors.len(), "cofactor count mismatch");
        let mut rhs = self.remainder.clone();
        for (u, g) in self.cofactors.iter().zip(divisors) {
            rhs = &rhs + &(u * g);
        }
        if &self.unit * f != rhs {
            return Err(CertificateError::Identity);
        }
        let one = Polynomial::one(f.nvars());
        if (&self.unit - &one).gauss_valuation(o) <= ExtValue::zero() {
            return Err(CertificateError::UnitNotSmallPerturbation);
        }
        if let Some(lt) = self.remainder.leading_term(o) {
            if divisors
                .iter()
                .any(|g| g.leading_term(o).unwrap().monomial().divides(lt.monomial()))
            {
                return Err(CertificateError::ReducibleRemainder);
            }
        }
        if let Some(lf) = f.leading_term(o) {
            let mut equal_heads = 0usize;
            for (i, (u, g)) in self.cofactors.iter().zip(divisors).enumerate() {
                if u.is_zero() {
                    continue;
                }
                let head = (u * g).leading_term(o).expect("u·g nonzero for nonzero u, g");
                match o.compare(&head, &lf) {
                    Ordering::Greater => return Err(CertificateError::CofactorHead(i)),
                    Ordering::Equal => equal_heads += 1,
                    Ordering::Less => {}
                }
            }
            if equal_heads > 1 {
                return Err(CertificateError::MultipleEqualHeads);
            }
        }
        Ok(())
    }
}

/// Degree spread between a polynomial and its head.
pub fn ecart1(f: &Polynomial, o: &TateOrder) -> u64 {
    let lt = f.leading_term(o).expect("ecart of zero polynomial");
    f.total_degree().unwrap() - lt.monomial().degree()
}

/// Number of monomials in the support of `g` missing from the support of
/// `h`; measures how much a reduction by `g` can grow `h`.
pub fn ecart2(h: &Polynomial, g: &Polynomial) -> usize {
    g.support().filter(|m| h.coeff_of(m).is_none()).count()
}

/// [`ecart2`] of `x^shift · g` against `h`, without building the shifted
/// polynomial (only the monomials matter).
fn ecart2_shifted(h: &Polynomial, g: &Polynomial, shift: &Monomial) -> usize {
    g.support().filter(|m| h.coeff_of(&m.mul(shift)).is_none()).count()
}

/// Weak normal form of `f` against `divisors`. Same reduction decisions as
/// [`wnf_with_cofactors`], without the certificate bookkeeping.
pub fn wnf(f: &Polynomial, divisors: &[Polynomial], o: &TateOrder) -> Polynomial {
    let run = reduce(f, divisors, o, false, None);
    match run.stop {
        EngineStop::Done => run.result.remainder,
        EngineStop::Budget { .. } => unreachable!("no budget without overconvergent mode"),
    }
}

/// Weak normal form with the full certificate `μ·f = Σ u_i·g_i + h`.
pub fn wnf_with_cofactors(f: &Polynomial, divisors: &[Polynomial], o: &TateOrder) -> WnfResult {
    let run = reduce(f, divisors, o, true, None);
    match run.stop {
        EngineStop::Done => run.result,
        EngineStop::Budget { .. } => unreachable!("no budget without overconvergent mode"),
    }
}

/// Overconvergent operating mode for the shared engine: divisors are
/// selected by the `(s, r)` écarts and the run aborts once the remainder's
/// `val_s` exceeds the budget (or the step cap trips).
pub(crate) struct OverconvMode<'a> {
    pub s: &'a LogRadii,
    pub budget: Rational,
    pub step_cap: usize,
}

pub(crate) enum EngineStop {
    Done,
    Budget { final_val_s: ExtValue, step_cap_hit: bool, val_s_nondecreasing: bool },
}

pub(crate) struct EngineRun {
    pub result: WnfResult,
    pub stop: EngineStop,
    pub max_t: usize,
}

struct TEntry {
    poly: Polynomial,
    lt: Term,
    ecart1: u64,
    /// `(Ecart_{s,r,0}, Ecart_{s,r,1})`, cached in overconvergent mode.
    oc: Option<(Rational, Rational)>,
    origin: DivisorRef,
    /// Index into the `(unit, cofactors)` snapshots, when certifying.
    snapshot: Option<usize>,
}

pub(crate) fn reduce(
    f: &Polynomial,
    divisors: &[Polynomial],
    o: &TateOrder,
    certify: bool,
    oc: Option<OverconvMode>,
) -> EngineRun {
    let nvars = o.nvars();
    assert_eq!(f.nvars(), nvars, "polynomial/order variable mismatch");
    let mut unit = Polynomial::one(nvars);
    let mut cofactors = vec![Polynomial::zero(nvars); divisors.len()];
    let mut snapshots: Vec<(Polynomial, Vec<Polynomial>)> = Vec::new();

    let mut table: Vec<TEntry> = Vec::with_capacity(divisors.len());
    for (i, g) in divisors.iter().enumerate() {
        assert!(!g.is_zero(), "zero divisor at index {}", i);
        assert_eq!(g.nvars(), nvars, "polynomial/order variable mismatch");
        table.push(TEntry {
            lt: g.leading_term(o).unwrap(),
            ecart1: ecart1(g, o),
            oc: oc.as_ref().map(|m| overconv_key(g, m.s, o)),
            poly: g.clone(),
            origin: DivisorRef::Input(i),
            snapshot: None,
        });
    }

    let mut h = f.clone();
    let mut steps = 0usize;
    let mut divisor_log = Vec::new();
    let mut max_t = table.len();
    let mut prev_lt: Option<Term> = None;
    let mut prev_val_s: Option<ExtValue> = None;
    let mut val_s_nondecreasing = true;

    loop {
        if h.is_zero() {
            break;
        }
        let lt_h = h.leading_term(o).unwrap();
        // Heads must drop strictly along any trace.
        if let Some(prev) = &prev_lt {
            assert_eq!(o.compare(&lt_h, prev), Ordering::Less, "head failed to decrease");
        }

        let candidates: Vec<usize> = (0..table.len())
            .filter(|&i| table[i].lt.monomial().divides(lt_h.monomial()))
            .collect();
        if candidates.is_empty() {
            break;
        }

        if let Some(mode) = &oc {
            let val_s = h.gauss_valuation_at(mode.s, o.prime());
            if let Some(prev) = &prev_val_s {
                if val_s < *prev {
                    val_s_nondecreasing = false;
                }
            }
            prev_val_s = Some(val_s.clone());
            let over_budget = match &val_s {
                ExtValue::Finite(q) => *q > mode.budget,
                ExtValue::Infinity => false,
                ExtValue::NegInfinity => false,
            };
            if over_budget || steps >= mode.step_cap {
                return EngineRun {
                    result: WnfResult { remainder: h, unit, cofactors, steps, divisor_log },
                    stop: EngineStop::Budget {
                        final_val_s: val_s,
                        step_cap_hit: steps >= mode.step_cap,
                        val_s_nondecreasing,
                    },
                    max_t,
                };
            }
        }

        // Pick the divisor with the best écart key; earliest entry wins
        // ties. In overconvergent mode the (s, r) écarts of the divisor
        // alone come first, then the classical key as tie-break so that
        // s = r degenerates to exactly the classical behaviour. Ecart₂ is
        // the expensive component, so it is only evaluated on candidates
        // that tie on everything before it.
        let pre_key = |i: usize| (table[i].oc.as_ref(), table[i].ecart1);
        let best_pre = candidates.iter().map(|&i| pre_key(i)).min().unwrap();
        let mut chosen = usize::MAX;
        let mut g_ecart2 = usize::MAX;
        for &i in &candidates {
            if pre_key(i) != best_pre {
                continue;
            }
            let shift = lt_h.monomial().div(table[i].lt.monomial()).unwrap();
            let e2 = ecart2_shifted(&h, &table[i].poly, &shift);
            if e2 < g_ecart2 {
                chosen = i;
                g_ecart2 = e2;
            }
        }
        let g_ecart1 = table[chosen].ecart1;

        let h_ecart1 = h.total_degree().unwrap() - lt_h.monomial().degree();
        let classical_record = g_ecart1 > h_ecart1 || g_ecart2 > 0;
        let h_key = oc.as_ref().map(|m| overconv_key(&h, m.s, o));
        let record = match (&oc, &h_key) {
            (None, _) => classical_record,
            (Some(_), Some((h0, h1))) => {
                let (g0, g1) = table[chosen].oc.as_ref().unwrap();
                g0 > h0 || g1 > h1 || classical_record
            }
            (Some(_), None) => unreachable!(),
        };

        // When the chosen divisor's écarts do not exceed the remainder's,
        // the step must keep val_s from dropping (and deg_{s,r} from
        // growing at constant val_s); check that as we go.
        let monotone_pre = match (&oc, &h_key) {
            (Some(mode), Some((h0, h1))) => {
                let (g0, g1) = table[chosen].oc.as_ref().unwrap();
                (g0 <= h0 && g1 <= h1).then(|| {
                    // val_s(h) was just computed for the budget check.
                    (prev_val_s.clone().unwrap(), overconv::deg_sr(&h, mode.s, o))
                })
            }
            _ => None,
        };
        if record {
            let snapshot = if certify {
                snapshots.push((unit.clone(), cofactors.clone()));
                Some(snapshots.len() - 1)
            } else {
                None
            };
            table.push(TEntry {
                lt: lt_h.clone(),
                ecart1: h_ecart1,
                oc: h_key.clone(),
                poly: h.clone(),
                origin: DivisorRef::Recorded(steps),
                snapshot,
            });
            max_t = max_t.max(table.len());
        }

        let factor = Term::new(
            lt_h.coeff() / table[chosen].lt.coeff(),
            lt_h.monomial().div(table[chosen].lt.monomial()).unwrap(),
        );
        h.sub_term_mul(&factor, &table[chosen].poly);
        if let Some((val_before, deg_before)) = monotone_pre {
            let mode = oc.as_ref().unwrap();
            let val_after = h.gauss_valuation_at(mode.s, o.prime());
            assert!(val_after >= val_before, "val_s dropped under the écart hypotheses");
            if val_after == val_before {
                let deg_after = overconv::deg_sr(&h, mode.s, o);
                assert!(deg_after <= deg_before, "deg_(s,r) grew at constant val_s");
            }
        }
        if certify {
            match table[chosen].origin {
                DivisorRef::Input(m) => {
                    cofactors[m] = &cofactors[m] + &Polynomial::from_term(factor.clone());
                }
                DivisorRef::Recorded(_) => {
                    let (unit_m, cof_m) = &snapshots[table[chosen].snapshot.unwrap()];
                    unit = &unit - &unit_m.mul_term(&factor);
                    for (u, u_m) in cofactors.iter_mut().zip(cof_m) {
                        *u = &*u - &u_m.mul_term(&factor);
                    }
                }
            }
        }
        divisor_log.push(ReductionStep {
            iteration: steps,
            divisor: table[chosen].origin,
            factor,
        });
        steps += 1;
        prev_lt = Some(lt_h);
    }

    EngineRun {
        result: WnfResult { remainder: h, unit, cofactors, steps, divisor_log },
        stop: EngineStop::Done,
        max_t,
    }
}

fn overconv_key(g: &Polynomial, s: &LogRadii, o: &TateOrder) -> (Rational, Rational) {
    overconv::ecart_pair(g, s, o)
}
