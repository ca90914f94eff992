//! Reduction and Gröbner bases for overconvergent series: elements of
//! `K{X; r}` that also converge on the larger polydisk given by log-radii
//! `s ≥ r`.
//!
//! Working at radius `r` with divisors that are `s`-convergent, the écarts
//! here compare behaviour at `s` instead of plain degrees:
//!
//! * `ecart_sr0(f) = val_s(LT_r(f)) − val_s(f)`, how far the `r`-head is
//!   from realizing the `s`-valuation;
//! * `ecart_sr1(f) = deg_{s,r}(f) − deg_{s,r}(LT_r(f))`, where
//!   `deg_{s,r}(f)` maximizes `(s − r)·α` over the monomials achieving
//!   `val_s(f)`.
//!
//! Both are nonnegative, and reduction steps whose divisor does not exceed
//! the remainder in either écart keep `val_s` from dropping. A run either
//! terminates with a weak normal form or drives `val_s` to infinity; the
//! second branch is detected by a configurable `val_s` budget (plus a hard
//! step cap) and reported as [`OverconvOutcome::ReducedToZeroAtBudget`].
//! Taking `s = r` makes both écarts vanish identically and the reduction
//! degenerates to the one in [`crate::mora`], trace for trace.

use crate::buchberger::{self, GbStats, GroebnerBasis, ReductionOutcome};
use crate::coeffs::{ExtValue, Rational};
use crate::error::Error;
use crate::mora::{self, EngineStop, OverconvMode, WnfResult};
use crate::order::{LogRadii, TateOrder};
use crate::poly::Polynomial;

/// Parameters of an overconvergent reduction: the working order (whose
/// radii are `r`), the larger log-radii `s`, and the divergence detectors.
#[derive(Debug, Clone)]
pub struct OverconvParams {
    order: TateOrder,
    s: LogRadii,
    budget: Option<Rational>,
    margin: Rational,
    step_cap: usize,
}

const DEFAULT_BUDGET_MARGIN: i64 = 50;
const DEFAULT_STEP_CAP: usize = 1_000_000;

impl OverconvParams {
    /// Requires `s` finite, componentwise at least the order's radii
    /// (which must also be finite). Budget defaults to `val_s(f) + 50`
    /// per reduction, the step cap to 10⁶.
    pub fn new(order: TateOrder, s: LogRadii) -> Result<Self, Error> {
        if s.len() != order.nvars() {
            return Err(Error::InvalidRadii(format!(
                "s has {} entries for {} variables",
                s.len(),
                order.nvars()
            )));
        }
        if !s.is_all_finite() {
            return Err(Error::InvalidRadii("s must be finite".into()));
        }
        if !order.radii().is_all_finite() {
            return Err(Error::InvalidRadii(
                "overconvergent reduction needs finite working radii".into(),
            ));
        }
        if !s.componentwise_ge(order.radii()) {
            return Err(Error::InvalidRadii(format!(
                "s = {} is not componentwise ≥ r = {}",
                s,
                order.radii()
            )));
        }
        Ok(OverconvParams {
            order,
            s,
            budget: None,
            margin: Rational::from_integer(DEFAULT_BUDGET_MARGIN.into()),
            step_cap: DEFAULT_STEP_CAP,
        })
    }

    pub fn with_budget(mut self, budget: Rational) -> Self {
        self.budget = Some(budget);
        self
    }

    /// Relative alternative to [`with_budget`](Self::with_budget): each
    /// reduction gets the budget `val_s(input) + margin`. An absolute
    /// budget, when set, wins. Deep spirals burn coefficient size long
    /// before they burn steps, so callers that only want a quick
    /// divergence verdict should shrink this rather than the step cap.
    pub fn with_budget_margin(mut self, margin: Rational) -> Self {
        self.margin = margin;
        self
    }

    pub fn with_step_cap(mut self, step_cap: usize) -> Self {
        assert!(step_cap > 0, "step cap must be positive");
        self.step_cap = step_cap;
        self
    }

    pub fn order(&self) -> &TateOrder {
        &self.order
    }

    pub fn s(&self) -> &LogRadii {
        &self.s
    }

    fn resolve_budget(&self, f: &Polynomial) -> Rational {
        match &self.budget {
            Some(b) => b.clone(),
            None => {
                let base = match f.gauss_valuation_at(&self.s, self.order.prime()) {
                    ExtValue::Finite(v) => v,
                    _ => Rational::from_integer(0.into()),
                };
                base + self.margin.clone()
            }
        }
    }

    fn mode(&self) -> OverconvMode<'_> {
        OverconvMode { s: &self.s, budget: Rational::from_integer(0.into()), step_cap: self.step_cap }
    }

    fn mode_for(&self, f: &Polynomial) -> OverconvMode<'_> {
        OverconvMode { budget: self.resolve_budget(f), ..self.mode() }
    }
}

/// Trace summary of a reduction stopped by the divergence detectors. The
/// partial result still satisfies the exact identity
/// `unit·f = Σ cofactors_i·g_i + remainder` at the stopping step; no head
/// irreducibility or unit-invertibility claim is made.
#[derive(Debug, Clone)]
pub struct BudgetTrace {
    pub partial: WnfResult,
    /// `val_s` of the remainder at the stop.
    pub final_val_s: ExtValue,
    /// Whether the hard step cap (rather than the budget) fired.
    pub step_cap_hit: bool,
    /// Whether `val_s` never dropped along the trace.
    pub val_s_nondecreasing: bool,
}

/// Outcome of an overconvergent weak normal form.
#[derive(Debug, Clone)]
pub enum OverconvOutcome {
    /// The reduction terminated; the certificate is as in [`crate::mora`].
    Remainder(WnfResult),
    /// `val_s` climbed past the budget (or the step cap fired): the
    /// remainder is converging to zero in both `val_r` and `val_s`.
    ReducedToZeroAtBudget(BudgetTrace),
}

/// `val_s(LT_r(f)) − val_s(f)`; nonnegative, zero when `s = r`.
pub fn ecart_sr0(f: &Polynomial, params: &OverconvParams) -> Rational {
    ecart_pair(f, &params.s, &params.order).0
}

/// `deg_{s,r}(f) − deg_{s,r}(LT_r(f))`; nonnegative, zero when `s = r`.
pub fn ecart_sr1(f: &Polynomial, params: &OverconvParams) -> Rational {
    ecart_pair(f, &params.s, &params.order).1
}

/// Both `(s, r)` écarts of `f`, sharing the scans; this sits on the hot
/// path of the overconvergent engine (once per divisor and per recorded
/// remainder).
pub(crate) fn ecart_pair(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> (Rational, Rational) {
    if let Some(sums) = ScaledSums::compute(f, s, o) {
        return (sums.ecart0(), sums.ecart1());
    }
    (ecart0_rational(f, s, o), ecart1_rational(f, s, o))
}

/// `max (s − r)·α` over the monomials of `f` achieving `val_s(f)`.
pub(crate) fn deg_sr(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> Rational {
    if let Some(sums) = ScaledSums::compute(f, s, o) {
        return sums.deg_sr();
    }
    deg_sr_rational(f, s, o)
}

/// One pass over the terms with the radii in machine-integer form: the
/// minimal `val_s` (numerator over `ds`), the maximal `(s − r)`-spread on
/// the monomials attaining it (numerator over `ds·dr`), and the same data
/// for the `r`-leading term.
struct ScaledSums {
    ds: i128,
    dr: i128,
    min_val_s: i128,
    max_spread: i128,
    lt_val_s: i128,
    lt_spread: i128,
}

impl ScaledSums {
    fn compute(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> Option<ScaledSums> {
        let (ss, rr) = (s.scaled()?, o.radii().scaled()?);
        let p = o.prime();
        let (lm, lc) = o.leading_entry(f.terms())?;
        let ds = ss.den() as i128;
        let dr = rr.den() as i128;
        let spread = |m: &crate::order::Monomial| ss.finite_dot(m) * dr - rr.finite_dot(m) * ds;
        let mut min_val_s = i128::MAX;
        let mut max_spread = i128::MIN;
        for (m, c) in f.terms() {
            let v = p.valuation_i64(c).expect("zero coefficient stored") as i128 * ds
                - ss.finite_dot(m);
            if v < min_val_s {
                min_val_s = v;
                max_spread = spread(m);
            } else if v == min_val_s {
                max_spread = max_spread.max(spread(m));
            }
        }
        let lt_val_s =
            p.valuation_i64(lc).expect("zero coefficient stored") as i128 * ds - ss.finite_dot(lm);
        Some(ScaledSums { ds, dr, min_val_s, max_spread, lt_val_s, lt_spread: spread(lm) })
    }

    fn ecart0(&self) -> Rational {
        Rational::new((self.lt_val_s - self.min_val_s).into(), self.ds.into())
    }

    fn ecart1(&self) -> Rational {
        Rational::new((self.max_spread - self.lt_spread).into(), (self.ds * self.dr).into())
    }

    fn deg_sr(&self) -> Rational {
        Rational::new(self.max_spread.into(), (self.ds * self.dr).into())
    }
}

fn ecart0_rational(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> Rational {
    let lt = f.leading_term(o).expect("écart of zero polynomial");
    let val_s_lt = o.prime().valuation(lt.coeff()).expect_finite("nonzero coefficient")
        - s.finite_weighted_degree(lt.monomial());
    let val_s_f =
        f.gauss_valuation_at(s, o.prime()).expect_finite("nonzero polynomial").clone();
    val_s_lt - val_s_f
}

fn ecart1_rational(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> Rational {
    let lt = f.leading_term(o).expect("écart of zero polynomial");
    let r = o.radii();
    let lt_spread =
        s.finite_weighted_degree(lt.monomial()) - r.finite_weighted_degree(lt.monomial());
    deg_sr_rational(f, s, o) - lt_spread
}

fn deg_sr_rational(f: &Polynomial, s: &LogRadii, o: &TateOrder) -> Rational {
    let p = o.prime();
    let r = o.radii();
    let val_s = f.gauss_valuation_at(s, p).expect_finite("nonzero polynomial").clone();
    f.terms()
        .filter(|(m, c)| {
            p.valuation(c).expect_finite("nonzero coefficient") - s.finite_weighted_degree(m)
                == val_s
        })
        .map(|(m, _)| s.finite_weighted_degree(m) - r.finite_weighted_degree(m))
        .max()
        .expect("zero polynomial")
}

/// Overconvergent weak normal form of `f` against `divisors`.
pub fn wnf_overconv(
    f: &Polynomial,
    divisors: &[Polynomial],
    params: &OverconvParams,
) -> OverconvOutcome {
    let run = mora::reduce(f, divisors, &params.order, true, Some(params.mode_for(f)));
    match run.stop {
        EngineStop::Done => OverconvOutcome::Remainder(run.result),
        EngineStop::Budget { final_val_s, step_cap_hit, val_s_nondecreasing } => {
            OverconvOutcome::ReducedToZeroAtBudget(BudgetTrace {
                partial: run.result,
                final_val_s,
                step_cap_hit,
                val_s_nondecreasing,
            })
        }
    }
}

/// Buchberger's algorithm driven by [`wnf_overconv`]. S-polynomials whose
/// reduction stops at the budget are treated as zero reductions; the pairs
/// are recorded in the stats, so the result is a Gröbner basis modulo the
/// correctness of those truncations (a semi-decision, reported honestly).
pub fn groebner_overconv(
    generators: &[Polynomial],
    params: &OverconvParams,
) -> Result<GroebnerBasis, Error> {
    groebner_overconv_with_stats(generators, params).map(|(basis, _)| basis)
}

/// Same as [`groebner_overconv`], also returning run statistics.
pub fn groebner_overconv_with_stats(
    generators: &[Polynomial],
    params: &OverconvParams,
) -> Result<(GroebnerBasis, GbStats), Error> {
    let o = &params.order;
    let (elements, stats) = buchberger::buchberger_loop(generators, o, |sp, basis, stats| {
        let run = mora::reduce(sp, basis, o, false, Some(params.mode_for(sp)));
        stats.reduction_steps += run.result.steps;
        stats.max_t_size = stats.max_t_size.max(run.max_t);
        match run.stop {
            EngineStop::Done => ReductionOutcome::Remainder(run.result.remainder),
            EngineStop::Budget { .. } => ReductionOutcome::TreatedAsZero,
        }
    })?;
    Ok((GroebnerBasis::from_parts(elements, o.clone()), stats))
}
