//! Shared instance generators for the randomized tests.
//!
//! The sampling box is deliberately small (≤3 variables, degree ≤4, ≤4
//! divisors, p ∈ {2, 3, 5}, radii entries in {0, ±1/2}) but it still
//! contains instances whose reduction only converges to zero without
//! reaching it: a divisor like `X − 2X²` at p = 2 makes `X` divisible
//! forever, with `val` climbing at every step. Such runs are exactly what
//! the budgeted overconvergent engine detects, so [`feasible`] dry-runs a
//! candidate at `s = r` with a small budget and the generators resample
//! whenever the probe reports divergence. Everything is seeded; rejection
//! counts stay in the low single digits per thousand draws.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{PrimeContext, Rational};
use crate::order::{LogRadii, Monomial, MonomialOrder, TateOrder};
use crate::overconv::{groebner_overconv_with_stats, wnf_overconv, OverconvOutcome, OverconvParams};
use crate::poly::Polynomial;

pub(crate) const SMALL_PRIMES: [u64; 3] = [2, 3, 5];
pub(crate) const HALF_RADII: [&str; 3] = ["0", "1/2", "-1/2"];

pub(crate) fn grevlex_order(radii: &LogRadii, p: u64) -> TateOrder {
    TateOrder::new(radii.clone(), MonomialOrder::Grevlex, PrimeContext::new(p).unwrap()).unwrap()
}

pub(crate) fn random_radii(rng: &mut ChaCha8Rng, nvars: usize) -> LogRadii {
    (0..nvars)
        .map(|_| HALF_RADII[rng.gen_range(0..HALF_RADII.len())])
        .collect::<Vec<_>>()
        .join(",")
        .parse()
        .unwrap()
}

pub(crate) fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, maxdeg: u64) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
        let m = Monomial::new(exps);
        if m.degree() <= maxdeg {
            return m;
        }
    }
}

/// Up to `maxterms` integer-coefficient terms of degree ≤ 4; may be zero.
pub(crate) fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, maxterms: usize) -> Polynomial {
    let nterms = rng.gen_range(0..=maxterms);
    Polynomial::from_terms(
        nvars,
        (0..nterms).map(|_| {
            let num: i64 = rng.gen_range(-9..=9);
            (random_monomial(rng, nvars, 4), Rational::from_integer(num.into()))
        }),
    )
}

/// Nonzero polynomial whose leading monomial is not 1. A constant head
/// certifies the unit ideal and turns every reduction into a unit
/// inversion, which converges without terminating; those inputs are valid
/// for the engine (the budget catches them) but useless as divisors in a
/// terminating-reduction test.
pub(crate) fn random_divisor(rng: &mut ChaCha8Rng, nvars: usize, o: &TateOrder) -> Polynomial {
    loop {
        let g = random_poly(rng, nvars, 4);
        if g.is_zero() {
            continue;
        }
        if g.leading_monomial(o).unwrap().is_one() {
            continue;
        }
        return g;
    }
}

/// Dry-run of the reduction at `s = r` with budget `val(f) + 10` and a
/// 150-step cap. `true` means the run reached a weak normal form inside
/// those limits, so the uncapped classical reduction terminates with the
/// same trace; `false` flags a (possible) divergence and the instance
/// should be resampled.
pub(crate) fn feasible(f: &Polynomial, divisors: &[Polynomial], o: &TateOrder) -> bool {
    if f.is_zero() {
        return true;
    }
    let radii = o.radii().clone();
    let val = f.gauss_valuation_at(&radii, o.prime()).expect_finite("nonzero input").clone();
    let params = OverconvParams::new(o.clone(), radii)
        .unwrap()
        .with_budget(val + Rational::from_integer(10.into()))
        .with_step_cap(150);
    matches!(wnf_overconv(f, divisors, &params), OverconvOutcome::Remainder(_))
}

/// Dry-run of the whole Buchberger loop at `s = r` with a tight budget
/// margin and step cap. A truncation-free probe performed exactly the
/// reductions the classical loop would, so `true` certifies the classical
/// run terminates; the basis-size cut additionally drops ideals whose
/// completion would make the caller's follow-up checks slow. The margin is
/// kept small on purpose: deep reduction spirals grow coefficient bit-size
/// before they exhaust steps, so a generous budget lets the probe itself
/// stall on huge integers.
pub(crate) fn ideal_feasible(gens: &[Polynomial], o: &TateOrder) -> bool {
    let probe = OverconvParams::new(o.clone(), o.radii().clone())
        .unwrap()
        .with_budget_margin(Rational::from_integer(10.into()))
        .with_step_cap(60);
    match groebner_overconv_with_stats(gens, &probe) {
        Ok((_, stats)) => stats.budget_truncations == 0 && stats.basis_additions <= 40,
        Err(_) => false,
    }
}
