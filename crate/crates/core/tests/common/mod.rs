//! Shared pieces for the integration suites: the seeded instance
//! generators (same sampling box as the unit tests, rebuilt on the public
//! API) and a classical Gröbner toolkit over Q used as an independent
//! oracle for the ideal-arithmetic checks.

pub mod classical;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tategb::overconv::groebner_overconv_with_stats;
use tategb::{
    wnf_overconv, LogRadii, Monomial, MonomialOrder, OverconvOutcome, OverconvParams, Polynomial,
    PrimeContext, Rational, TateOrder,
};

pub const SMALL_PRIMES: [u64; 3] = [2, 3, 5];
const HALF_RADII: [&str; 3] = ["0", "1/2", "-1/2"];

pub fn grevlex_order(radii: &LogRadii, p: u64) -> TateOrder {
    TateOrder::new(radii.clone(), MonomialOrder::Grevlex, PrimeContext::new(p).unwrap()).unwrap()
}

pub fn random_radii(rng: &mut ChaCha8Rng, nvars: usize) -> LogRadii {
    (0..nvars)
        .map(|_| HALF_RADII[rng.gen_range(0..HALF_RADII.len())])
        .collect::<Vec<_>>()
        .join(",")
        .parse()
        .unwrap()
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, maxdeg: u64) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
        let m = Monomial::new(exps);
        if m.degree() <= maxdeg {
            return m;
        }
    }
}

/// Up to `maxterms` integer-coefficient terms of degree ≤ 4; may be zero.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, maxterms: usize) -> Polynomial {
    let nterms = rng.gen_range(0..=maxterms);
    Polynomial::from_terms(
        nvars,
        (0..nterms).map(|_| {
            let num: i64 = rng.gen_range(-9..=9);
            (random_monomial(rng, nvars, 4), Rational::from_integer(num.into()))
        }),
    )
}

/// Nonzero polynomial whose leading monomial is not 1 (a constant head
/// certifies the unit ideal and turns reductions into non-terminating
/// unit inversions).
pub fn random_divisor(rng: &mut ChaCha8Rng, nvars: usize, o: &TateOrder) -> Polynomial {
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
/// 150-step cap; `true` means the uncapped classical reduction terminates
/// with the same trace.
pub fn feasible(f: &Polynomial, divisors: &[Polynomial], o: &TateOrder) -> bool {
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
/// margin and step cap; a truncation-free probe certifies the classical
/// loop terminates, and the basis-size cut keeps follow-up checks fast.
pub fn ideal_feasible(gens: &[Polynomial], o: &TateOrder) -> bool {
    let probe = OverconvParams::new(o.clone(), o.radii().clone())
        .unwrap()
        .with_budget_margin(Rational::from_integer(10.into()))
        .with_step_cap(60);
    match groebner_overconv_with_stats(gens, &probe) {
        Ok((_, stats)) => stats.budget_truncations == 0 && stats.basis_additions <= 40,
        Err(_) => false,
    }
}
