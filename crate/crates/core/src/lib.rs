//! Gröbner basis computation over Tate algebras.
//!
//! A Tate algebra `K{X; r}` collects the power series over a `p`-adically
//! valued field that converge on the polydisk of log-radii `r`. Term orders
//! compare Gauss valuations first (lower valuation wins) and fall back to a
//! classical monomial order on ties, so heads behave like the "smallest"
//! terms of local orders and plain head reduction can loop. The reduction
//! engine here is Mora's weak normal form with écart control, on top of
//! which sit a Buchberger loop, elimination-based ideal arithmetic, an
//! overconvergent variant of the reducer, and a sampler for the finitely
//! many initial ideals seen as `r` varies.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! log-radii are rationals (or `+inf` for elimination variables). All
//! computations are deterministic.

pub mod buchberger;
pub mod coeffs;
pub mod error;
pub mod fan;
pub mod ideals;
pub mod mora;
pub mod order;
pub mod overconv;
pub mod parse;
pub mod poly;
pub mod systems;

#[cfg(test)]
mod testutil;

pub use buchberger::{groebner, groebner_with_stats, is_groebner, GbStats, GroebnerBasis};
pub use coeffs::{padic_valuation, ExtValue, PrimeContext, Rational};
pub use error::Error;
pub use fan::{
    candidate_universal_gb, check_universal, initial_terms, sample_initial_ideals, FanEntry,
    FanReport, LtSet, UniversalFailure,
};
pub use ideals::{
    colon, colon_ideal, eliminate, ideal_product, ideal_sum, intersect, saturate,
    saturate_iterated, ElimMode, IdealPresentation,
};
pub use mora::{wnf, wnf_with_cofactors, WnfResult};
pub use order::{LogRadii, Monomial, MonomialOrder, TateOrder, Term};
pub use overconv::{wnf_overconv, OverconvOutcome, OverconvParams};
pub use poly::{spoly, Polynomial};
pub use systems::{cyclic, katsura, SystemName, SystemSpec};
