//! Ideal arithmetic: sum, product, variable elimination, intersection,
//! colon and saturation.
//!
//! Everything after sum and product is elimination in disguise. A fresh
//! variable `t` is adjoined with log-radius `+inf`, so that any monomial
//! containing `t` beats any `t`-free one and a Gröbner basis under the
//! block order splits cleanly: the `t`-free elements form a basis of the
//! contraction to the original algebra. The classical `K[X]` constructions
//! (`tI + (1−t)J` for intersection, `1 − t·f` for saturation) then carry
//! over verbatim, and every output is again presented by polynomials.

use crate::buchberger::{self, GroebnerBasis};
use crate::coeffs::{ExtValue, Rational};
use crate::error::Error;
use crate::order::{LogRadii, Monomial, MonomialOrder, TateOrder};
use crate::poly::Polynomial;

/// Finitely many polynomial generators in a fixed algebra `K{X; r}`. The
/// empty list presents the zero ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPresentation {
    generators: Vec<Polynomial>,
    order: TateOrder,
}

impl IdealPresentation {
    /// Generators must be nonzero and match the order's variable count.
    pub fn new(generators: Vec<Polynomial>, order: TateOrder) -> Result<Self, Error> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroPolynomial("ideal generator"));
            }
            if g.nvars() != order.nvars() {
                return Err(Error::ContextMismatch(format!(
                    "generator in {} variables, order has {}",
                    g.nvars(),
                    order.nvars()
                )));
            }
        }
        Ok(IdealPresentation { generators, order })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &TateOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Gröbner basis under the presentation's own order. The zero ideal
    /// gets the empty basis rather than an error.
    pub fn groebner(&self) -> Result<GroebnerBasis, Error> {
        if self.generators.is_empty() {
            return Ok(GroebnerBasis::from_parts(Vec::new(), self.order.clone()));
        }
        buchberger::groebner(&self.generators, &self.order)
    }
}

fn same_context(a: &IdealPresentation, b: &IdealPresentation) -> Result<(), Error> {
    if a.order != b.order {
        return Err(Error::ContextMismatch(
            "ideal operands live in different algebras or orders".into(),
        ));
    }
    Ok(())
}

/// `I + J`: concatenated generators.
pub fn ideal_sum(a: &IdealPresentation, b: &IdealPresentation) -> Result<IdealPresentation, Error> {
    same_context(a, b)?;
    let mut generators = a.generators.clone();
    generators.extend(b.generators.iter().cloned());
    Ok(IdealPresentation { generators, order: a.order.clone() })
}

/// `I·J`: all pairwise products.
pub fn ideal_product(
    a: &IdealPresentation,
    b: &IdealPresentation,
) -> Result<IdealPresentation, Error> {
    same_context(a, b)?;
    let generators = a
        .generators
        .iter()
        .flat_map(|f| b.generators.iter().map(move |g| f * g))
        .collect();
    Ok(IdealPresentation { generators, order: a.order.clone() })
}

/// Radius given to the variable being eliminated.
#[derive(Debug, Clone, PartialEq)]
pub enum ElimMode {
    /// `+inf`: the contraction property is a theorem and the split below
    /// cannot fail.
    Infinite,
    /// A finite radius. Correct only when it is "big enough" for the ideal
    /// at hand, which no a-priori bound certifies; the split is therefore
    /// checked after the fact and a violation reported as
    /// [`Error::RadiusTooSmall`].
    Finite(Rational),
}

/// Generators of `I ∩ K{X without var}`, presented in the smaller algebra
/// with the inherited radii and tie-break.
///
/// Computes a Gröbner basis under the block order that ranks `var` first
/// with the mode's radius, keeps the elements whose support avoids `var`,
/// and re-indexes them. The kept elements form a Gröbner basis of the
/// contraction in infinite mode; in finite mode they do whenever the check
/// passes.
pub fn eliminate(
    i: &IdealPresentation,
    var: usize,
    mode: ElimMode,
) -> Result<IdealPresentation, Error> {
    let n = i.nvars();
    if var >= n {
        return Err(Error::NoSuchVariable { index: var, nvars: n });
    }
    let small_order = order_without_var(&i.order, var)?;
    if i.generators.is_empty() {
        return Ok(IdealPresentation { generators: Vec::new(), order: small_order });
    }

    // Move `var` to slot 0; the remaining variables keep their relative
    // order, so dropping slot 0 afterwards lands back in the right algebra.
    let to_front = |e: &[u32]| {
        let mut v = Vec::with_capacity(n);
        v.push(e[var]);
        v.extend(e.iter().enumerate().filter(|&(k, _)| k != var).map(|(_, &x)| x));
        v
    };
    let permuted: Vec<Polynomial> =
        i.generators.iter().map(|g| g.map_exponents(n, &to_front)).collect();

    let mut entries = Vec::with_capacity(n);
    entries.push(match &mode {
        ElimMode::Infinite => ExtValue::Infinity,
        ElimMode::Finite(r0) => ExtValue::Finite(r0.clone()),
    });
    entries.extend(
        i.order.radii().entries().iter().enumerate().filter(|&(k, _)| k != var).map(|(_, e)| e.clone()),
    );
    let elim_order = TateOrder::new(
        LogRadii::new(entries)?,
        MonomialOrder::block(1, MonomialOrder::Lex, small_order.tiebreak().clone()),
        i.order.prime().clone(),
    )?;

    let basis = buchberger::groebner(&permuted, &elim_order)?.minimalize();
    let mut kept = Vec::new();
    for g in basis.elements() {
        if g.support().all(|m| m.exponent(0) == 0) {
            kept.push(g.map_exponents(n - 1, |e| e[1..].to_vec()));
            continue;
        }
        // Discarded element: its head must involve the variable, otherwise
        // the basis contains something whose head lies in the subalgebra
        // but whose tail escapes it and the contraction property fails.
        let lt = g.leading_monomial(&elim_order).unwrap();
        if lt.exponent(0) == 0 {
            match mode {
                ElimMode::Infinite => unreachable!(
                    "infinite-radius head cannot avoid the variable its tail uses"
                ),
                ElimMode::Finite(_) => {
                    let names = witness_names(n, var);
                    return Err(Error::RadiusTooSmall {
                        witness: g.to_string_with(&names, &elim_order),
                    });
                }
            }
        }
    }
    Ok(IdealPresentation { generators: kept, order: small_order })
}

fn order_without_var(o: &TateOrder, var: usize) -> Result<TateOrder, Error> {
    let entries: Vec<ExtValue> = o
        .radii()
        .entries()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != var)
        .map(|(_, e)| e.clone())
        .collect();
    TateOrder::new(LogRadii::new(entries)?, o.tiebreak().without_var(var), o.prime().clone())
}

fn witness_names(n: usize, var: usize) -> Vec<String> {
    let mut names = vec![format!("x{}", var)];
    names.extend((0..n).filter(|&k| k != var).map(|k| format!("x{}", k)));
    names
}

/// Embed `f` into the algebra with a fresh variable in slot 0.
fn lift(f: &Polynomial) -> Polynomial {
    let n = f.nvars();
    f.map_exponents(n + 1, |e| {
        let mut v = Vec::with_capacity(n + 1);
        v.push(0);
        v.extend_from_slice(e);
        v
    })
}

/// The order on the `t`-extended algebra handed to [`eliminate`]: slot 0
/// carries a placeholder radius (eliminate overrides it) and the block
/// tie-break restricts back to the original one.
fn extended_order(o: &TateOrder) -> Result<TateOrder, Error> {
    let mut entries = vec![ExtValue::zero()];
    entries.extend(o.radii().entries().iter().cloned());
    TateOrder::new(
        LogRadii::new(entries)?,
        MonomialOrder::block(1, MonomialOrder::Lex, o.tiebreak().clone()),
        o.prime().clone(),
    )
}

/// `I ∩ J` via the ideal `tI + (1−t)J` of the `t`-extended algebra.
pub fn intersect(
    a: &IdealPresentation,
    b: &IdealPresentation,
) -> Result<IdealPresentation, Error> {
    same_context(a, b)?;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(IdealPresentation { generators: Vec::new(), order: a.order.clone() });
    }
    let n = a.nvars();
    let t = Polynomial::from_term(crate::order::Term::new(
        Rational::from_integer(1.into()),
        Monomial::var(n + 1, 0, 1),
    ));
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let mut gens: Vec<Polynomial> = a.generators.iter().map(|f| &t * &lift(f)).collect();
    gens.extend(b.generators.iter().map(|g| &one_minus_t * &lift(g)));
    let ext = IdealPresentation { generators: gens, order: extended_order(&a.order)? };
    eliminate(&ext, 0, ElimMode::Infinite)
}

/// `I : f = { g : f·g ∈ I }`, computed as `(I ∩ ⟨f⟩)/f`.
pub fn colon(i: &IdealPresentation, f: &Polynomial) -> Result<IdealPresentation, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon divisor"));
    }
    let principal =
        IdealPresentation { generators: vec![f.clone()], order: i.order.clone() };
    let meet = intersect(i, &principal)?;
    // Elements of the intersection basis are polynomial combinations that
    // specialize (at t = 0) to polynomial multiples of f, so division here
    // is exact by construction.
    let generators = meet
        .generators
        .iter()
        .map(|g| g.div_exact(f).expect("intersection element not divisible by the divisor"))
        .collect();
    Ok(IdealPresentation { generators, order: i.order.clone() })
}

/// `I : J` for finitely generated `J`: the intersection of the `I : f`
/// over the generators `f` of `J`.
pub fn colon_ideal(
    i: &IdealPresentation,
    j: &IdealPresentation,
) -> Result<IdealPresentation, Error> {
    same_context(i, j)?;
    if j.is_zero_ideal() {
        return Err(Error::EmptyInput("colon divisor ideal"));
    }
    let mut acc = colon(i, &j.generators[0])?;
    for f in &j.generators[1..] {
        acc = intersect(&acc, &colon(i, f)?)?;
    }
    Ok(acc)
}

/// `I : f^∞` in one elimination, by adjoining the relation `1 − t·f`.
pub fn saturate(i: &IdealPresentation, f: &Polynomial) -> Result<IdealPresentation, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("saturation divisor"));
    }
    if i.is_zero_ideal() {
        return Ok(i.clone());
    }
    let n = i.nvars();
    let t = Polynomial::from_term(crate::order::Term::new(
        Rational::from_integer(1.into()),
        Monomial::var(n + 1, 0, 1),
    ));
    let mut gens: Vec<Polynomial> = i.generators.iter().map(lift).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &lift(f)));
    let ext = IdealPresentation { generators: gens, order: extended_order(&i.order)? };
    eliminate(&ext, 0, ElimMode::Infinite)
}

/// `I : f^∞` as the limit of iterated colons; a cross-check for
/// [`saturate`]. Stops as soon as one more colon no longer grows the
/// ideal, testing containment by reduction against a Gröbner basis.
pub fn saturate_iterated(
    i: &IdealPresentation,
    f: &Polynomial,
) -> Result<IdealPresentation, Error> {
    let mut current = i.clone();
    for _ in 0..64 {
        let next = colon(&current, f)?;
        let basis = current.groebner()?;
        let grew = next.generators.iter().any(|g| {
            !crate::mora::wnf(g, basis.elements(), &current.order).is_zero()
        });
        if !grew {
            return Ok(current);
        }
        current = next;
    }
    panic!("saturation did not stabilize after 64 colon iterations");
}
