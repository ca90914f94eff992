//! A small classical Gröbner toolkit over Q, independent of the code
//! under test: plain lex on monomials (variable 0 most significant),
//! coefficient valuations ignored. Division is the textbook multivariate
//! algorithm, so termination is the classical well-ordering argument and
//! the only shared machinery is exact rational arithmetic.

use std::cmp::Ordering;

use tategb::{Monomial, Polynomial, Rational, Term};

pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents().cmp(b.exponents())
}

fn leading(f: &Polynomial) -> Term {
    let (m, c) = f.terms().max_by(|a, b| lex_cmp(a.0, b.0)).expect("zero polynomial");
    Term::new(c.clone(), m.clone())
}

/// Full normal form: reduce the lex head while possible, otherwise move it
/// to the remainder and continue with the tail.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.nvars());
    'scan: while !work.is_zero() {
        let lt = leading(&work);
        for g in gens {
            let lg = leading(g);
            if lg.monomial().divides(lt.monomial()) {
                let t =
                    Term::new(lt.coeff() / lg.coeff(), lt.monomial().div(lg.monomial()).unwrap());
                work.sub_term_mul(&t, g);
                continue 'scan;
            }
        }
        rem = &rem + &Polynomial::from_term(lt.clone());
        work = &work - &Polynomial::from_term(lt);
    }
    rem
}

fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = leading(f);
    let lg = leading(g);
    let one = Rational::from_integer(1.into());
    let l = lf.monomial().lcm(lg.monomial());
    let tf = Term::new(&one / lf.coeff(), l.div(lf.monomial()).unwrap());
    let tg = Term::new(&one / lg.coeff(), l.div(lg.monomial()).unwrap());
    &f.mul_term(&tf) - &g.mul_term(&tg)
}

/// Unoptimized Buchberger; fine for the tiny oracle inputs.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    assert!(!basis.is_empty(), "oracle got the zero ideal");
    let mut queue: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = queue.pop() {
        let h = normal_form(&spoly(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            for k in 0..basis.len() {
                queue.push((k, basis.len()));
            }
            basis.push(h);
        }
    }
    basis
}

pub fn is_member(f: &Polynomial, basis: &[Polynomial]) -> bool {
    normal_form(f, basis).is_zero()
}

/// Equality of the generated polynomial ideals over Q.
pub fn ideals_equal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let ga = buchberger(a);
    let gb = buchberger(b);
    a.iter().all(|f| is_member(f, &gb)) && b.iter().all(|f| is_member(f, &ga))
}

fn with_t(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        f.nvars() + 1,
        f.terms().map(|(m, c)| {
            let mut e = vec![0u32];
            e.extend_from_slice(m.exponents());
            (Monomial::new(e), c.clone())
        }),
    )
}

fn drop_t(f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        f.nvars() - 1,
        f.terms().map(|(m, c)| {
            assert_eq!(m.exponent(0), 0, "dropping a variable still in use");
            (Monomial::new(m.exponents()[1..].to_vec()), c.clone())
        }),
    )
}

fn t_free(f: &Polynomial) -> bool {
    f.support().all(|m| m.exponent(0) == 0)
}

fn t_poly(nvars_with_t: usize) -> Polynomial {
    Polynomial::from_term(Term::new(
        Rational::from_integer(1.into()),
        Monomial::var(nvars_with_t, 0, 1),
    ))
}

/// `I ∩ J` by eliminating a fresh `t` from `tI + (1−t)J`; lex with `t`
/// first is an elimination order.
pub fn intersect(i: &[Polynomial], j: &[Polynomial]) -> Vec<Polynomial> {
    let n = i[0].nvars();
    let t = t_poly(n + 1);
    let omt = &Polynomial::one(n + 1) - &t;
    let mut gens: Vec<Polynomial> = i.iter().map(|f| &t * &with_t(f)).collect();
    gens.extend(j.iter().map(|f| &omt * &with_t(f)));
    buchberger(&gens).into_iter().filter(t_free).map(|g| drop_t(&g)).collect()
}

pub fn colon(i: &[Polynomial], f: &Polynomial) -> Vec<Polynomial> {
    intersect(i, &[f.clone()])
        .iter()
        .map(|g| g.div_exact(f).expect("colon oracle: inexact division"))
        .collect()
}

/// `I : f^∞` by the Rabinowitsch trick: eliminate `t` from `I + ⟨1 − tf⟩`.
pub fn saturate(i: &[Polynomial], f: &Polynomial) -> Vec<Polynomial> {
    let n = i[0].nvars();
    let t = t_poly(n + 1);
    let mut gens: Vec<Polynomial> = i.iter().map(with_t).collect();
    gens.push(&Polynomial::one(n + 1) - &(&t * &with_t(f)));
    buchberger(&gens).into_iter().filter(t_free).map(|g| drop_t(&g)).collect()
}
