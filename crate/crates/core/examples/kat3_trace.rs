use tategb::mora::DivisorRef;
use tategb::overconv::groebner_overconv_with_stats;
use tategb::{
    katsura, spoly, LogRadii, MonomialOrder, OverconvOutcome, OverconvParams, PrimeContext,
    Rational, TateOrder,
};

fn main() {
    let gens = katsura(3);
    let radii: LogRadii = "0,0,0,0".parse().unwrap();
    let o = TateOrder::new(radii.clone(), MonomialOrder::Grevlex, PrimeContext::new(2).unwrap())
        .unwrap();
    let params = OverconvParams::new(o.clone(), radii.clone())
        .unwrap()
        .with_budget_margin(Rational::from_integer(5.into()))
        .with_step_cap(40);
    let (basis, stats) = groebner_overconv_with_stats(&gens, &params).unwrap();
    println!("basis size {}, truncated pairs: {:?}", basis.len(), stats.truncated_pairs);
    let names: Vec<String> = (0..4).map(|i| format!("x{}", i)).collect();
    for (k, g) in basis.elements().iter().enumerate() {
        println!("g{} = {}", k, g.to_string_with(&names, &o));
    }
    let (i, j) = stats.truncated_pairs[0];
    let sp = spoly(&basis.elements()[i], &basis.elements()[j], &o);
    println!("\nspoly({}, {}) = {}", i, j, sp.to_string_with(&names, &o));
    let probe = OverconvParams::new(o.clone(), radii.clone())
        .unwrap()
        .with_budget_margin(Rational::from_integer(6.into()))
        .with_step_cap(60);
    match tategb::wnf_overconv(&sp, basis.elements(), &probe) {
        OverconvOutcome::Remainder(res) => println!("terminated in {} steps", res.steps),
        OverconvOutcome::ReducedToZeroAtBudget(tr) => {
            println!(
                "budget stop after {} steps, final val_s {:?}, nondecreasing {}",
                tr.partial.steps, tr.final_val_s, tr.val_s_nondecreasing
            );
            // replay to print the heads along the trace
            let mut h = sp.clone();
            let mut history: Vec<tategb::Polynomial> = Vec::new();
            for step in &tr.partial.divisor_log {
                let lt = h.leading_term(&o).unwrap();
                let which = match step.divisor {
                    DivisorRef::Input(i) => format!("input {}", i),
                    DivisorRef::Recorded(j) => format!("recorded@{}", j),
                };
                println!(
                    "  step {:>3}: {} terms, LT = {}·{:?}, val = {:?}, by {}",
                    step.iteration,
                    h.num_terms(),
                    lt.coeff(),
                    lt.monomial(),
                    h.gauss_valuation(&o),
                    which
                );
                let g = match step.divisor {
                    DivisorRef::Input(i) => basis.elements()[i].clone(),
                    DivisorRef::Recorded(j) => history[j].clone(),
                };
                history.push(h.clone());
                h.sub_term_mul(&step.factor, &g);
            }
        }
    }
}
