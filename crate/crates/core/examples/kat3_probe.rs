use std::time::Instant;
use tategb::overconv::groebner_overconv_with_stats;
use tategb::{katsura, LogRadii, MonomialOrder, OverconvParams, PrimeContext, Rational, TateOrder};

fn main() {
    let gens = katsura(3);
    let radii: LogRadii = "0,0,0,0".parse().unwrap();
    let o = TateOrder::new(radii.clone(), MonomialOrder::Grevlex, PrimeContext::new(2).unwrap())
        .unwrap();
    for (margin, cap) in [(5i64, 40usize), (10, 80), (20, 160), (30, 300)] {
        let t0 = Instant::now();
        let params = OverconvParams::new(o.clone(), radii.clone())
            .unwrap()
            .with_budget_margin(Rational::from_integer(margin.into()))
            .with_step_cap(cap);
        match groebner_overconv_with_stats(&gens, &params) {
            Ok((basis, stats)) => {
                println!(
                    "margin {} cap {}: basis {} adds {} pairs {} steps {} truncs {} maxT {} in {:?}",
                    margin,
                    cap,
                    basis.len(),
                    stats.basis_additions,
                    stats.pairs_processed,
                    stats.reduction_steps,
                    stats.budget_truncations,
                    stats.max_t_size,
                    t0.elapsed()
                );
            }
            Err(e) => println!("margin {} cap {}: error {}", margin, cap, e),
        }
    }
}
