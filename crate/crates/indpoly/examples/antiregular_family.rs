//! The antiregular family A_n: construction, closed-form polynomials,
//! Fibonacci and alternating numbers.

use indpoly::antiregular::{antiregular, antiregular_poly_closed, AntiregularSpec};
use indpoly::engine::independence_poly;

fn main() {
    println!("{:<4} {:<24} {:<30} {:>10} {:>6}", "n", "degrees", "I(A_n;x)", "I(;1)", "I(;-1)");
    for n in 1..=10 {
        let g = antiregular(n).unwrap();
        let p = independence_poly(&g).unwrap();
        let closed = antiregular_poly_closed(&AntiregularSpec::connected(n).unwrap());
        assert_eq!(p, closed);
        println!(
            "{:<4} {:<24} {:<30} {:>10} {:>6}",
            n,
            g.degree_sequence().to_string(),
            p.to_string(),
            p.evaluate_int(1),
            p.evaluate_int(-1)
        );
    }

    println!();
    for n in 2..=6 {
        let c = antiregular_poly_closed(&AntiregularSpec::complement(n).unwrap());
        println!("I(comp(A_{n});x) = {c}");
    }
}
