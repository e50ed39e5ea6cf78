//! Isolate the real roots of independence polynomials with exact Sturm
//! sequences. Intervals are rational with width at most 1/1024; roots
//! that are themselves rational come out exactly.

use indpoly::antiregular::{antiregular_poly_closed, AntiregularSpec};
use indpoly::engine::independence_poly;
use indpoly::roots::real_roots;
use indpoly::Graph;
use num_traits::ToPrimitive;

fn show(label: &str, p: &indpoly::Polynomial) {
    let rr = real_roots(p).unwrap();
    println!("{label}: I = {p}");
    println!("  distinct real roots: {}", rr.count);
    for (lo, hi) in &rr.intervals {
        if lo == hi {
            println!("  exact root {lo}");
        } else {
            println!(
                "  root in ({lo}, {hi}]  ~ ({:.6}, {:.6}]",
                lo.to_f64().unwrap(),
                hi.to_f64().unwrap()
            );
        }
    }
}

fn main() {
    for n in [4usize, 7, 8, 12] {
        let p = antiregular_poly_closed(&AntiregularSpec::connected(n).unwrap());
        show(&format!("A_{n}"), &p);
    }
    // a path graph for contrast: matching-type polynomials of paths have
    // all roots real, independence polynomials need not
    let p5 = independence_poly(&Graph::path(5).unwrap()).unwrap();
    show("P_5", &p5);
}
