//! Sweep a building-string pattern across orders and classify each
//! independence polynomial: unimodality, log-concavity, real roots.

use indpoly::threshold::{pattern_survey, PatternSpec};

fn run(label: &str, prefix: &str, period: &str, orders: std::ops::RangeInclusive<usize>) {
    println!("pattern {label}: prefix {prefix:?}, period {period:?}");
    let spec = PatternSpec::parse(prefix, period, orders).unwrap();
    for r in pattern_survey(&spec).unwrap() {
        println!(
            "  n={:<3} {}  I = {}  unimodal={} log-concave={} real-roots={}{}",
            r.order,
            r.string,
            r.poly,
            r.unimodal,
            r.log_concave,
            r.real_root_count,
            if r.all_roots_real { " (all real)" } else { "" }
        );
    }
    println!();
}

fn main() {
    // at odd orders this expands to the antiregular building string
    run("alternating period", "0", "01", 3..=9);
    // all ones after the seed: complete graphs
    run("complete", "0", "1", 2..=6);
    // growing cliques over two isolated vertices
    run("clique tail", "00", "1", 3..=7);
}
