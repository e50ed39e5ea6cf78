//! Small graphs whose independence polynomials separate the
//! log-concave, unimodal, and non-unimodal worlds.

use indpoly::engine::{independence_poly, independence_poly_of_join};
use indpoly::threshold::{build_threshold, BuildingString};
use indpoly::Polynomial;

fn classify(p: &Polynomial) -> &'static str {
    if p.is_log_concave().unwrap() {
        "log-concave"
    } else if p.is_unimodal().unwrap() {
        "unimodal, not log-concave"
    } else {
        "NOT unimodal"
    }
}

fn main() {
    // K_m + 3K_7 has polynomial 1 + (m+21)x + 147x^2 + 343x^3; the
    // linear coefficient alone flips it between all three classes
    let three_k7 = {
        let k7 = Polynomial::from_i64(&[1, 7]);
        k7.mul(&k7).mul(&k7)
    };
    for m in [42i64, 43, 100, 127] {
        let p = independence_poly_of_join(&Polynomial::from_i64(&[1, m]), &three_k7);
        println!("I(K_{m} + 3K_7) = {p}   [{}]", classify(&p));
    }

    // a product of two unimodal polynomials that is not unimodal
    let p100 = independence_poly_of_join(&Polynomial::from_i64(&[1, 100]), &three_k7);
    let p120 = independence_poly_of_join(&Polynomial::from_i64(&[1, 120]), &three_k7);
    let product = p100.mul(&p120);
    println!("product of the m=100 and m=120 polynomials: {product}");
    println!("  [{}]", classify(&product));

    println!();
    // the same phenomenon inside the threshold world, built from strings
    for (a, b) in [(7usize, 5usize), (3, 7), (6, 10)] {
        let s: String = "0".repeat(a) + &"1".repeat(b);
        let g = build_threshold(&BuildingString::parse(&s).unwrap()).unwrap();
        let p = independence_poly(&g).unwrap();
        println!("I({a}K_1 + K_{b}) = {p}   [{}]", classify(&p));
    }
}
