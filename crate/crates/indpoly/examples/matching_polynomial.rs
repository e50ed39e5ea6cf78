//! The matching polynomial as the independence polynomial of the line
//! graph.

use indpoly::engine::{independence_poly, matching_poly};
use indpoly::Graph;

fn main() {
    for (name, g) in [
        ("P_6", Graph::path(6).unwrap()),
        ("C_6", Graph::cycle(6).unwrap()),
        ("K_4", Graph::complete(4).unwrap()),
        ("K_2,3", Graph::complete_bipartite(2, 3).unwrap()),
    ] {
        let l = g.line_graph().unwrap();
        let m = matching_poly(&g).unwrap();
        assert_eq!(m, independence_poly(&l).unwrap());
        println!(
            "{name}: M = {m}   (line graph has {} vertices, mu = {})",
            l.vertex_count(),
            g.max_matching_size().unwrap()
        );
    }
}
