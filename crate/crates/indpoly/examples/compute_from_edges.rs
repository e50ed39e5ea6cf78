//! Compute the independence polynomial of a graph given as an edge list.

use indpoly::engine::{alpha, alternating_number, fibonacci_number, independence_poly};
use indpoly::Graph;

fn main() {
    let text = "5 6\n0 2\n1 2\n0 4\n1 4\n2 4\n3 4\n";
    let g = Graph::parse_edge_list(text).unwrap();
    let p = independence_poly(&g).unwrap();

    println!("graph: n = {}, m = {}", g.vertex_count(), g.edge_count());
    println!("I(G;x) = {p}");
    println!("independence number alpha = {}", alpha(&g).unwrap());
    println!("Fibonacci number I(G;1) = {}", fibonacci_number(&g).unwrap());
    println!("alternating number I(G;-1) = {}", alternating_number(&g).unwrap());

    // the same graph by structure: K_{2,3} shares none of this
    let k23 = Graph::complete_bipartite(2, 3).unwrap();
    println!("for comparison, I(K_2,3;x) = {}", independence_poly(&k23).unwrap());
}
