//! Exact computation of I(G;x).
//!
//! Two routes: a subset-enumeration oracle for small graphs, and the
//! deletion recursion I(G) = I(G−w) + x·I(G−N[w]) with memoization on
//! induced-subgraph masks and factorization over connected components.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::graph::Graph;
use crate::poly::Polynomial;

/// Largest graph the subset-enumeration oracle will take.
pub const MAX_BRUTEFORCE_VERTICES: usize = 20;

/// Default memo-table cap; the computation aborts rather than evict.
pub const DEFAULT_MEMO_CAP: usize = 1 << 22;

/// Pivot choice for the deletion recursion. The result is the same for
/// every rule; this only affects how fast the recursion shrinks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// Maximum degree within the current induced subgraph (default).
    MaxDegree,
    /// Lowest-labeled vertex of the current induced subgraph.
    MinIndex,
}

/// I(G;x) by enumerating all vertex subsets. Independent oracle for the
/// recursive engine; quadratic membership test per subset, nothing shared.
pub fn independence_poly_bruteforce(g: &Graph) -> Result<Polynomial, Error> {
    let n = g.vertex_count();
    if n > MAX_BRUTEFORCE_VERTICES {
        return Err(Error::CapacityExceeded { requested: n, limit: MAX_BRUTEFORCE_VERTICES });
    }
    let mut counts = vec![BigInt::zero(); n + 1];
    for mask in 0..(1u64 << n) {
        if g.is_independent(mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(Polynomial::new(counts))
}

/// I(G;x) via the memoized deletion recursion.
pub fn independence_poly(g: &Graph) -> Result<Polynomial, Error> {
    independence_poly_with(g, PivotRule::MaxDegree, DEFAULT_MEMO_CAP)
}

/// Same recursion with an explicit pivot rule and memo cap.
pub fn independence_poly_with(
    g: &Graph,
    rule: PivotRule,
    memo_cap: usize,
) -> Result<Polynomial, Error> {
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    poly_for_mask(g, g.full_mask(), rule, memo_cap, &mut memo)
}

fn poly_for_mask(
    g: &Graph,
    mask: u64,
    rule: PivotRule,
    memo_cap: usize,
    memo: &mut HashMap<u64, Polynomial>,
) -> Result<Polynomial, Error> {
    let k = mask.count_ones();
    if k <= 2 {
        return Ok(tiny_poly(g, mask, k));
    }
    if let Some(p) = memo.get(&mask) {
        return Ok(p.clone());
    }
    let components = g.components_of(mask);
    let result = if components.len() > 1 {
        let mut acc = Polynomial::one();
        for comp in components {
            acc = acc.mul(&poly_for_mask(g, comp, rule, memo_cap, memo)?);
        }
        acc
    } else {
        let pivot = pick_pivot(g, mask, rule);
        let without = poly_for_mask(g, mask & !(1 << pivot), rule, memo_cap, memo)?;
        let closed = g.closed_neighbors(pivot);
        let shrunk = poly_for_mask(g, mask & !closed, rule, memo_cap, memo)?;
        without.add(&Polynomial::x().mul(&shrunk))
    };
    if memo.len() >= memo_cap {
        return Err(Error::MemoTableFull { limit: memo_cap });
    }
    memo.insert(mask, result.clone());
    Ok(result)
}

fn tiny_poly(g: &Graph, mask: u64, k: u32) -> Polynomial {
    match k {
        0 => Polynomial::one(),
        1 => Polynomial::from_i64(&[1, 1]),
        _ => {
            let u = mask.trailing_zeros() as usize;
            if g.neighbors(u) & mask != 0 {
                Polynomial::from_i64(&[1, 2])
            } else {
                Polynomial::from_i64(&[1, 2, 1])
            }
        }
    }
}

fn pick_pivot(g: &Graph, mask: u64, rule: PivotRule) -> usize {
    match rule {
        PivotRule::MinIndex => mask.trailing_zeros() as usize,
        PivotRule::MaxDegree => {
            let mut best = mask.trailing_zeros() as usize;
            let mut best_deg = (g.neighbors(best) & mask).count_ones();
            let mut m = mask & (mask - 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                let d = (g.neighbors(v) & mask).count_ones();
                if d > best_deg {
                    best = v;
                    best_deg = d;
                }
                m &= m - 1;
            }
            best
        }
    }
}

/// I(G1 ∪ G2;x) = I(G1;x) · I(G2;x).
pub fn independence_poly_of_union(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1.mul(p2)
}

/// I(G1 + G2;x) = I(G1;x) + I(G2;x) − 1.
pub fn independence_poly_of_join(p1: &Polynomial, p2: &Polynomial) -> Polynomial {
    p1.add(p2).sub_const(&BigInt::one())
}

/// Matching polynomial M(G;x) = I(L(G);x).
pub fn matching_poly(g: &Graph) -> Result<Polynomial, Error> {
    independence_poly(&g.line_graph()?)
}

/// Independence number, read off as the polynomial's degree.
pub fn alpha(g: &Graph) -> Result<usize, Error> {
    Ok(independence_poly(g)?.degree() as usize)
}

/// Total number of independent sets, I(G;1).
pub fn fibonacci_number(g: &Graph) -> Result<BigInt, Error> {
    Ok(independence_poly(g)?.evaluate_int(1))
}

/// even(G) − odd(G), i.e. I(G;−1).
pub fn alternating_number(g: &Graph) -> Result<BigInt, Error> {
    Ok(independence_poly(g)?.evaluate_int(-1))
}
