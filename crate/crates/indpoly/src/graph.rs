//! Simple undirected graphs on at most 64 vertices.
//!
//! Neighbor sets are single `u64` masks, so all the set algebra the
//! independence engine leans on (intersection, closed neighborhoods,
//! induced-subgraph restriction) is one machine instruction.

use std::fmt;
use std::path::Path;

use crate::error::Error;

/// Hard capacity: neighbor sets are `u64` bit-masks.
pub const MAX_VERTICES: usize = 64;

/// Exhaustive matching search is only wired for desk-scale inputs.
pub const MAX_MATCHING_VERTICES: usize = 24;

/// Undirected simple graph with 0-based vertex labels.
///
/// Invariants kept by every constructor: adjacency is symmetric,
/// no vertex is its own neighbor, and `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Degree multiset, stored sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct DegreeSequence(pub Vec<usize>);

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, Error> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n, limit: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Build from an explicit edge list; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n || v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge { vertex: u });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Open neighborhood of `v` as a bit-mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]` as a bit-mask.
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    /// Edges in lexicographic order (u < v, sorted).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.adj[u] >> (u + 1) << (u + 1);
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// Mask of all vertices.
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// True if the vertex set given by `mask` is pairwise non-adjacent.
    pub fn is_independent(&self, mask: u64) -> bool {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.adj[v] & mask != 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, Error> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n, limit: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|m| m << self.n));
        Ok(Graph { n, adj })
    }

    /// Zykov sum (join): disjoint union plus every cross edge.
    pub fn zykov_sum(&self, other: &Graph) -> Result<Graph, Error> {
        let mut g = self.disjoint_union(other)?;
        let left = if self.n == 0 { 0 } else { (1u64 << self.n) - 1 };
        let right = g.full_mask() & !left;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Line graph; one vertex per edge, in lexicographic edge order.
    pub fn line_graph(&self) -> Result<Graph, Error> {
        let edges = self.edges();
        let m = edges.len();
        if m > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: m, limit: MAX_VERTICES });
        }
        let mut lg = Graph::empty(m)?;
        for i in 0..m {
            for j in i + 1..m {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    lg.add_edge(i, j)?;
                }
            }
        }
        Ok(lg)
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degs)
    }

    /// At most one degree value occurs twice and none occurs three times.
    pub fn is_antiregular(&self) -> bool {
        let DegreeSequence(degs) = self.degree_sequence();
        let mut repeats = 0;
        let mut i = 0;
        while i < degs.len() {
            let run = degs[i..].iter().take_while(|&&d| d == degs[i]).count();
            match run {
                1 => {}
                2 => repeats += 1,
                _ => return false,
            }
            i += run;
        }
        repeats <= 1
    }

    /// Vertices whose closed neighborhood induces a complete graph.
    pub fn simplicial_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| {
                let closed = self.closed_neighbors(v);
                let mut m = self.adj[v];
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    if self.closed_neighbors(u) & closed != closed {
                        return false;
                    }
                    m &= m - 1;
                }
                true
            })
            .collect()
    }

    /// Every vertex is simplicial or adjacent to a simplicial vertex.
    pub fn is_simplicial_graph(&self) -> bool {
        let mut covered = 0u64;
        for v in self.simplicial_vertices() {
            covered |= self.closed_neighbors(v);
        }
        covered == self.full_mask()
    }

    /// Exact maximum matching size by branch-and-bound over the edge list.
    pub fn max_matching_size(&self) -> Result<usize, Error> {
        if self.n > MAX_MATCHING_VERTICES {
            return Err(Error::CapacityExceeded { requested: self.n, limit: MAX_MATCHING_VERTICES });
        }
        let edges = self.edges();
        let mut best = 0;
        Self::matching_rec(&edges, 0, 0u64, 0, &mut best);
        Ok(best)
    }

    fn matching_rec(edges: &[(usize, usize)], idx: usize, used: u64, size: usize, best: &mut usize) {
        if size > *best {
            *best = size;
        }
        // remaining edges bound
        if idx >= edges.len() || size + (edges.len() - idx) <= *best {
            return;
        }
        let (u, v) = edges[idx];
        if used & (1 << u) == 0 && used & (1 << v) == 0 {
            Self::matching_rec(edges, idx + 1, used | (1 << u) | (1 << v), size + 1, best);
        }
        Self::matching_rec(edges, idx + 1, used, size, best);
    }

    /// alpha(G) + mu(G) = |V(G)|, with alpha from the independence engine.
    pub fn is_konig_egervary(&self) -> Result<bool, Error> {
        let alpha = crate::engine::alpha(self)?;
        let mu = self.max_matching_size()?;
        Ok(alpha + mu == self.n)
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        self.components_of(self.full_mask()).len()
    }

    /// Connected components of the subgraph induced by `mask`, as masks.
    pub fn components_of(&self, mask: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut todo = mask;
        while todo != 0 {
            let start = todo.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    grow |= self.adj[v] & mask;
                    f &= f - 1;
                }
                frontier = grow & !comp;
                comp |= grow;
            }
            out.push(comp);
            todo &= !comp;
        }
        out
    }

    // --- named fixtures ---

    pub fn complete(n: usize) -> Result<Graph, Error> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, Error> {
        let mut g = Graph::empty(m + n)?;
        for u in 0..m {
            for v in m..m + n {
                g.add_edge(u, v)?;
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Graph, Error> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Graph, Error> {
        let mut g = Graph::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    // --- edge-list text format: "n m" header, then "u v" lines ---

    pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::MalformedEdgeList("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedEdgeList(format!("bad header line: {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedEdgeList(format!("bad header line: {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::MalformedEdgeList(format!("bad edge line: {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::MalformedEdgeList(format!("bad edge line: {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::MalformedEdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges)
    }

    pub fn read_edge_list<P: AsRef<Path>>(path: P) -> Result<Graph, Error> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io { path: path.display().to_string(), source: e })?;
        Graph::parse_edge_list(&text)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
