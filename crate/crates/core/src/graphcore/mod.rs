//! Graph substrate: dense undirected simple graphs on labeled vertices,
//! standard generators, exhaustive enumeration of small connected graphs,
//! and text formats (graph6, DIMACS, plain edge lists).

pub mod formats;

use crate::degseq::DegreeSequence;
use crate::error::{Error, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Hard cap for exhaustive labeled enumeration (2^C(n,2) graphs).
pub const ENUMERATION_CAP: usize = 7;

/// Undirected simple graph on vertices `0..n`, stored as a dense symmetric
/// bit relation: row `v` holds one bit per vertex, packed in 64-bit words.
/// Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    fn empty_graph(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    /// Builds a graph from an edge list. Duplicate edges are deduplicated;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty_graph(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count, computed from the bit relation.
    pub fn m(&self) -> usize {
        let total: u32 = self.rows.iter().map(|w| w.count_ones()).sum();
        (total as usize) / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbourhood of `v` as a single 64-bit mask. Only valid for n <= 64.
    pub fn neighbors_mask64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.rows[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted nonincreasing.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted((0..self.n).map(|v| self.degree(v)).collect())
    }

    /// True iff a traversal from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::invalid("connectivity is undefined for n = 0"));
        }
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        seen[0] |= 1;
        frontier[0] |= 1;
        let mut count = 1usize;
        while count < self.n {
            let mut next = vec![0u64; self.words];
            let mut any = false;
            for v in 0..self.n {
                if frontier[v / 64] >> (v % 64) & 1 == 1 {
                    let row = &self.rows[v * self.words..(v + 1) * self.words];
                    for (w, &bits) in row.iter().enumerate() {
                        let fresh = bits & !seen[w];
                        if fresh != 0 {
                            next[w] |= fresh;
                            seen[w] |= fresh;
                            count += fresh.count_ones() as usize;
                            any = true;
                        }
                    }
                }
            }
            if !any {
                break;
            }
            frontier = next;
        }
        Ok(count == self.n)
    }

    /// Isomorphic copy with vertex `i` renamed to `ord(i)`.
    pub fn relabel(&self, ord: &VertexOrdering) -> Result<Graph> {
        if ord.len() != self.n {
            return Err(Error::invalid(format!(
                "ordering has length {}, graph has {} vertices",
                ord.len(),
                self.n
            )));
        }
        let mut g = Graph::empty_graph(self.n);
        for (u, v) in self.edges() {
            g.add_edge(ord.get(u), ord.get(v));
        }
        Ok(g)
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// A bijection `0..n -> 0..n` used to relabel vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(perm: Vec<usize>) -> Result<VertexOrdering> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::invalid(format!("not a permutation of 0..{n}: {perm:?}")));
            }
            seen[p] = true;
        }
        Ok(VertexOrdering(perm))
    }

    pub fn identity(n: usize) -> VertexOrdering {
        VertexOrdering((0..n).collect())
    }

    pub fn inverse(&self) -> VertexOrdering {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p] = i;
        }
        VertexOrdering(inv)
    }

    pub fn get(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty_graph(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty_graph(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn empty(n: usize) -> Graph {
    Graph::empty_graph(n)
}

/// Canonical split graph: a clique on vertices `0..n-alpha` joined to an
/// independent set on `n-alpha..n`. Its degree sequence is `n-alpha` copies
/// of `n-1` followed by `alpha` copies of `n-alpha`.
pub fn split_model_graph(alpha: usize, n: usize) -> Result<Graph> {
    if alpha < 1 || alpha > n {
        return Err(Error::invalid(format!(
            "split model requires 1 <= alpha <= n, got alpha={alpha}, n={n}"
        )));
    }
    let clique = n - alpha;
    let mut g = Graph::empty_graph(n);
    for u in 0..clique {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Name of the edge-sampling scheme used by [`erdos_renyi`], recorded in
/// sweep report headers so corpora remain reproducible across builds.
pub const ER_RNG_DESCRIPTOR: &str = "chacha12/seed_from_u64; one u64 draw per pair (0,1),(0,2),..,(0,n-1),(1,2),..; edge iff (draw>>11) < floor(p*2^53)";

/// G(n, p) sample, deterministic in `(n, p, seed)`.
///
/// Uses ChaCha12 seeded via `seed_from_u64`. Pairs are visited in row-major
/// order `(0,1),(0,2),...,(0,n-1),(1,2),...`; each consumes one `u64` draw
/// and the edge is present iff the top 53 bits are strictly below
/// `floor(p * 2^53)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let threshold = if p >= 1.0 {
        1u64 << 53
    } else if p <= 0.0 || p.is_nan() {
        0
    } else {
        (p * (1u64 << 53) as f64) as u64
    };
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut g = Graph::empty_graph(n);
    for u in 0..n {
        for v in u + 1..n {
            if (rng.next_u64() >> 11) < threshold {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Upper-triangle pair order shared by graph6 and the enumeration bit
/// vector: `(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...`
pub(crate) fn triangle_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

/// Every connected labeled simple graph on `n` vertices, each exactly once,
/// in lexicographic order of the upper-triangle bit vector.
pub fn enumerate_connected(n: usize) -> Result<ConnectedGraphs> {
    if n < 1 || n > ENUMERATION_CAP {
        return Err(Error::invalid(format!(
            "exhaustive enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    let bits = n * (n - 1) / 2;
    Ok(ConnectedGraphs {
        n,
        bits,
        pairs: triangle_pairs(n),
        next: 0,
        end: 1u64 << bits,
    })
}

pub struct ConnectedGraphs {
    n: usize,
    bits: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut g = Graph::empty_graph(self.n);
            for (t, &(i, j)) in self.pairs.iter().enumerate() {
                if mask >> (self.bits - 1 - t) & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
            if g.is_connected().expect("n >= 1") {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_construction() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degree_sequence().values(), &[2, 1, 1]);
        assert_eq!(g.m(), 2);

        let g = Graph::from_edge_list(2, &[]).unwrap();
        assert_eq!(g.m(), 0);

        // P6 from the worked example: degrees (2,2,2,2,1,1).
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(g.degree_sequence().values(), &[2, 2, 2, 2, 1, 1]);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edge_list(3, &[(1, 1)]).is_err());
        // duplicates are deduplicated, not errors
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn degree_sequences_of_generators() {
        assert_eq!(complete(5).degree_sequence().values(), &[4, 4, 4, 4, 4]);
        assert_eq!(path(6).degree_sequence().values(), &[2, 2, 2, 2, 1, 1]);
        assert_eq!(cycle(5).degree_sequence().values(), &[2, 2, 2, 2, 2]);
        assert_eq!(complete(5).m(), 10);
    }

    #[test]
    fn split_model_examples() {
        let g = split_model_graph(3, 6).unwrap();
        assert_eq!(g.degree_sequence().values(), &[5, 5, 5, 3, 3, 3]);
        let g = split_model_graph(1, 6).unwrap();
        assert_eq!(g, complete(6));
        let g = split_model_graph(2, 6).unwrap();
        assert_eq!(g.degree_sequence().values(), &[5, 5, 5, 5, 4, 4]);
        let g = split_model_graph(4, 4).unwrap();
        assert_eq!(g.m(), 0);
        assert!(split_model_graph(0, 4).is_err());
        assert!(split_model_graph(5, 4).is_err());
    }

    #[test]
    fn erdos_renyi_is_deterministic() {
        let a = erdos_renyi(10, 0.5, 12345);
        let b = erdos_renyi(10, 0.5, 12345);
        assert_eq!(a, b);
        assert_eq!(erdos_renyi(10, 0.0, 7).m(), 0);
        assert_eq!(erdos_renyi(10, 1.0, 7).m(), 45);
    }

    #[test]
    fn connectivity() {
        assert!(path(6).is_connected().unwrap());
        assert!(!empty(2).is_connected().unwrap());
        // two disjoint triangles
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        assert!(!g.is_connected().unwrap());
        assert!(empty(0).is_connected().is_err());
        assert!(empty(1).is_connected().unwrap());
    }

    #[test]
    fn enumeration_counts() {
        // labeled connected graph counts, cross-checked in tests/invariants.rs
        // against the complement recurrence
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_connected(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38]);
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(8).is_err());
        for g in enumerate_connected(4).unwrap() {
            assert!(g.is_connected().unwrap());
        }
    }

    #[test]
    fn relabel_examples() {
        let g = path(3);
        let id = VertexOrdering::identity(3);
        assert_eq!(g.relabel(&id).unwrap(), g);

        let rev = VertexOrdering::new(vec![2, 1, 0]).unwrap();
        let h = g.relabel(&rev).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);

        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1]).is_err());
        let short = VertexOrdering::identity(2);
        assert!(g.relabel(&short).is_err());
    }

    #[test]
    fn ordering_inverse() {
        let ord = VertexOrdering::new(vec![2, 0, 3, 1]).unwrap();
        let inv = ord.inverse();
        for i in 0..4 {
            assert_eq!(inv.get(ord.get(i)), i);
        }
    }
}
