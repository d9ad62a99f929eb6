//! Strictly upper-triangular boolean matrices: the structured model
//! matrices T, C, B, S, S', nilpotency-index computation, and the
//! estimate `alpha = n - min{h : U^(h+1) = 0}` read off the upper part
//! of an adjacency matrix.
//!
//! All powers are taken over the boolean semiring (OR of ANDs): only the
//! zero pattern matters for theta-tests, and integer walk counts would
//! overflow. The zero-pattern equivalence with exact integer powers is
//! itself covered by tests.

use crate::error::{Error, Result};
use crate::graphcore::{Graph, VertexOrdering};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Largest n for which `best_ordering_alpha` sweeps all n! orderings.
pub const EXHAUSTIVE_ORDERING_CAP: usize = 9;

/// Sample size for the random-restart ordering search above the cap.
pub const ORDERING_SAMPLE_COUNT: usize = 10_000;

/// Fixed seed for the random-restart ordering search, so results are
/// reproducible without configuration.
pub const ORDERING_SAMPLE_SEED: u64 = 0x616c_7068_616c_6162;

/// Boolean matrix with support strictly above the diagonal, stored as
/// packed bit rows. Strict upper-triangularity makes every such matrix
/// nilpotent: the n-th power vanishes.
#[derive(Clone, PartialEq, Eq)]
pub struct StrictUpperMatrix {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl StrictUpperMatrix {
    pub fn zero(n: usize) -> StrictUpperMatrix {
        let words = n.div_ceil(64).max(1);
        StrictUpperMatrix {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn set(&mut self, i: usize, j: usize) {
        debug_assert!(i < j && j < self.n, "support must be strictly upper");
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|&w| w == 0)
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }
}

impl std::fmt::Debug for StrictUpperMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StrictUpperMatrix(n={}, ones={})", self.n, self.ones())
    }
}

impl std::fmt::Display for StrictUpperMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            let row: Vec<&str> = (0..self.n)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

fn check_kp1(kp1: usize, n: usize) -> Result<()> {
    if kp1 < 2 || kp1 > n {
        return Err(Error::invalid(format!(
            "block parameter requires 2 <= k+1 <= n, got k+1={kp1}, n={n}"
        )));
    }
    Ok(())
}

/// T: a full strict upper triangle on the leading (k+1)x(k+1) block.
/// Parameters are 1-indexed as in the source definitions; `kp1` is k+1.
pub fn build_t(kp1: usize, n: usize) -> Result<StrictUpperMatrix> {
    check_kp1(kp1, n)?;
    let mut m = StrictUpperMatrix::zero(n);
    for i in 0..kp1 - 1 {
        for j in i + 1..kp1 {
            m.set(i, j);
        }
    }
    Ok(m)
}

/// C: ones in column k+1 (1-indexed), rows 1..=k.
pub fn build_c(kp1: usize, n: usize) -> Result<StrictUpperMatrix> {
    check_kp1(kp1, n)?;
    let mut m = StrictUpperMatrix::zero(n);
    for i in 0..kp1 - 1 {
        m.set(i, kp1 - 1);
    }
    Ok(m)
}

/// B: an all-ones k x (n-k-1) block in rows 1..=k, columns k+2..=n
/// (1-indexed); empty when k+1 = n.
pub fn build_b(kp1: usize, n: usize) -> Result<StrictUpperMatrix> {
    check_kp1(kp1, n)?;
    let mut m = StrictUpperMatrix::zero(n);
    for i in 0..kp1 - 1 {
        for j in kp1..n {
            m.set(i, j);
        }
    }
    Ok(m)
}

/// S = T + B (disjoint supports).
pub fn build_s(kp1: usize, n: usize) -> Result<StrictUpperMatrix> {
    let t = build_t(kp1, n)?;
    let b = build_b(kp1, n)?;
    let mut m = t;
    for (dst, src) in m.rows.iter_mut().zip(&b.rows) {
        *dst |= src;
    }
    Ok(m)
}

/// S' = T + B' where B' carries the given bits over B's block, row-major:
/// rows 1..=k, columns k+2..=n (1-indexed). Requires exactly
/// `k * (n - k - 1)` bits.
pub fn build_s_prime(kp1: usize, n: usize, block_bits: &[bool]) -> Result<StrictUpperMatrix> {
    check_kp1(kp1, n)?;
    let k = kp1 - 1;
    let expected = k * (n - kp1);
    if block_bits.len() != expected {
        return Err(Error::invalid(format!(
            "S' block needs exactly {expected} bits for k+1={kp1}, n={n}, got {}",
            block_bits.len()
        )));
    }
    let mut m = build_t(kp1, n)?;
    let mut t = 0;
    for i in 0..k {
        for j in kp1..n {
            if block_bits[t] {
                m.set(i, j);
            }
            t += 1;
        }
    }
    Ok(m)
}

/// Boolean-semiring product.
pub fn bool_mul(a: &StrictUpperMatrix, b: &StrictUpperMatrix) -> StrictUpperMatrix {
    debug_assert_eq!(a.n, b.n);
    let words = a.words;
    let mut out = StrictUpperMatrix::zero(a.n);
    for i in 0..a.n {
        for (w, &bits) in a.row(i).iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let k = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let src = k * words;
                for off in 0..words {
                    out.rows[i * words + off] |= b.rows[src + off];
                }
            }
        }
    }
    out
}

/// True iff the h-th boolean power vanishes.
pub fn bool_power_is_zero(u: &StrictUpperMatrix, h: usize) -> bool {
    debug_assert!(h >= 1);
    let mut acc = u.clone();
    if acc.is_zero() {
        return true;
    }
    for _ in 1..h {
        acc = bool_mul(&acc, u);
        if acc.is_zero() {
            return true;
        }
    }
    acc.is_zero()
}

/// min{h >= 0 : u^(h+1) = 0}, computed as the edge count of the longest
/// index-increasing path in the DAG of one-entries. This is the fast
/// path; [`nilpotency_index_by_powers`] is the reference route used to
/// cross-check it.
pub fn nilpotency_index(u: &StrictUpperMatrix) -> usize {
    let n = u.n;
    let mut longest = vec![0usize; n];
    let mut best = 0;
    for j in 1..n {
        let mut len = 0;
        for i in 0..j {
            if u.get(i, j) {
                len = len.max(longest[i] + 1);
            }
        }
        longest[j] = len;
        best = best.max(len);
    }
    best
}

/// Reference implementation of the nilpotency index via repeated boolean
/// multiplication.
pub fn nilpotency_index_by_powers(u: &StrictUpperMatrix) -> usize {
    let mut acc = u.clone();
    let mut h = 0;
    while !acc.is_zero() {
        h += 1;
        acc = bool_mul(&acc, u);
    }
    h
}

/// The strictly upper part of the adjacency matrix of `g` relabeled by
/// `ord`: entry (i, j) for i < j is set iff the relabeled graph has the
/// edge (i, j).
pub fn upper_from_graph(g: &Graph, ord: &VertexOrdering) -> Result<StrictUpperMatrix> {
    let relabeled = g.relabel(ord)?;
    let n = relabeled.n();
    let mut m = StrictUpperMatrix::zero(n);
    for (u, v) in relabeled.edges() {
        m.set(u, v);
    }
    Ok(m)
}

/// The iterative estimate: starting from the identity, right-multiply by
/// the upper matrix until the product vanishes, then output n - k. This
/// equals `n - nilpotency_index(upper_from_graph(g, ord))` and terminates
/// within n iterations.
pub fn alpha_by_nilpotency(g: &Graph, ord: &VertexOrdering) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("estimate requires n >= 1"));
    }
    let u = upper_from_graph(g, ord)?;
    // first step of the loop: I * U = U
    let mut t = u.clone();
    let mut k = 0;
    loop {
        if t.is_zero() {
            return Ok(n - k);
        }
        if k >= n {
            return Err(Error::Internal(
                "strictly upper matrix failed to nilpotate within n steps".into(),
            ));
        }
        k += 1;
        t = bool_mul(&t, &u);
    }
}

/// Result of the ordering search: the smallest nilpotency index seen, the
/// estimate `n - index`, and the lexicographically smallest ordering
/// attaining it. `sampled` is the number of random orderings drawn when
/// the search was not exhaustive.
#[derive(Clone, Debug)]
pub struct BestOrdering {
    pub alpha_est: usize,
    pub index: usize,
    pub witness: VertexOrdering,
    pub sampled: Option<usize>,
}

/// Longest increasing-position path for the placement `q` (q[pos] = the
/// vertex placed at pos), which equals the nilpotency index of the upper
/// matrix of the ordering q^(-1).
fn placement_index(g: &Graph, q: &[usize]) -> usize {
    let n = q.len();
    let mut longest = vec![0usize; n];
    let mut best = 0;
    if n <= 64 {
        for b in 1..n {
            let row = g.neighbors_mask64(q[b]);
            let mut len = 0;
            for (a, &la) in longest.iter().enumerate().take(b) {
                if row >> q[a] & 1 == 1 {
                    len = len.max(la + 1);
                }
            }
            longest[b] = len;
            best = best.max(len);
        }
    } else {
        for b in 1..n {
            let mut len = 0;
            for (a, &la) in longest.iter().enumerate().take(b) {
                if g.has_edge(q[a], q[b]) {
                    len = len.max(la + 1);
                }
            }
            longest[b] = len;
            best = best.max(len);
        }
    }
    best
}

/// Advances `perm` to its lexicographic successor; false at the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Minimizes the nilpotency index over vertex orderings: exhaustively for
/// n <= [`EXHAUSTIVE_ORDERING_CAP`], otherwise over a fixed-seed random
/// sample of [`ORDERING_SAMPLE_COUNT`] orderings (identity included).
/// Ties go to the lexicographically smallest ordering searched.
pub fn best_ordering_alpha(g: &Graph) -> BestOrdering {
    let n = g.n();
    if n <= 1 {
        return BestOrdering {
            alpha_est: n,
            index: 0,
            witness: VertexOrdering::identity(n),
            sampled: None,
        };
    }
    let floor = usize::from(g.m() > 0); // any edge forces index >= 1
    let mut best_index = usize::MAX;
    let mut best_ord: Vec<usize> = Vec::new();

    let consider = |ord: &[usize], g: &Graph, best_index: &mut usize, best_ord: &mut Vec<usize>| {
        let inv = VertexOrdering::new(ord.to_vec()).expect("permutation").inverse();
        let index = placement_index(g, inv.as_slice());
        if index < *best_index || (index == *best_index && ord < best_ord.as_slice()) {
            *best_index = index;
            best_ord.clear();
            best_ord.extend_from_slice(ord);
        }
    };

    if n <= EXHAUSTIVE_ORDERING_CAP {
        let mut ord: Vec<usize> = (0..n).collect();
        loop {
            consider(&ord, g, &mut best_index, &mut best_ord);
            if best_index == floor || !next_permutation(&mut ord) {
                break;
            }
        }
        BestOrdering {
            alpha_est: n - best_index,
            index: best_index,
            witness: VertexOrdering::new(best_ord).expect("permutation"),
            sampled: None,
        }
    } else {
        let mut rng = ChaCha12Rng::seed_from_u64(ORDERING_SAMPLE_SEED);
        let identity: Vec<usize> = (0..n).collect();
        consider(&identity, g, &mut best_index, &mut best_ord);
        let mut ord = identity;
        for _ in 1..ORDERING_SAMPLE_COUNT {
            for i in (1..n).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                ord.swap(i, j);
            }
            consider(&ord, g, &mut best_index, &mut best_ord);
            if best_index == floor {
                break;
            }
        }
        BestOrdering {
            alpha_est: n - best_index,
            index: best_index,
            witness: VertexOrdering::new(best_ord).expect("permutation"),
            sampled: Some(ORDERING_SAMPLE_COUNT),
        }
    }
}
