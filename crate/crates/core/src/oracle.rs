//! Ground truth: exact maximum independent set (branch and bound with a
//! greedy clique-cover bound), a naive subset-enumeration cross-check,
//! and exact chromatic number for the ordering cross-checks.

use crate::error::{Error, Result};
use crate::graphcore::Graph;

/// Practical cap for the branch-and-bound solver.
pub const EXACT_CAP: usize = 40;

/// Cap for the 2^n subset enumeration.
pub const NAIVE_CAP: usize = 20;

/// Cap for exact coloring.
pub const CHROMATIC_CAP: usize = 10;

/// An exact independence number together with a certifying set.
///
/// The witness is the lexicographically smallest maximum independent set,
/// so downstream constructions and reports are reproducible byte for byte.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaWitness {
    pub alpha: usize,
    pub witness: Vec<usize>,
}

fn clique_cover_bound(adj: &[u64], mut cand: u64) -> usize {
    let mut count = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand ^= 1 << v;
        let mut common = adj[v] & cand;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            cand ^= 1 << u;
            common &= adj[u] & cand;
        }
        count += 1;
    }
    count
}

fn mis_dfs(adj: &[u64], cand: u64, size: usize, set: u64, best: &mut (usize, u64)) {
    if cand == 0 {
        if size > best.0 {
            *best = (size, set);
        }
        return;
    }
    // an independent set takes at most one vertex from each clique
    if size + clique_cover_bound(adj, cand) <= best.0 {
        return;
    }
    let v = cand.trailing_zeros() as usize;
    // include-first on the lowest undecided vertex: the first maximum set
    // reached is the lexicographically smallest one
    mis_dfs(adj, cand & !(adj[v] | 1 << v), size + 1, set | 1 << v, best);
    mis_dfs(adj, cand & !(1 << v), size, set, best);
}

/// Exact independence number with the lexicographically smallest maximum
/// independent set as witness.
pub fn alpha_exact(g: &Graph) -> Result<AlphaWitness> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("independence number requires n >= 1"));
    }
    if n > EXACT_CAP {
        return Err(Error::invalid(format!(
            "exact solver supports n <= {EXACT_CAP}, got {n}"
        )));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors_mask64(v)).collect();
    let full = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best = (0usize, 0u64);
    mis_dfs(&adj, full, 0, 0, &mut best);
    let witness: Vec<usize> = (0..n).filter(|&v| best.1 >> v & 1 == 1).collect();
    debug_assert_eq!(witness.len(), best.0);
    debug_assert!(witness
        .iter()
        .all(|&v| adj[v] & best.1 == 0), "witness must be independent");
    Ok(AlphaWitness {
        alpha: best.0,
        witness,
    })
}

/// Exhaustive subset check; the guard against bound bugs in [`alpha_exact`].
pub fn alpha_naive(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid("independence number requires n >= 1"));
    }
    if n > NAIVE_CAP {
        return Err(Error::invalid(format!(
            "naive solver supports n <= {NAIVE_CAP}, got {n}"
        )));
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors_mask64(v)).collect();
    let mut best = 0;
    for mask in 0u64..1 << n {
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Ok(best)
}

fn colorable(adj: &[u64], n: usize, k: usize, colors: &mut [usize], v: usize, max_used: usize) -> bool {
    if v == n {
        return true;
    }
    // symmetry break: a fresh color may only be the next unused one
    let limit = (max_used + 1).min(k - 1);
    'colors: for c in 0..=limit {
        let mut nb = adj[v] & ((1u64 << v) - 1);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[u] == c {
                continue 'colors;
            }
        }
        colors[v] = c;
        if colorable(adj, n, k, colors, v + 1, max_used.max(c)) {
            return true;
        }
    }
    false
}

/// Minimum k admitting a proper k-coloring, by iterative deepening.
pub fn chromatic_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_CAP {
        return Err(Error::invalid(format!(
            "exact coloring supports n <= {CHROMATIC_CAP}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors_mask64(v)).collect();
    let mut colors = vec![usize::MAX; n];
    for k in 1..=n {
        colors[0] = 0;
        if colorable(&adj, n, k, &mut colors, 1, 0) {
            return Ok(k);
        }
    }
    Ok(n)
}
