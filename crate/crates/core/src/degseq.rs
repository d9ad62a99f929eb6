//! Degree-sequence arithmetic and graphicality tests: componentwise
//! dominance and difference of sorted sequences, the Havel-Hakimi
//! procedure, the Erdos-Gallai inequality, and an exhaustive
//! realization search used to cross-check both.

use crate::error::{Error, Result};
use crate::graphcore::Graph;

/// Maximum sequence length accepted by [`realization_search`].
pub const REALIZATION_CAP: usize = 8;

/// A degree sequence: nonnegative integers sorted nonincreasing.
///
/// Difference sequences handled by the Havel-Hakimi procedure may be
/// unsorted or negative; those are plain `&[i64]` slices, not this type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Checked constructor: input must already be sorted nonincreasing.
    pub fn from_sorted(values: Vec<usize>) -> Result<DegreeSequence> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "sequence is not sorted nonincreasing: {values:?}"
            )));
        }
        Ok(DegreeSequence(values))
    }

    /// Sorts the input nonincreasing.
    pub fn from_unsorted(mut values: Vec<usize>) -> DegreeSequence {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Componentwise dominance of sorted sequences: `s_prime >= s` iff
/// `s_prime[i] >= s[i]` for all `i`.
pub fn dominates(s_prime: &DegreeSequence, s: &DegreeSequence) -> Result<bool> {
    if s_prime.len() != s.len() {
        return Err(Error::invalid(format!(
            "length mismatch: {} vs {}",
            s_prime.len(),
            s.len()
        )));
    }
    Ok(s_prime
        .values()
        .iter()
        .zip(s.values())
        .all(|(&a, &b)| a >= b))
}

/// Componentwise difference in sorted-position pairing, in the order of
/// the sorted inputs. May contain negative entries when dominance fails.
pub fn diff(s_prime: &DegreeSequence, s: &DegreeSequence) -> Result<Vec<i64>> {
    if s_prime.len() != s.len() {
        return Err(Error::invalid(format!(
            "length mismatch: {} vs {}",
            s_prime.len(),
            s.len()
        )));
    }
    Ok(s_prime
        .values()
        .iter()
        .zip(s.values())
        .map(|(&a, &b)| a as i64 - b as i64)
        .collect())
}

/// Havel-Hakimi graphicality test on an arbitrary integer list.
///
/// Steps, run in order: (1) any entry > n-1 fails, with n the length at
/// entry; (2) an odd number of odd entries fails; then loop: (3) any
/// negative entry fails, (4) all zeros succeeds, (5) sort nonincreasing,
/// (6) remove the head d and decrement the next d entries.
///
/// Each iteration shortens the list by one, so the procedure terminates.
pub fn hh_realizable(seq: &[i64]) -> bool {
    let n = seq.len() as i64;
    if seq.iter().any(|&d| d > n - 1) {
        return false;
    }
    if seq.iter().filter(|&&d| d % 2 != 0).count() % 2 != 0 {
        return false;
    }
    let mut s = seq.to_vec();
    loop {
        if s.iter().any(|&d| d < 0) {
            return false;
        }
        if s.iter().all(|&d| d == 0) {
            return true;
        }
        s.sort_unstable_by(|a, b| b.cmp(a));
        let head = s.remove(0);
        // head <= s.len() holds whenever step 1 passed at entry; an
        // impossible decrement means no realization regardless
        if head > s.len() as i64 {
            return false;
        }
        for d in s.iter_mut().take(head as usize) {
            *d -= 1;
        }
    }
}

/// Erdos-Gallai characterization: the sum is even and for every k,
/// `sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(k, d_i)`.
pub fn erdos_gallai_realizable(s: &DegreeSequence) -> bool {
    let d = s.values();
    let n = d.len();
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    let mut prefix: u128 = 0;
    for k in 1..=n {
        prefix += d[k - 1] as u128;
        let tail: u128 = d[k..].iter().map(|&x| x.min(k) as u128).sum();
        if prefix > (k as u128) * (k as u128 - 1) + tail {
            return false;
        }
    }
    true
}

/// Exhaustive search for a simple graph realizing `s` (some graph whose
/// sorted degree sequence equals `s`), or `None` if no such graph exists.
///
/// Explores edge choices over the upper triangle in lexicographic order,
/// pruning only branches where a vertex demand is already unsatisfiable,
/// so the first solution found is deterministic. Independent of the
/// Havel-Hakimi and Erdos-Gallai routes by construction.
pub fn realization_search(s: &DegreeSequence) -> Result<Option<Graph>> {
    let n = s.len();
    if n > REALIZATION_CAP {
        return Err(Error::invalid(format!(
            "realization search supports length <= {REALIZATION_CAP}, got {n}"
        )));
    }
    let target = s.values();
    if target.iter().any(|&d| d >= n) {
        return Ok(None);
    }
    // remaining demand per vertex; pairs visited row-major (0,1),(0,2),..
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    // avail[t][v] = undecided pairs touching v from pair index t onward
    let mut avail = vec![vec![0usize; n]; pairs.len() + 1];
    for t in (0..pairs.len()).rev() {
        avail[t] = avail[t + 1].clone();
        avail[t][pairs[t].0] += 1;
        avail[t][pairs[t].1] += 1;
    }
    let mut rem: Vec<usize> = target.to_vec();
    let mut chosen: Vec<(usize, usize)> = Vec::new();

    fn feasible(rem: &[usize], avail: &[usize]) -> bool {
        rem.iter().zip(avail).all(|(&r, &a)| r <= a)
    }

    fn search(
        t: usize,
        pairs: &[(usize, usize)],
        avail: &[Vec<usize>],
        rem: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
    ) -> bool {
        if !feasible(rem, &avail[t]) {
            return false;
        }
        if t == pairs.len() {
            return rem.iter().all(|&r| r == 0);
        }
        let (u, v) = pairs[t];
        if rem[u] > 0 && rem[v] > 0 {
            rem[u] -= 1;
            rem[v] -= 1;
            chosen.push((u, v));
            if search(t + 1, pairs, avail, rem, chosen) {
                return true;
            }
            chosen.pop();
            rem[u] += 1;
            rem[v] += 1;
        }
        search(t + 1, pairs, avail, rem, chosen)
    }

    if search(0, &pairs, &avail, &mut rem, &mut chosen) {
        let g = Graph::from_edge_list(n, &chosen)?;
        debug_assert_eq!(g.degree_sequence().values(), target);
        Ok(Some(g))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn constructor_checks_order() {
        assert!(DegreeSequence::from_sorted(vec![3, 3, 2]).is_ok());
        assert!(DegreeSequence::from_sorted(vec![2, 3]).is_err());
        assert_eq!(
            DegreeSequence::from_unsorted(vec![1, 3, 2]).values(),
            &[3, 2, 1]
        );
    }

    #[test]
    fn dominance() {
        assert!(dominates(&ds(&[5, 5, 5, 3, 3, 3]), &ds(&[2, 2, 2, 2, 1, 1])).unwrap());
        assert!(dominates(&ds(&[3, 3]), &ds(&[3, 3])).unwrap());
        assert!(!dominates(&ds(&[2, 2, 2]), &ds(&[3, 1, 1])).unwrap());
        assert!(dominates(&ds(&[1, 1]), &ds(&[1])).is_err());
    }

    #[test]
    fn difference() {
        assert_eq!(
            diff(&ds(&[5, 5, 5, 3, 3, 3]), &ds(&[2, 2, 2, 2, 1, 1])).unwrap(),
            vec![3, 3, 3, 1, 2, 2]
        );
        assert_eq!(
            diff(&ds(&[5, 5, 5, 5, 5, 5]), &ds(&[2, 2, 2, 2, 1, 1])).unwrap(),
            vec![3, 3, 3, 3, 4, 4]
        );
        let s = ds(&[4, 2, 1]);
        assert_eq!(diff(&s, &s).unwrap(), vec![0, 0, 0]);
        assert!(diff(&ds(&[1]), &ds(&[1, 1])).is_err());
    }

    #[test]
    fn havel_hakimi_verdicts() {
        assert!(hh_realizable(&[0, 0, 0]));
        assert!(!hh_realizable(&[1, 1, 1])); // three odd entries
        assert!(hh_realizable(&[3, 3, 3, 1, 2, 2]));
        // graphic despite the published worked example claiming otherwise:
        // K_{3,3} plus one edge inside a side realizes (4,4,3,3,3,3)
        assert!(hh_realizable(&[3, 3, 3, 3, 4, 4]));
        assert!(hh_realizable(&[3, 3, 3, 3, 3, 3])); // K_{3,3}
        assert!(!hh_realizable(&[3, 3, 1, 1]));
        assert!(!hh_realizable(&[2, -1, 1])); // negative entry
        assert!(!hh_realizable(&[5, 1])); // entry > n-1
        assert!(hh_realizable(&[])); // empty graph by convention
        assert!(hh_realizable(&[2, 1, 2, 1])); // unsorted input is fine
    }

    #[test]
    fn erdos_gallai_verdicts() {
        assert!(erdos_gallai_realizable(&ds(&[3, 3, 3, 3]))); // K_4
        assert!(!erdos_gallai_realizable(&ds(&[3, 3, 1, 1]))); // fails at k=2
        assert!(erdos_gallai_realizable(&ds(&[2, 2, 2, 2, 1, 1]))); // P_6
        assert!(!erdos_gallai_realizable(&ds(&[1, 1, 1]))); // odd sum
        assert!(erdos_gallai_realizable(&ds(&[])));
    }

    #[test]
    fn realization_examples() {
        let g = realization_search(&ds(&[4, 4, 4, 4, 4])).unwrap().unwrap();
        assert_eq!(g.m(), 10); // K_5 is the only 4-regular graph on 5 vertices
        assert!(realization_search(&ds(&[3, 3, 1, 1])).unwrap().is_none());
        assert!(realization_search(&ds(&[4, 4, 3, 3, 3, 3])).unwrap().is_some());
        assert!(realization_search(&ds(&[9, 9])).unwrap().is_none());
        assert!(realization_search(&ds(&[1; 9])).is_err());
        let g = realization_search(&ds(&[])).unwrap().unwrap();
        assert_eq!(g.n(), 0);
    }
}
