//! Split-graph models and the degree-sequence estimate of the
//! independence number.
//!
//! The estimate iterates alpha = 1, 2, ... and accepts the first alpha
//! whose canonical split-model degree sequence dominates the input and
//! whose sorted-position difference passes Havel-Hakimi. It is an
//! estimate, not a certified answer: the harness measures how often it
//! matches the exact oracle.

use crate::degseq::{diff, dominates, hh_realizable, DegreeSequence};
use crate::error::{Error, Result};
use crate::graphcore::{split_model_graph, Graph};

/// Names the canonical split graph with an `(n - alpha)`-clique fully
/// joined to an `alpha`-independent set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitModel {
    pub alpha: usize,
    pub n: usize,
}

impl SplitModel {
    pub fn new(alpha: usize, n: usize) -> Result<SplitModel> {
        if alpha < 1 || alpha > n {
            return Err(Error::invalid(format!(
                "split model requires 1 <= alpha <= n, got alpha={alpha}, n={n}"
            )));
        }
        Ok(SplitModel { alpha, n })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        model_degree_sequence(self.alpha, self.n).expect("validated on construction")
    }

    pub fn graph(&self) -> Graph {
        split_model_graph(self.alpha, self.n).expect("validated on construction")
    }
}

/// `(n - alpha)` copies of `n - 1` followed by `alpha` copies of
/// `n - alpha`; for alpha = 1 all entries equal `n - 1`.
pub fn model_degree_sequence(alpha: usize, n: usize) -> Result<DegreeSequence> {
    if alpha < 1 || alpha > n {
        return Err(Error::invalid(format!(
            "model degree sequence requires 1 <= alpha <= n, got alpha={alpha}, n={n}"
        )));
    }
    let mut values = vec![n - 1; n - alpha];
    values.extend(std::iter::repeat(n - alpha).take(alpha));
    DegreeSequence::from_sorted(values)
}

/// A partition of a graph's vertices into an independent set and a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub independent: Vec<usize>,
    pub clique: Vec<usize>,
}

impl SplitPartition {
    /// Partition of `0..g.n()` induced by `independent`; requires the set
    /// to be within range, duplicate-free, and independent in `g`.
    pub fn of_graph(g: &Graph, independent: &[usize]) -> Result<SplitPartition> {
        let n = g.n();
        let mut in_set = vec![false; n];
        for &v in independent {
            if v >= n {
                return Err(Error::invalid(format!("vertex {v} out of range for n={n}")));
            }
            if in_set[v] {
                return Err(Error::invalid(format!("duplicate vertex {v} in independent set")));
            }
            in_set[v] = true;
        }
        for (i, &u) in independent.iter().enumerate() {
            for &v in &independent[i + 1..] {
                if g.has_edge(u, v) {
                    return Err(Error::invalid(format!(
                        "set is not independent: edge ({u},{v}) present"
                    )));
                }
            }
        }
        let mut independent: Vec<usize> = independent.to_vec();
        independent.sort_unstable();
        let clique = (0..n).filter(|&v| !in_set[v]).collect();
        Ok(SplitPartition { independent, clique })
    }

    /// True iff the sides really are an independent set and a clique in `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        let indep_ok = self
            .independent
            .iter()
            .enumerate()
            .all(|(i, &u)| self.independent[i + 1..].iter().all(|&v| !g.has_edge(u, v)));
        let clique_ok = self
            .clique
            .iter()
            .enumerate()
            .all(|(i, &u)| self.clique[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        indep_ok && clique_ok
    }
}

/// Completes `g` to a split graph around the given independent set:
/// adds every missing edge between the set and its complement, and every
/// missing edge inside the complement. The input edges are preserved.
pub fn construct_split_graph(g: &Graph, independent: &[usize]) -> Result<Graph> {
    let part = SplitPartition::of_graph(g, independent)?;
    let mut out = g.clone();
    for &v in &part.independent {
        for &w in &part.clique {
            if !out.has_edge(v, w) {
                out.add_edge(v, w);
            }
        }
    }
    for (i, &u) in part.clique.iter().enumerate() {
        for &v in &part.clique[i + 1..] {
            if !out.has_edge(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    debug_assert!(part.holds_in(&out));
    Ok(out)
}

fn alpha_passes(alpha: usize, s: &DegreeSequence) -> bool {
    let model = model_degree_sequence(alpha, s.len()).expect("alpha in 1..=n");
    dominates(&model, s).expect("equal lengths")
        && hh_realizable(&diff(&model, s).expect("equal lengths"))
}

/// The degree-sequence estimate: the first alpha in 1..=n whose model
/// dominates `s` with a Havel-Hakimi-realizable difference, or `None` if
/// no alpha passes.
pub fn alpha_by_degree_sequence(s: &DegreeSequence) -> Result<Option<usize>> {
    if s.is_empty() {
        return Err(Error::invalid("degree sequence must have length >= 1"));
    }
    Ok((1..=s.len()).find(|&alpha| alpha_passes(alpha, s)))
}

/// Every alpha in 1..=n passing the two conditions. A unique split model
/// would make this list a singleton; the harness measures whether it is.
pub fn count_passing_alphas(s: &DegreeSequence) -> Vec<usize> {
    (1..=s.len()).filter(|&alpha| alpha_passes(alpha, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{complete, cycle, path};

    fn ds(v: &[usize]) -> DegreeSequence {
        DegreeSequence::from_sorted(v.to_vec()).unwrap()
    }

    #[test]
    fn model_sequences() {
        assert_eq!(model_degree_sequence(3, 6).unwrap().values(), &[5, 5, 5, 3, 3, 3]);
        assert_eq!(model_degree_sequence(1, 6).unwrap().values(), &[5; 6]);
        assert_eq!(model_degree_sequence(4, 4).unwrap().values(), &[0; 4]);
        assert!(model_degree_sequence(0, 4).is_err());
        assert!(model_degree_sequence(5, 4).is_err());
    }

    #[test]
    fn split_construction_p6() {
        let g = path(6);
        let out = construct_split_graph(&g, &[0, 2, 4]).unwrap();
        assert_eq!(out.degree_sequence().values(), &[5, 5, 5, 3, 3, 3]);
        // input edges preserved
        for (u, v) in g.edges() {
            assert!(out.has_edge(u, v));
        }
        let part = SplitPartition::of_graph(&g, &[0, 2, 4]).unwrap();
        assert!(part.holds_in(&out));
        assert_eq!(part.clique, vec![1, 3, 5]);
    }

    #[test]
    fn split_construction_fixed_points() {
        let g = complete(5);
        assert_eq!(construct_split_graph(&g, &[0]).unwrap(), g);

        let c5 = cycle(5);
        let out = construct_split_graph(&c5, &[0, 2]).unwrap();
        assert_eq!(out.degree_sequence().values(), &[4, 4, 4, 3, 3]);
        assert_eq!(
            out.degree_sequence(),
            model_degree_sequence(2, 5).unwrap()
        );
    }

    #[test]
    fn split_construction_rejects_dependent_set() {
        let g = path(6);
        assert!(construct_split_graph(&g, &[0, 1]).is_err());
        assert!(construct_split_graph(&g, &[0, 6]).is_err());
        assert!(construct_split_graph(&g, &[0, 0]).is_err());
    }

    #[test]
    fn degree_sequence_estimate() {
        assert_eq!(alpha_by_degree_sequence(&ds(&[4, 4, 4, 4, 4])).unwrap(), Some(1));
        // alpha = 1 always passes on a graphical sequence: the difference
        // against the all-(n-1) model is the complement's degree multiset
        assert_eq!(
            alpha_by_degree_sequence(&ds(&[2, 2, 2, 2, 1, 1])).unwrap(),
            Some(1)
        );
        assert!(alpha_by_degree_sequence(&ds(&[])).is_err());
    }

    #[test]
    fn passing_alpha_lists() {
        assert_eq!(count_passing_alphas(&ds(&[4, 4, 4, 4, 4])), vec![1]);
        // all three differences (3,3,3,3,4,4), (3,3,3,3,3,3), (3,3,3,1,2,2)
        // are graphic, so uniqueness fails on the P6 sequence
        let passing = count_passing_alphas(&ds(&[2, 2, 2, 2, 1, 1]));
        assert_eq!(passing, vec![1, 2, 3]);
        assert!(passing.contains(&2) && passing.contains(&3));
        assert_eq!(count_passing_alphas(&ds(&[0])), vec![1]);
        assert_eq!(count_passing_alphas(&ds(&[])), Vec::<usize>::new());
    }

    #[test]
    fn estimate_depends_only_on_sequence() {
        // two different connected graphs, same degree sequence (3,2,2,2,1)
        let a = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 2)]).unwrap();
        let b = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.degree_sequence(), b.degree_sequence());
        assert_eq!(
            alpha_by_degree_sequence(&a.degree_sequence()).unwrap(),
            alpha_by_degree_sequence(&b.degree_sequence()).unwrap()
        );
    }
}
