//! Plat closure combinatorics: the closure graph, its components, and which
//! powers of a braid close to knots.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::permutation::{canonical_projection, Permutation};

/// Vertices are punctures `1..=2n`; top edges are the upper bridges
/// `{2i−1, 2i}` and bottom edges the lower bridges `{p(2i−1), p(2i)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatGraph {
    pub vertex_count: usize,
    pub top_edges: Vec<(usize, usize)>,
    pub bottom_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlatComponentSummary {
    pub components: usize,
    /// Bridges per component, largest first.
    pub bridges_per_component: Vec<usize>,
}

impl PlatComponentSummary {
    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

/// # Panics
/// If the permutation has odd size.
pub fn plat_graph(p: &Permutation) -> PlatGraph {
    assert!(p.len() % 2 == 0, "plat closure graphs need an even number of punctures");
    let n = p.len() / 2;
    let top_edges = (1..=n).map(|i| (2 * i - 1, 2 * i)).collect();
    let bottom_edges = (1..=n).map(|i| (p.apply(2 * i - 1), p.apply(2 * i))).collect();
    PlatGraph { vertex_count: p.len(), top_edges, bottom_edges }
}

impl PlatGraph {
    /// Partner of `v` across the top (`top = true`) or bottom bridge.
    fn partner(&self, v: usize, top: bool) -> usize {
        let edges = if top { &self.top_edges } else { &self.bottom_edges };
        edges
            .iter()
            .find_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("every vertex lies on one top and one bottom edge")
    }

    /// The cycles of the graph, each listed by walking alternately across
    /// top and bottom edges from its smallest vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count + 1];
        let mut out = Vec::new();
        for start in 1..=self.vertex_count {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                seen[v] = true;
                cycle.push(v);
                let u = self.partner(v, true);
                seen[u] = true;
                cycle.push(u);
                v = self.partner(u, false);
                if v == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.top_edges.iter().chain(&self.bottom_edges).map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }
}

/// Component count and bridge profile; every cycle of the closure graph is
/// one link component and carries as many bridges as top edges.
pub fn component_summary(g: &PlatGraph) -> PlatComponentSummary {
    let mut bridges: Vec<usize> = g.cycles().iter().map(|c| c.len() / 2).collect();
    bridges.sort_unstable_by(|a, b| b.cmp(a));
    PlatComponentSummary { components: bridges.len(), bridges_per_component: bridges }
}

pub fn summarize(w: &BraidWord) -> PlatComponentSummary {
    component_summary(&plat_graph(&canonical_projection(w)))
}

pub fn is_knot(w: &BraidWord) -> bool {
    summarize(w).is_knot()
}

/// Every `m` in `1..=max_power` whose power `w^m` closes to a knot.
/// Works on `π(w)^m`; the word itself is never expanded.
pub fn knot_powers(w: &BraidWord, max_power: u64) -> Vec<u64> {
    let p = canonical_projection(w);
    let mut acc = Permutation::identity(p.len());
    let mut out = Vec::new();
    for m in 1..=max_power {
        acc = acc.then(&p);
        if component_summary(&plat_graph(&acc)).is_knot() {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_braid;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn bottom_edges_follow_the_permutation() {
        let g = plat_graph(&perm(&[1, 6, 5, 2, 3, 4]));
        assert_eq!(g.bottom_edges, vec![(1, 6), (5, 2), (3, 4)]);
        assert_eq!(g.top_edges, vec![(1, 2), (3, 4), (5, 6)]);
        let g = plat_graph(&Permutation::identity(6));
        assert_eq!(g.bottom_edges, g.top_edges);
        let g = plat_graph(&perm(&[3, 1, 4, 2]));
        assert_eq!(g.bottom_edges, vec![(3, 1), (4, 2)]);
        assert!((1..=4).all(|v| g.degree(v) == 2));
    }

    #[test]
    fn two_component_example() {
        let s = component_summary(&plat_graph(&perm(&[1, 6, 5, 2, 3, 4])));
        assert_eq!(s, PlatComponentSummary { components: 2, bridges_per_component: vec![2, 1] });
        let w = parse_braid("s4^-1 s2 s3^-1 s2^-1 s3 s4^-2 s3^-1 s2 s3^-1 s2^-1 s5^-1 s4", 6).unwrap();
        assert_eq!(summarize(&w), s);
        assert!(!is_knot(&w));
    }

    #[test]
    fn figure_eight_closes_to_a_knot() {
        assert_eq!(component_summary(&plat_graph(&perm(&[3, 1, 4, 2]))).components, 1);
        assert!(is_knot(&parse_braid("s2 s1^-1 s2^2 s3", 4).unwrap()));
    }

    #[test]
    fn identity_gives_unlink() {
        for n in 1..6 {
            let s = component_summary(&plat_graph(&Permutation::identity(2 * n)));
            assert_eq!(s.components, n);
            assert!(s.bridges_per_component.iter().all(|&b| b == 1));
        }
        assert!(!is_knot(&BraidWord::identity(4)));
    }

    #[test]
    fn pa_braid_is_a_knot() {
        assert!(is_knot(&parse_braid("s2^2 s4 s1 s3 s5 s2", 6).unwrap()));
    }

    #[test]
    fn knot_power_sets() {
        let w = parse_braid("s2^2 s4 s1 s3 s5 s2", 6).unwrap();
        // pi is a 6-cycle; pi^3 also pairs the bridges into a single loop
        assert_eq!(knot_powers(&w, 13), vec![1, 3, 5, 7, 9, 11, 13]);
        let w = parse_braid("s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3", 6).unwrap();
        assert_eq!(knot_powers(&w, 7), vec![1, 3, 5, 7]);
        let w = parse_braid("s2 s1^-1 s2^2 s3", 4).unwrap();
        assert_eq!(knot_powers(&w, 7), vec![1, 3, 5, 7]);
    }

    #[test]
    fn full_twist_in_b4_is_a_two_component_unlink() {
        let w = parse_braid("s1 s2 s3", 4).unwrap();
        assert!(is_knot(&w));
        assert_eq!(summarize(&w.power(4)).components, 2);
    }
}
