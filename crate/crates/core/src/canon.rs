//! Exact canonical forms via partition refinement with backtracking.
//!
//! The certificate of a graph is the graph6 string of its canonically
//! labeled copy. Two graphs get equal certificates precisely when they are
//! isomorphic; deck multiset equality leans on this being exact, so there
//! are no hashing shortcuts here.
//!
//! The search individualizes vertices of the first non-singleton cell of the
//! refined partition and prunes siblings that are equivalent under
//! automorphisms discovered at the leaves (restricted to those fixing the
//! individualized prefix pointwise). That keeps highly symmetric graphs like
//! K_n from exploding into factorial many branches.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_SIZE_LIMIT};
use crate::graph6;

/// Canonical encoding of an unlabeled graph. Equal certificates iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Certificate(pub String);

impl std::fmt::Debug for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Certificate({})", self.0)
    }
}

impl Certificate {
    /// Decodes the canonical representative this certificate names.
    pub fn to_graph(&self) -> Result<Graph> {
        graph6::decode(&self.0)
    }

    pub fn order(&self) -> usize {
        self.to_graph().map(|g| g.n()).unwrap_or(0)
    }
}

/// Canonical labeling of `g` (optionally with vertex colors that must be
/// preserved). Returns the permutation mapping old index -> new index.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u64]>) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 16, "canonical labeling supports at most 16 vertices");
    if n == 0 {
        return Vec::new();
    }
    // initial ordered partition: cells grouped by color value, ascending
    let initial = match colors {
        None => vec![(0..n).collect::<Vec<usize>>()],
        Some(cols) => {
            assert_eq!(cols.len(), n);
            let mut values: Vec<u64> = cols.to_vec();
            values.sort_unstable();
            values.dedup();
            values
                .iter()
                .map(|&c| (0..n).filter(|&v| cols[v] == c).collect())
                .collect()
        }
    };
    let mut s = Searcher { g, n, best: None, gens: Vec::new(), prefix: Vec::new() };
    s.search(initial);
    s.best.unwrap().1
}

/// Exact canonical form with the default size limit.
pub fn canonical_form(g: &Graph) -> Result<Certificate> {
    canonical_form_with_limit(g, DEFAULT_SIZE_LIMIT)
}

pub fn canonical_form_with_limit(g: &Graph, limit: usize) -> Result<Certificate> {
    if g.n() > limit {
        return Err(Error::SizeLimitExceeded { n: g.n(), limit });
    }
    Ok(certificate_unchecked(g))
}

/// Canonical form without the public size limit (callers stay within n <= 16).
pub(crate) fn certificate_unchecked(g: &Graph) -> Certificate {
    let perm = canonical_labeling(g, None);
    Certificate(graph6::encode(&g.relabel(&perm)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() {
        return Ok(false);
    }
    if g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

struct Searcher<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<(u128, Vec<usize>)>,
    gens: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn search(&mut self, mut partition: Vec<Vec<usize>>) {
        self.refine(&mut partition);
        let target = partition.iter().position(|c| c.len() > 1);
        match target {
            None => self.leaf(&partition),
            Some(t) => {
                let cell = partition[t].clone();
                let mut tried: Vec<usize> = Vec::new();
                for &v in &cell {
                    if tried.iter().any(|&u| self.in_stabilizer_orbit(u, v)) {
                        continue;
                    }
                    let mut child = Vec::with_capacity(partition.len() + 1);
                    for (i, c) in partition.iter().enumerate() {
                        if i == t {
                            child.push(vec![v]);
                            child.push(cell.iter().copied().filter(|&u| u != v).collect());
                        } else {
                            child.push(c.clone());
                        }
                    }
                    self.prefix.push(v);
                    self.search(child);
                    self.prefix.pop();
                    tried.push(v);
                }
            }
        }
    }

    fn leaf(&mut self, partition: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (new, cell) in partition.iter().enumerate() {
            perm[cell[0]] = new;
        }
        let mut inv = vec![0usize; self.n];
        for v in 0..self.n {
            inv[perm[v]] = v;
        }
        let mut enc: u128 = 0;
        for j in 1..self.n {
            for i in 0..j {
                enc = (enc << 1) | u128::from(self.g.has_edge(inv[i], inv[j]));
            }
        }
        match &self.best {
            None => self.best = Some((enc, perm)),
            Some((best_enc, best_perm)) => {
                if enc < *best_enc {
                    self.best = Some((enc, perm));
                } else if enc == *best_enc {
                    // equal encodings yield an automorphism
                    let mut best_inv = vec![0usize; self.n];
                    for v in 0..self.n {
                        best_inv[best_perm[v]] = v;
                    }
                    let sigma: Vec<usize> = (0..self.n).map(|u| best_inv[perm[u]]).collect();
                    if sigma.iter().enumerate().any(|(u, &su)| u != su) {
                        self.gens.push(sigma);
                    }
                }
            }
        }
    }

    /// Is v in the orbit of u under the subgroup of found automorphisms that
    /// fix the current individualized prefix pointwise?
    fn in_stabilizer_orbit(&self, u: usize, v: usize) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .gens
            .iter()
            .filter(|s| self.prefix.iter().all(|&p| s[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut seen = 1u32 << u;
        let mut frontier = vec![u];
        while let Some(x) = frontier.pop() {
            for s in &fixing {
                for y in [s[x], s.iter().position(|&z| z == x).unwrap()] {
                    if seen & (1 << y) == 0 {
                        if y == v {
                            return true;
                        }
                        seen |= 1 << y;
                        frontier.push(y);
                    }
                }
            }
        }
        false
    }

    fn refine(&self, partition: &mut Vec<Vec<usize>>) {
        loop {
            let mut changed = false;
            'cells: for ci in 0..partition.len() {
                if partition[ci].len() <= 1 {
                    continue;
                }
                // split cell ci by the vector of neighbor counts into every cell
                let keys: Vec<(Vec<usize>, usize)> = partition[ci]
                    .iter()
                    .map(|&v| {
                        let key = partition
                            .iter()
                            .map(|cell| {
                                cell.iter().filter(|&&u| self.g.has_edge(v, u)).count()
                            })
                            .collect();
                        (key, v)
                    })
                    .collect();
                let first_key = &keys[0].0;
                if keys.iter().all(|(k, _)| k == first_key) {
                    continue 'cells;
                }
                let mut sorted = keys;
                sorted.sort();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut last_key: Option<&Vec<usize>> = None;
                for (k, v) in &sorted {
                    if last_key != Some(k) {
                        groups.push(Vec::new());
                        last_key = Some(k);
                    }
                    groups.last_mut().unwrap().push(*v);
                }
                partition.splice(ci..=ci, groups);
                changed = true;
                break 'cells;
            }
            if !changed {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn relabeling_invariance_p3() {
        let a = path(3); // a-b-c as 0-1-2
        let b = Graph::from_edges(3, &[(2, 0), (0, 1)]); // c-a-b relabeled
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn distinguishes_k2_from_complement() {
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let e2 = Graph::new(2);
        assert_ne!(canonical_form(&k2).unwrap(), canonical_form(&e2).unwrap());
        assert!(!are_isomorphic(&k2, &e2).unwrap());
    }

    #[test]
    fn three_vertex_graphs_all_distinct() {
        // brute-force all 8 labeled graphs on 3 vertices: 4 isomorphism classes
        let mut certs = std::collections::BTreeSet::new();
        for bits in 0u8..8 {
            let mut g = Graph::new(3);
            if bits & 1 != 0 {
                g.add_edge(0, 1);
            }
            if bits & 2 != 0 {
                g.add_edge(0, 2);
            }
            if bits & 4 != 0 {
                g.add_edge(1, 2);
            }
            certs.insert(canonical_form(&g).unwrap());
        }
        assert_eq!(certs.len(), 4);
    }

    #[test]
    fn size_limit_enforced() {
        let g = Graph::new(14);
        assert!(matches!(canonical_form(&g), Err(Error::SizeLimitExceeded { .. })));
        assert!(canonical_form_with_limit(&g, 16).is_ok());
    }

    #[test]
    fn complete_graph_is_fast_and_correct() {
        // exercises the automorphism pruning; K13 would take 13! leaves without it
        let mut g = Graph::new(13);
        for i in 0..13 {
            for j in (i + 1)..13 {
                g.add_edge(i, j);
            }
        }
        let cert = canonical_form(&g).unwrap();
        assert_eq!(cert.to_graph().unwrap().edge_count(), 78);
    }

    #[test]
    fn isomorphism_agrees_with_permutation_search() {
        // C4 vs relabeled C4; P4 vs K1 + K3
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let c4b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1), (1, 2)]);
        assert!(are_isomorphic(&c4, &c4b).unwrap());
        let p4 = path(4);
        let k1k3 = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3)]);
        assert!(!are_isomorphic(&p4, &k1k3).unwrap());
    }

    #[test]
    fn colored_labeling_preserves_colors() {
        // P3 with distinct end colors is asymmetric
        let p3 = path(3);
        let perm = canonical_labeling(&p3, Some(&[7, 1, 9]));
        let relabeled = p3.relabel(&perm);
        // color order must be ascending by cell: color 1 first
        assert_eq!(perm[1], 0);
        assert_eq!(relabeled.n(), 3);
    }

    proptest! {
        #[test]
        fn certificate_invariant_under_relabeling(n in 1usize..8, seed in any::<u64>(), shuffle in any::<u64>()) {
            let mut g = Graph::new(n);
            let mut state = seed;
            for i in 0..n {
                for j in (i + 1)..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                    if state >> 63 == 1 {
                        g.add_edge(i, j);
                    }
                }
            }
            // Fisher-Yates from the seed
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = shuffle | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        }

        #[test]
        fn isomorphic_iff_equal_certificates_n5(bits_g in 0u16..1024, bits_h in 0u16..1024) {
            let build = |bits: u16| {
                let mut g = Graph::new(5);
                let mut k = 0;
                for i in 0..5usize {
                    for j in (i + 1)..5 {
                        if bits & (1 << k) != 0 {
                            g.add_edge(i, j);
                        }
                        k += 1;
                    }
                }
                g
            };
            let g = build(bits_g);
            let h = build(bits_h);
            // brute-force isomorphism over all 120 permutations
            let mut iso = false;
            let mut perm = [0usize, 1, 2, 3, 4];
            let heap = |perm: &mut [usize; 5], g: &Graph, h: &Graph| -> bool {
                fn rec(k: usize, perm: &mut [usize; 5], g: &Graph, h: &Graph) -> bool {
                    if k == 5 {
                        return (0..5).all(|u| {
                            (u + 1..5).all(|v| g.has_edge(u, v) == h.has_edge(perm[u], perm[v]))
                        });
                    }
                    for i in k..5 {
                        perm.swap(k, i);
                        if rec(k + 1, perm, g, h) {
                            perm.swap(k, i);
                            return true;
                        }
                        perm.swap(k, i);
                    }
                    false
                }
                rec(0, perm, g, h)
            };
            if heap(&mut perm, &g, &h) {
                iso = true;
            }
            prop_assert_eq!(iso, canonical_form(&g).unwrap() == canonical_form(&h).unwrap());
        }
    }

    #[test]
    fn vertexset_helpers() {
        let s = VertexSet::from_iter([0, 2, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
    }
}
