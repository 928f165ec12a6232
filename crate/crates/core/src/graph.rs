//! Finite simple undirected graphs over dense vertex indices 0..n-1.
//!
//! Adjacency is stored as one bit row per vertex, so all set operations on
//! neighborhoods are single word operations. Everything here assumes n <= 32;
//! exact algorithms elsewhere enforce tighter limits where they need them.

use std::fmt;

use crate::error::{Error, Result};

/// Default vertex limit for exact canonical-form computations.
pub const DEFAULT_SIZE_LIMIT: usize = 13;

/// A set of vertices of some graph, as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= 32);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A finite simple undirected graph on vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        assert!(n <= 32, "graphs are limited to 32 vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood N(v).
    pub fn nbrs(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighborhood N[v].
    pub fn closed_nbrs(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | (1 << v))
    }

    /// Closed neighborhood N[S] of a set.
    pub fn closed_nbrs_set(&self, s: VertexSet) -> VertexSet {
        let mut out = s;
        for v in s.iter() {
            out = out.union(self.nbrs(v));
        }
        out
    }

    /// Open neighborhood N(S) = N[S] \ S.
    pub fn open_nbrs_set(&self, s: VertexSet) -> VertexSet {
        self.closed_nbrs_set(s).minus(s)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// All vertices of maximum degree.
    pub fn max_degree_vertices(&self) -> VertexSet {
        let d = self.max_degree();
        VertexSet::from_iter(self.vertices().filter(|&v| self.degree(v) == d))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn has_universal_vertex(&self) -> bool {
        self.n > 0 && self.max_degree() == self.n - 1
    }

    /// The subgraph induced by `keep`, with vertices relabeled to 0..k-1 in
    /// ascending order of their old indices. Returns the graph and the map
    /// from new index to old index.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::new(old.len());
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, old)
    }

    /// G - v with the remaining vertices relabeled in ascending order.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced(self.vertex_set().minus(VertexSet::singleton(v))).0
    }

    /// Applies a permutation: vertex v of self becomes perm[v] of the result.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected component containing `v`.
    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        loop {
            let grown = self.closed_nbrs_set(seen);
            if grown == seen {
                return seen;
            }
            seen = grown;
        }
    }

    /// Components of the subgraph induced by `within`, as masks over the
    /// original vertex indices, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.min_vertex() {
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = self.closed_nbrs_set(comp).intersect(within);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left = left.minus(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_set()
    }

    /// True if `s` induces a connected subgraph (empty sets count as connected).
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        s.is_empty() || self.components_within(s).len() == 1
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.minus(VertexSet::singleton(v)).is_subset_of(self.nbrs(v)))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.intersect(self.nbrs(v)).is_empty())
    }

    /// Multiset of vertex degrees, sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// The ordered triple (S, N(S), complement of N[S]).
    pub fn neighborhood_partition(&self, s: VertexSet) -> Result<(VertexSet, VertexSet, VertexSet)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::InvalidVertexSet(s));
        }
        let closed = self.closed_nbrs_set(s);
        Ok((s, closed.minus(s), self.vertex_set().minus(closed)))
    }

    /// Twin equivalence classes. Two vertices are twins when N(u) = N(v)
    /// (true twins) or N[u] = N[v] (false twins).
    pub fn twin_classes(&self) -> Vec<TwinClass> {
        let mut assigned = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in self.vertices() {
            if assigned.contains(v) {
                continue;
            }
            let mut class = VertexSet::singleton(v);
            let mut kind = TwinKind::Singleton;
            for u in (v + 1)..self.n {
                if assigned.contains(u) {
                    continue;
                }
                if self.nbrs(u) == self.nbrs(v) {
                    class.insert(u);
                    kind = TwinKind::True;
                } else if self.closed_nbrs(u) == self.closed_nbrs(v) {
                    class.insert(u);
                    kind = TwinKind::False;
                }
            }
            assigned = assigned.union(class);
            if class.len() == 1 {
                kind = TwinKind::Singleton;
            }
            out.push(TwinClass { members: class, kind });
        }
        out
    }

    /// The full twin class of `v` (always contains `v`).
    pub fn twin_class_of(&self, v: usize) -> VertexSet {
        let mut class = VertexSet::singleton(v);
        for u in self.vertices() {
            if u != v
                && (self.nbrs(u) == self.nbrs(v) || self.closed_nbrs(u) == self.closed_nbrs(v))
            {
                class.insert(u);
            }
        }
        class
    }

    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        u != v && (self.nbrs(u) == self.nbrs(v) || self.closed_nbrs(u) == self.closed_nbrs(v))
    }

    /// Number of automorphisms, by brute force over all permutations.
    /// Intended as a test oracle and for small-n mass checks only.
    pub fn automorphism_count_brute(&self) -> Result<u64> {
        if self.n > 9 {
            return Err(Error::SizeLimitExceeded { n: self.n, limit: 9 });
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut count = 0u64;
        permute_count(&mut perm, 0, self, &mut count);
        Ok(count)
    }
}

fn permute_count(perm: &mut Vec<usize>, k: usize, g: &Graph, count: &mut u64) {
    let n = perm.len();
    if k == n {
        let ok = (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(perm[u], perm[v]))
        });
        if ok {
            *count += 1;
        }
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        // prune: edges among the first k+1 vertices must already match
        let consistent =
            (0..k).all(|u| g.has_edge(u, k) == g.has_edge(perm[u], perm[k]));
        if consistent {
            permute_count(perm, k + 1, g, count);
        }
        perm.swap(k, i);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    True,
    False,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    pub members: VertexSet,
    pub kind: TwinKind,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    #[test]
    fn degree_sequence_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.degree_sequence(), vec![2, 2, 2]);
        assert_eq!(path(5).degree_sequence(), vec![1, 1, 2, 2, 2]);
        assert_eq!(Graph::new(0).degree_sequence(), Vec::<usize>::new());
    }

    #[test]
    fn twin_classes_examples() {
        // two isolated vertices: one true-twin class
        let g = Graph::new(2);
        let classes = g.twin_classes();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 2);
        assert_eq!(classes[0].kind, TwinKind::True);

        // K2: one false-twin class
        let k2 = Graph::from_edges(2, &[(0, 1)]);
        let classes = k2.twin_classes();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].kind, TwinKind::False);

        // P3 a-b-c: true twins {a, c}, singleton {b}
        let p3 = path(3);
        let classes = p3.twin_classes();
        assert_eq!(classes.len(), 2);
        let outer = classes.iter().find(|c| c.members.len() == 2).unwrap();
        assert_eq!(outer.members, VertexSet::from_iter([0, 2]));
        assert_eq!(outer.kind, TwinKind::True);
    }

    #[test]
    fn neighborhood_partition_examples() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let (s, open, far) = k3.neighborhood_partition(VertexSet::singleton(0)).unwrap();
        assert_eq!(s, VertexSet::singleton(0));
        assert_eq!(open, VertexSet::from_iter([1, 2]));
        assert!(far.is_empty());

        let p5 = path(5);
        let (_, open, far) = p5.neighborhood_partition(VertexSet::singleton(2)).unwrap();
        assert_eq!(open, VertexSet::from_iter([1, 3]));
        assert_eq!(far, VertexSet::from_iter([0, 4]));

        let (s, open, far) = p5.neighborhood_partition(p5.vertex_set()).unwrap();
        assert_eq!(s, p5.vertex_set());
        assert!(open.is_empty() && far.is_empty());
    }

    #[test]
    fn twin_swap_is_automorphism() {
        let p3 = path(3);
        for class in p3.twin_classes() {
            let m: Vec<usize> = class.members.iter().collect();
            for i in 0..m.len() {
                for j in (i + 1)..m.len() {
                    let mut perm: Vec<usize> = (0..p3.n()).collect();
                    perm.swap(m[i], m[j]);
                    assert_eq!(p3.relabel(&perm), p3);
                }
            }
        }
    }
}
