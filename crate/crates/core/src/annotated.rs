//! Annotated induced subgraphs and the two reconstruction engines built on
//! clean clique separations: gluing two annotated parts back into the unique
//! original graph, and recovering the far part from a card of a distant
//! vertex.

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;
use crate::interval::{is_clean_clique_separation, Separation};

/// A graph with per-vertex annotations in N plus bottom (None). As an
/// annotated induced subgraph of G, an annotated vertex carries its original
/// degree in G, and an unannotated vertex has equal degree in both graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedGraph {
    pub graph: Graph,
    pub lambda: Vec<Option<usize>>,
}

#[derive(Serialize, Deserialize)]
struct AnnotatedJson {
    g6: String,
    lambda: Vec<Option<usize>>,
}

impl AnnotatedGraph {
    pub fn new(graph: Graph, lambda: Vec<Option<usize>>) -> AnnotatedGraph {
        assert_eq!(graph.n(), lambda.len());
        AnnotatedGraph { graph, lambda }
    }

    /// The separator inside a part: exactly the annotated vertices.
    pub fn annotated_vertices(&self) -> VertexSet {
        VertexSet::from_iter(
            self.graph.vertices().filter(|&v| self.lambda[v].is_some()),
        )
    }

    /// Canonical certificate of the annotated isomorphism class.
    pub fn certificate(&self) -> (Certificate, Vec<Option<usize>>) {
        let colors: Vec<u64> = self
            .lambda
            .iter()
            .map(|l| match l {
                None => 0,
                Some(d) => *d as u64 + 1,
            })
            .collect();
        let perm = canonical_labeling(&self.graph, Some(&colors));
        let relabeled = self.graph.relabel(&perm);
        let mut lam = vec![None; self.lambda.len()];
        for v in self.graph.vertices() {
            lam[perm[v]] = self.lambda[v];
        }
        (Certificate(graph6::encode(&relabeled)), lam)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&AnnotatedJson {
            g6: graph6::encode(&self.graph),
            lambda: self.lambda.clone(),
        })
        .unwrap()
    }

    pub fn from_json(s: &str) -> Result<AnnotatedGraph> {
        let json: AnnotatedJson = serde_json::from_str(s)
            .map_err(|_| Error::NotApplicable("invalid annotated graph JSON"))?;
        let graph = graph6::decode(&json.g6)?;
        if json.lambda.len() != graph.n() {
            return Err(Error::NotApplicable("annotation length mismatch"));
        }
        Ok(AnnotatedGraph::new(graph, json.lambda))
    }

    /// Checks the annotated-induced-subgraph contract against the ambient
    /// graph: annotated vertices carry their ambient degree, unannotated
    /// vertices keep their degree.
    pub fn consistent_with(&self, ambient: &Graph, part: VertexSet) -> bool {
        let old: Vec<usize> = part.iter().collect();
        old.len() == self.graph.n()
            && self.graph.vertices().all(|v| match self.lambda[v] {
                Some(d) => ambient.degree(old[v]) == d,
                None => ambient.degree(old[v]) == self.graph.degree(v),
            })
    }
}

/// True iff a graph isomorphism preserving the annotations pointwise exists.
pub fn annotated_isomorphic(h1: &AnnotatedGraph, h2: &AnnotatedGraph) -> bool {
    h1.graph.n() == h2.graph.n() && h1.certificate() == h2.certificate()
}

/// The two annotated parts of a clean clique separation: H_X = G[X + C] with
/// the original degree recorded on C and bottom elsewhere.
pub fn annotated_parts(g: &Graph, sep: &Separation) -> Result<(AnnotatedGraph, AnnotatedGraph)> {
    if !is_clean_clique_separation(g, sep)? {
        return Err(Error::NotClean);
    }
    let build = |x: VertexSet| -> AnnotatedGraph {
        let keep = x.union(sep.c);
        let (h, old) = g.induced(keep);
        let lambda = old
            .iter()
            .map(|&v| if sep.c.contains(v) { Some(g.degree(v)) } else { None })
            .collect();
        AnnotatedGraph::new(h, lambda)
    };
    Ok((build(sep.a), build(sep.b)))
}

/// One side of a part, split out for gluing: the separator vertices carry
/// (annotation, part degree) keys that determine the matching.
struct PartView {
    /// separator vertices sorted by the matching key
    c_sorted: Vec<usize>,
    free: Vec<usize>,
}

fn view(h: &AnnotatedGraph, b_side: bool) -> Result<PartView> {
    let c_set = h.annotated_vertices();
    if c_set.is_empty() || c_set == h.graph.vertex_set() {
        return Err(Error::IncompatibleParts);
    }
    if !h.graph.is_clique(c_set) {
        return Err(Error::IncompatibleParts);
    }
    let mut c_sorted: Vec<usize> = c_set.iter().collect();
    // A side ascends by part degree within an annotation value; B side
    // descends so that total degrees line up across the seam
    c_sorted.sort_by_key(|&v| {
        let d = h.graph.degree(v) as i64;
        (self_annotation(h, v), if b_side { -d } else { d }, v)
    });
    let free = h.graph.vertices().filter(|&v| !c_set.contains(v)).collect();
    Ok(PartView { c_sorted, free })
}

fn self_annotation(h: &AnnotatedGraph, v: usize) -> usize {
    h.lambda[v].expect("separator vertices are annotated")
}

/// Glues two annotated parts along their annotated separator. The separator
/// vertices pair up by (annotation, part degree); linearly ordered
/// neighborhoods make equal-key vertices twins, so the positional matching is
/// the unique gluing up to isomorphism. A post-assembly validation re-derives
/// the separation and compares the parts.
pub fn assemble(ha: &AnnotatedGraph, hb: &AnnotatedGraph) -> Result<Graph> {
    let a_view = view(ha, false)?;
    let b_view = view(hb, true)?;
    let csize = a_view.c_sorted.len();
    if csize != b_view.c_sorted.len() {
        return Err(Error::IncompatibleParts);
    }
    // annotation multisets and the degree arithmetic must agree pairwise
    for (&ca, &cb) in a_view.c_sorted.iter().zip(&b_view.c_sorted) {
        let ann_a = self_annotation(ha, ca);
        let ann_b = self_annotation(hb, cb);
        if ann_a != ann_b {
            return Err(Error::IncompatibleParts);
        }
        let total = ha.graph.degree(ca) + hb.graph.degree(cb);
        if total + 1 != ann_a + csize {
            return Err(Error::IncompatibleParts);
        }
    }
    // glued vertex layout: A-free, then C (in a_view order), then B-free
    let n = a_view.free.len() + csize + b_view.free.len();
    if n > 32 {
        return Err(Error::SizeLimitExceeded { n, limit: 32 });
    }
    let mut map_a = vec![usize::MAX; ha.graph.n()];
    for (i, &v) in a_view.free.iter().enumerate() {
        map_a[v] = i;
    }
    for (i, &v) in a_view.c_sorted.iter().enumerate() {
        map_a[v] = a_view.free.len() + i;
    }
    let mut map_b = vec![usize::MAX; hb.graph.n()];
    for (i, &v) in b_view.c_sorted.iter().enumerate() {
        map_b[v] = a_view.free.len() + i;
    }
    for (i, &v) in b_view.free.iter().enumerate() {
        map_b[v] = a_view.free.len() + csize + i;
    }
    let mut g = Graph::new(n);
    for (u, v) in ha.graph.edges() {
        g.add_edge(map_a[u], map_a[v]);
    }
    for (u, v) in hb.graph.edges() {
        if map_b[u] < a_view.free.len() + csize && map_b[v] < a_view.free.len() + csize {
            continue; // C-C edges already present from the A part
        }
        g.add_edge(map_b[u], map_b[v]);
    }
    // validation: the glued graph realizes the separation cleanly and its
    // parts are the inputs
    let a_set = VertexSet::from_iter(0..a_view.free.len());
    let c_set = VertexSet::from_iter(a_view.free.len()..a_view.free.len() + csize);
    let b_set = VertexSet::from_iter(a_view.free.len() + csize..n);
    let sep = Separation::new(a_set, c_set, b_set);
    match annotated_parts(&g, &sep) {
        Ok((check_a, check_b)) => {
            if !annotated_isomorphic(&check_a, ha) || !annotated_isomorphic(&check_b, hb) {
                return Err(Error::IncompatibleParts);
            }
        }
        Err(_) => return Err(Error::IncompatibleParts),
    }
    Ok(g)
}

/// Recovers the annotated far part H_A from the card of a deleted vertex b on
/// the B side, given the located A and C vertex sets inside the card and the
/// degree multiset (in the original graph) of b's neighbors.
///
/// The deleted vertex's separator neighbors all see the whole remaining B
/// side, so the candidate annotation bumps distribute over the set X of such
/// separator vertices, degree by degree. Equal-degree X vertices are twins
/// under linearly ordered neighborhoods, so every feasible distribution gives
/// the same annotated part; if the candidates disagree, the preconditions did
/// not hold and the call fails rather than guessing.
pub fn distant_vertex_recover(
    card: &Graph,
    a: VertexSet,
    c: VertexSet,
    neighbor_degrees: &[usize],
) -> Result<AnnotatedGraph> {
    let b_side = card.vertex_set().minus(a.union(c));
    // X: separator vertices adjacent to the entire remaining B side
    let x_set: VertexSet =
        VertexSet::from_iter(c.iter().filter(|&v| b_side.is_subset_of(card.nbrs(v))));
    // card degrees of the deleted vertex's neighbors
    let mut want: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for &d in neighbor_degrees {
        if d == 0 {
            return Err(Error::PreconditionUnverifiable);
        }
        *want.entry(d - 1).or_insert(0) += 1;
    }
    let degrees: Vec<usize> = want.keys().copied().collect();
    let x_of = |deg: usize| -> Vec<usize> {
        x_set.iter().filter(|&v| card.degree(v) == deg).collect()
    };
    let b_avail = |deg: usize| -> usize {
        b_side.iter().filter(|&v| card.degree(v) == deg).count()
    };
    // feasible bump counts per degree value
    let mut ranges: Vec<(usize, std::ops::RangeInclusive<usize>)> = Vec::new();
    for &deg in &degrees {
        let cnt = want[&deg];
        let hi = x_of(deg).len().min(cnt);
        let lo = cnt.saturating_sub(b_avail(deg));
        if lo > hi {
            return Err(Error::PreconditionUnverifiable);
        }
        ranges.push((deg, lo..=hi));
    }
    let mut candidates: Vec<AnnotatedGraph> = Vec::new();
    let mut profile: Vec<(usize, usize)> = Vec::new();
    enumerate_profiles(&ranges, 0, &mut profile, &mut |profile| {
        let mut bumped = VertexSet::EMPTY;
        for &(deg, count) in profile {
            for &v in x_of(deg).iter().take(count) {
                bumped.insert(v);
            }
        }
        let keep = a.union(c);
        let (h, old) = card.induced(keep);
        let lambda: Vec<Option<usize>> = old
            .iter()
            .map(|&v| {
                if c.contains(v) {
                    Some(card.degree(v) + usize::from(bumped.contains(v)))
                } else {
                    None
                }
            })
            .collect();
        candidates.push(AnnotatedGraph::new(h, lambda));
    });
    let mut certs: Vec<_> = candidates.iter().map(|h| h.certificate()).collect();
    certs.sort();
    certs.dedup();
    match certs.len() {
        0 => Err(Error::PreconditionUnverifiable),
        1 => Ok(candidates.pop().unwrap()),
        _ => Err(Error::PreconditionUnverifiable),
    }
}

fn enumerate_profiles(
    ranges: &[(usize, std::ops::RangeInclusive<usize>)],
    idx: usize,
    acc: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]),
) {
    if idx == ranges.len() {
        f(acc);
        return;
    }
    let (deg, range) = &ranges[idx];
    for count in range.clone() {
        acc.push((*deg, count));
        enumerate_profiles(ranges, idx + 1, acc, f);
        acc.pop();
    }
}
