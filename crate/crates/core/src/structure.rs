//! Structural decomposition of connected interval graphs: the canonical order
//! of maximum-degree vertices, bordering vertices, sides, coating, span, bulk,
//! flanks, one-sided maximum-degree classes, and outsiders.

use serde::Serialize;

use crate::canon::certificate_unchecked;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::{compact_representation, is_interval};

/// Twin classes of a vertex subset, linearly ordered along the interval
/// representation. Unique up to reversal and permuting within classes; the
/// stored orientation is the lexicographically smaller of the two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxDegreeOrder {
    pub classes: Vec<VertexSet>,
}

impl MaxDegreeOrder {
    pub fn first(&self) -> Option<VertexSet> {
        self.classes.first().copied()
    }

    pub fn last(&self) -> Option<VertexSet> {
        self.classes.last().copied()
    }
}

/// Vertices v such that no w satisfies N[w] strictly inside N[v].
pub fn non_neighborhood_contained(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.vertices().filter(|&v| {
        !g.vertices().any(|w| {
            w != v
                && g.closed_nbrs(w) != g.closed_nbrs(v)
                && g.closed_nbrs(w).is_subset_of(g.closed_nbrs(v))
        })
    }))
}

/// Vertices whose closed neighborhood is inclusion-maximal: no other vertex's
/// closed neighborhood strictly contains theirs. Maximum-degree vertices
/// always qualify; this is the vertex set the card-analysis orders range
/// over.
pub fn neighborhood_maximal(g: &Graph) -> VertexSet {
    VertexSet::from_iter(g.vertices().filter(|&v| {
        !g.vertices().any(|u| {
            u != v
                && g.closed_nbrs(v) != g.closed_nbrs(u)
                && g.closed_nbrs(v).is_subset_of(g.closed_nbrs(u))
        })
    }))
}

/// Linear order of the twin classes of `vs` along a compact (hence tidy)
/// representation. Members of `vs` must not strictly neighborhood-contain one
/// another (vertex sets of uniform degree, the non-neighborhood-contained set
/// and the neighborhood-maximal set all qualify).
pub fn max_degree_order(g: &Graph, vs: VertexSet) -> Result<MaxDegreeOrder> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !vs.is_subset_of(g.vertex_set()) {
        return Err(Error::InvalidVertexSet(vs));
    }
    for u in vs.iter() {
        for v in vs.iter() {
            if u != v
                && g.closed_nbrs(u) != g.closed_nbrs(v)
                && g.closed_nbrs(u).is_subset_of(g.closed_nbrs(v))
            {
                return Err(Error::InvalidVertexSet(vs));
            }
        }
    }
    let rep = compact_representation(g)?;
    // tidy representations give twins equal intervals, so grouping by interval
    // is the twin-class grouping
    let mut members: Vec<usize> = vs.to_vec();
    members.sort_by_key(|&v| (rep.left(v), rep.right(v), v));
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut last_interval = None;
    for v in members {
        let iv = (rep.left(v), rep.right(v));
        if last_interval == Some(iv) {
            let class = classes.last_mut().unwrap();
            class.insert(v);
        } else {
            classes.push(VertexSet::singleton(v));
            last_interval = Some(iv);
        }
    }
    // canonical orientation: the smaller of the order and its reverse
    let key = |cs: &[VertexSet]| cs.iter().map(|c| c.0).collect::<Vec<u32>>();
    let mut rev = classes.clone();
    rev.reverse();
    let classes = if key(&rev) < key(&classes) { rev } else { classes };
    Ok(MaxDegreeOrder { classes })
}

/// Maximum-degree vertices extremal in the canonical order of V_max.
pub fn bordering_vertices(g: &Graph) -> Result<VertexSet> {
    if g.edge_count() == 0 {
        return Err(Error::NotApplicable("bordering vertices need an edge"));
    }
    let order = max_degree_order(g, g.max_degree_vertices())?;
    let mut out = order.first().unwrap_or_default();
    if let Some(last) = order.last() {
        out = out.union(last);
    }
    Ok(out)
}

/// Equivalence classes of the overlap relation on `u_set`: u ~ u' when their
/// closed neighborhoods (within `ambient`) intersect, transitively closed.
fn overlap_classes(g: &Graph, ambient: VertexSet, u_set: VertexSet) -> Vec<VertexSet> {
    let mut left = u_set;
    let mut out = Vec::new();
    while let Some(v) = left.min_vertex() {
        let mut comp = VertexSet::singleton(v);
        loop {
            let mut grown = comp;
            for x in u_set.minus(comp).iter() {
                let nx = g.closed_nbrs(x).intersect(ambient);
                if comp
                    .iter()
                    .any(|y| !g.closed_nbrs(y).intersect(ambient).intersect(nx).is_empty())
                {
                    grown.insert(x);
                }
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        out.push(comp);
        left = left.minus(comp);
    }
    out.sort_by_key(|c| c.min_vertex());
    out
}

/// The sides of s: equivalence classes of the overlap relation on the
/// component of s minus N[s]. Requires deg(s) >= maxdeg(G) - 1.
pub fn sides(g: &Graph, s: usize) -> Result<Vec<VertexSet>> {
    let required = g.max_degree().saturating_sub(1);
    if g.degree(s) < required {
        return Err(Error::DegreeTooSmall { vertex: s, degree: g.degree(s), required });
    }
    let comp = g.component_of(s);
    let u_set = comp.minus(g.closed_nbrs(s));
    Ok(overlap_classes(g, comp, u_set))
}

/// All vertices lying on some induced path between two (possibly equal)
/// vertices of s. Enumerates vertex subsets and keeps those inducing a path
/// with both endpoints in s; exact for the sizes this crate handles.
pub fn coating(g: &Graph, s: VertexSet) -> VertexSet {
    let n = g.n();
    assert!(n <= 16, "coating enumerates subsets; limited to 16 vertices");
    if s.is_empty() {
        return VertexSet::EMPTY;
    }
    let mut out = s;
    for bits in 1u32..(1u32 << n) {
        let p = VertexSet(bits);
        if p.len() < 2 || p.intersect(s).len() < 2 {
            continue;
        }
        if p.is_subset_of(out) {
            continue;
        }
        if let Some((e1, e2)) = induced_path_endpoints(g, p) {
            if s.contains(e1) && s.contains(e2) {
                out = out.union(p);
            }
        }
    }
    out
}

/// If `p` induces a path, returns its two endpoints (equal for a singleton).
fn induced_path_endpoints(g: &Graph, p: VertexSet) -> Option<(usize, usize)> {
    if p.len() == 1 {
        let v = p.min_vertex().unwrap();
        return Some((v, v));
    }
    let mut ends = Vec::new();
    for v in p.iter() {
        match g.nbrs(v).intersect(p).len() {
            1 => ends.push(v),
            2 => {}
            _ => return None,
        }
    }
    if ends.len() != 2 || !g.is_connected_set(p) {
        return None;
    }
    Some((ends[0], ends[1]))
}

/// Span: the coating plus every vertex whose closed neighborhood stays inside
/// the coating's closed neighborhood.
pub fn span(g: &Graph, s: VertexSet) -> VertexSet {
    if s.is_empty() {
        return VertexSet::EMPTY;
    }
    let coat = coating(g, s);
    let hull = g.closed_nbrs_set(coat);
    VertexSet::from_iter(hull.iter().filter(|&v| g.closed_nbrs(v).is_subset_of(hull)))
}

/// bulk(G) = span of the maximum-degree vertex set.
pub fn bulk(g: &Graph) -> Result<VertexSet> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_interval(g) {
        return Err(Error::NotInterval(None));
    }
    Ok(span(g, g.max_degree_vertices()))
}

/// Bulk without the connectivity and recognition gates, for card analysis
/// where the ambient procedure has already established the graph class.
pub fn bulk_unchecked(g: &Graph) -> VertexSet {
    span(g, g.max_degree_vertices())
}

/// Ranks parts: larger first, then least certificate of a distinguishing
/// induced subgraph, then smallest vertex for full determinism.
fn sort_parts_canonically(g: &Graph, parts: &mut Vec<VertexSet>, distinguish: impl Fn(VertexSet) -> VertexSet) {
    parts.sort_by_key(|&p| {
        (
            std::cmp::Reverse(p.len()),
            certificate_unchecked(&g.induced(distinguish(p)).0),
            p.min_vertex().unwrap_or(usize::MAX),
        )
    });
}

/// The at most two flanks: overlap classes of V \ N[bulk(G)], larger first,
/// then least certificate of the induced subgraph.
pub fn flanks(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    let b = bulk(g)?;
    let f_all = g.vertex_set().minus(g.closed_nbrs_set(b));
    let mut classes = overlap_classes(g, g.vertex_set(), f_all);
    debug_assert!(classes.len() <= 2, "interval graphs have at most two flanks");
    sort_parts_canonically(g, &mut classes, |p| p);
    let f1 = classes.first().copied().unwrap_or_default();
    let f2 = classes.get(1).copied().unwrap_or_default();
    Ok((f1, f2))
}

/// The set F_G of all flank vertices.
pub fn flank_vertices(g: &Graph) -> Result<VertexSet> {
    let b = bulk(g)?;
    Ok(g.vertex_set().minus(g.closed_nbrs_set(b)))
}

/// Flank classes of a graph already known to be connected interval.
pub fn flank_classes_unchecked(g: &Graph) -> Vec<VertexSet> {
    let b = bulk_unchecked(g);
    let f_all = g.vertex_set().minus(g.closed_nbrs_set(b));
    overlap_classes(g, g.vertex_set(), f_all)
}

pub(crate) fn one_sided_classes_lenient(g: &Graph) -> Vec<VertexSet> {
    let vmax = g.max_degree_vertices();
    let a: VertexSet = VertexSet::from_iter(
        vmax.iter().filter(|&z| sides(g, z).map(|s| s.len() <= 1).unwrap_or(false)),
    );
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut done = VertexSet::EMPTY;
    for z in a.iter() {
        if done.contains(z) {
            continue;
        }
        let class = g.twin_class_of(z).intersect(a);
        classes.push(class);
        done = done.union(class);
    }
    classes.sort_by_key(|c| c.min_vertex());
    classes
}

fn order_a_classes(g: &Graph, classes: Vec<VertexSet>) -> (VertexSet, VertexSet) {
    let mut parts = classes;
    sort_parts_canonically(g, &mut parts, |p| span(g, p));
    let a1 = parts.first().copied().unwrap_or_default();
    let a2 = parts.get(1).copied().unwrap_or_default();
    (a1, a2)
}

/// The one or two twin classes of maximum-degree vertices with at most one
/// side, canonically ordered (larger first, then least span certificate).
pub fn one_sided_max_classes(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if !is_interval(g) {
        return Err(Error::NotInterval(None));
    }
    if g.has_universal_vertex() {
        return Err(Error::HasUniversalVertex);
    }
    let classes = one_sided_classes_lenient(g);
    debug_assert!(classes.len() <= 2);
    Ok(order_a_classes(g, classes))
}

/// Outsiders of a one-sided class: vertices whose closed neighborhood lies
/// inside the class's span.
pub fn outsiders_of(g: &Graph, a_class: VertexSet) -> VertexSet {
    if a_class.is_empty() {
        return VertexSet::EMPTY;
    }
    let sp = span(g, a_class);
    VertexSet::from_iter(g.vertices().filter(|&o| g.closed_nbrs(o).is_subset_of(sp)))
}

/// Outsider classes (O1, O2), indexed consistently with
/// `one_sided_max_classes`.
pub fn outsiders(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    let (a1, a2) = one_sided_max_classes(g)?;
    Ok((outsiders_of(g, a1), outsiders_of(g, a2)))
}

/// The chain closure of the one-sided classes and its two equivalence
/// classes.
///
/// Membership: maximum-degree vertices reachable from a one-sided class by
/// steps v -> v' with |N[v] \ N[v']| = 1 (closed neighborhoods). Two members
/// are equivalent when joined by steps with difference at most 1; the class
/// indexed i contains the one-sided class A_i. The classes may coincide.
pub fn a_infinity(g: &Graph) -> Result<(VertexSet, VertexSet)> {
    if !is_interval(g) {
        return Err(Error::NotInterval(None));
    }
    let vmax = g.max_degree_vertices();
    let classes = one_sided_classes_lenient(g);
    let a_all: VertexSet = classes.iter().fold(VertexSet::EMPTY, |acc, &c| acc.union(c));
    // closure under exact-difference-1 steps within V_max
    let mut closure = a_all;
    loop {
        let mut grown = closure;
        for v in vmax.minus(closure).iter() {
            if closure
                .iter()
                .any(|u| g.closed_nbrs(u).minus(g.closed_nbrs(v)).len() == 1)
            {
                grown.insert(v);
            }
        }
        if grown == closure {
            break;
        }
        closure = grown;
    }
    // equivalence classes: connectivity under difference <= 1 steps
    let comp_of = |start: VertexSet| -> VertexSet {
        let mut comp = start.intersect(closure);
        loop {
            let mut grown = comp;
            for v in closure.minus(comp).iter() {
                if comp.iter().any(|u| g.closed_nbrs(u).minus(g.closed_nbrs(v)).len() <= 1) {
                    grown.insert(v);
                }
            }
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    };
    let (a1, a2) = order_a_classes(g, classes);
    let c1 = if a1.is_empty() { VertexSet::EMPTY } else { comp_of(a1) };
    let c2 = if a2.is_empty() { c1 } else { comp_of(a2) };
    Ok((c1, c2))
}

/// Full structural decomposition of one connected interval graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub bulk: VertexSet,
    pub flanks: (VertexSet, VertexSet),
    pub one_sided_classes: (VertexSet, VertexSet),
    pub outsiders: (VertexSet, VertexSet),
    pub bordering: VertexSet,
}

impl StructureReport {
    pub fn flank_size_multiset(&self) -> (usize, usize) {
        let mut s = [self.flanks.0.len(), self.flanks.1.len()];
        s.sort_unstable();
        (s[0], s[1])
    }

    pub fn outsider_size_multiset(&self) -> (usize, usize) {
        let mut s = [self.outsiders.0.len(), self.outsiders.1.len()];
        s.sort_unstable();
        (s[0], s[1])
    }
}

#[derive(Serialize)]
struct StructureReportJson {
    bulk: Vec<usize>,
    flanks: [Vec<usize>; 2],
    one_sided_classes: [Vec<usize>; 2],
    outsiders: [Vec<usize>; 2],
    bordering: Vec<usize>,
}

impl Serialize for StructureReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        StructureReportJson {
            bulk: self.bulk.to_vec(),
            flanks: [self.flanks.0.to_vec(), self.flanks.1.to_vec()],
            one_sided_classes: [
                self.one_sided_classes.0.to_vec(),
                self.one_sided_classes.1.to_vec(),
            ],
            outsiders: [self.outsiders.0.to_vec(), self.outsiders.1.to_vec()],
            bordering: self.bordering.to_vec(),
        }
        .serialize(s)
    }
}

pub fn structure_report(g: &Graph) -> Result<StructureReport> {
    let flanks = flanks(g)?;
    let one_sided = one_sided_max_classes(g)?;
    Ok(StructureReport {
        bulk: bulk(g)?,
        flanks,
        one_sided_classes: one_sided,
        outsiders: (outsiders_of(g, one_sided.0), outsiders_of(g, one_sided.1)),
        bordering: bordering_vertices(g)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn k(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    // caterpillar: center 2 adjacent to leaves 0,1,3 and to 4; tail 4-5
    fn caterpillar1() -> Graph {
        Graph::from_edges(6, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5)])
    }

    // caterpillar1 with the tail extended by 5-6
    fn caterpillar2() -> Graph {
        Graph::from_edges(7, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5), (5, 6)])
    }

    // center 0 adjacent to leaves 1,2 and tail roots 3,4; tails 3-5 and 4-6
    fn double_tail() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6)])
    }

    // m1=0, m2=1 adjacent; false twins 2,3 on m1; false twins 4,5 on m2
    fn barbell() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    }

    #[test]
    fn non_neighborhood_contained_examples() {
        assert_eq!(non_neighborhood_contained(&k(3)), VertexSet::full(3));
        assert_eq!(non_neighborhood_contained(&path(3)), VertexSet::from_iter([0, 2]));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(non_neighborhood_contained(&star), VertexSet::from_iter([1, 2, 3]));
    }

    #[test]
    fn max_degree_order_examples() {
        let p5 = path(5);
        let order = max_degree_order(&p5, p5.max_degree_vertices()).unwrap();
        let seq: Vec<Vec<usize>> = order.classes.iter().map(|c| c.to_vec()).collect();
        assert!(seq == vec![vec![1], vec![2], vec![3]] || seq == vec![vec![3], vec![2], vec![1]]);

        let bb = barbell();
        let order = max_degree_order(&bb, bb.max_degree_vertices()).unwrap();
        assert_eq!(order.classes.len(), 2);

        let k4 = k(4);
        let order = max_degree_order(&k4, k4.max_degree_vertices()).unwrap();
        assert_eq!(order.classes, vec![VertexSet::full(4)]);
    }

    #[test]
    fn bordering_examples() {
        assert_eq!(bordering_vertices(&path(5)).unwrap(), VertexSet::from_iter([1, 3]));
        assert_eq!(bordering_vertices(&k(4)).unwrap(), VertexSet::full(4));
        assert_eq!(bordering_vertices(&barbell()).unwrap(), VertexSet::from_iter([0, 1]));
    }

    #[test]
    fn sides_examples() {
        let p5 = path(5);
        let s = sides(&p5, 2).unwrap();
        assert_eq!(s, vec![VertexSet::singleton(0), VertexSet::singleton(4)]);
        let s = sides(&p5, 1).unwrap();
        assert_eq!(s, vec![VertexSet::from_iter([3, 4])]);
        let s = sides(&k(3), 0).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn coating_examples() {
        let p5 = path(5);
        assert_eq!(coating(&p5, VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(coating(&p5, VertexSet::from_iter([1, 3])), VertexSet::from_iter([1, 2, 3]));
        assert_eq!(coating(&k(4), VertexSet::from_iter([0, 1])), VertexSet::from_iter([0, 1]));
    }

    #[test]
    fn span_examples() {
        let p5 = path(5);
        assert_eq!(span(&p5, VertexSet::from_iter([1, 2, 3])), p5.vertex_set());
        assert_eq!(span(&p5, VertexSet::EMPTY), VertexSet::EMPTY);
        let cat = caterpillar1();
        assert_eq!(span(&cat, VertexSet::singleton(2)), VertexSet::from_iter([0, 1, 2, 3]));
    }

    #[test]
    fn bulk_examples() {
        assert_eq!(bulk(&k(4)).unwrap(), VertexSet::full(4));
        assert_eq!(bulk(&caterpillar1()).unwrap(), VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(bulk(&barbell()).unwrap(), barbell().vertex_set());
    }

    #[test]
    fn flank_examples() {
        let (f1, f2) = flanks(&caterpillar2()).unwrap();
        assert_eq!(f1, VertexSet::from_iter([5, 6]));
        assert!(f2.is_empty());

        let (f1, f2) = flanks(&double_tail()).unwrap();
        assert_eq!(f1.len(), 1);
        assert_eq!(f2.len(), 1);
        assert_eq!(f1.union(f2), VertexSet::from_iter([5, 6]));

        let (f1, f2) = flanks(&barbell()).unwrap();
        assert!(f1.is_empty() && f2.is_empty());
    }

    #[test]
    fn one_sided_class_examples() {
        let (a1, a2) = one_sided_max_classes(&path(5)).unwrap();
        assert_eq!(a1.union(a2), VertexSet::from_iter([1, 3]));
        assert_eq!(a1.len(), 1);

        let (a1, a2) = one_sided_max_classes(&barbell()).unwrap();
        assert_eq!(a1.union(a2), VertexSet::from_iter([0, 1]));

        let (a1, a2) = one_sided_max_classes(&caterpillar2()).unwrap();
        assert_eq!(a1, VertexSet::singleton(2));
        assert!(a2.is_empty());
    }

    #[test]
    fn outsider_examples() {
        let (o1, o2) = outsiders(&path(5)).unwrap();
        assert_eq!(o1.union(o2), VertexSet::from_iter([0, 4]));
        assert_eq!(o1.len(), 1);

        let (o1, o2) = outsiders(&barbell()).unwrap();
        assert_eq!(o1.union(o2), VertexSet::from_iter([2, 3, 4, 5]));
        assert_eq!(o1.len(), 2);

        let (o1, o2) = outsiders(&caterpillar2()).unwrap();
        assert_eq!(o1, VertexSet::from_iter([0, 1, 3]));
        assert!(o2.is_empty());
    }

    #[test]
    fn a_infinity_examples() {
        let (c1, c2) = a_infinity(&path(5)).unwrap();
        assert_eq!(c1, VertexSet::from_iter([1, 2, 3]));
        assert_eq!(c2, c1);

        let (c1, c2) = a_infinity(&barbell()).unwrap();
        assert_eq!(c1.union(c2), VertexSet::from_iter([0, 1]));
        assert_ne!(c1, c2);
    }

    #[test]
    fn structure_report_examples() {
        let r = structure_report(&path(5)).unwrap();
        assert_eq!(r.bulk, VertexSet::full(5));
        assert_eq!(r.flank_size_multiset(), (0, 0));
        assert_eq!(r.outsider_size_multiset(), (1, 1));

        let r = structure_report(&caterpillar2()).unwrap();
        assert_eq!(r.bulk, VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(r.flank_size_multiset(), (0, 2));
        assert_eq!(r.one_sided_classes.0, VertexSet::singleton(2));
        assert_eq!(r.outsiders.0, VertexSet::from_iter([0, 1, 3]));

        let r = structure_report(&double_tail()).unwrap();
        assert_eq!(r.bulk, VertexSet::from_iter([0, 1, 2]));
        assert_eq!(r.flank_size_multiset(), (1, 1));
        assert_eq!(r.one_sided_classes, (VertexSet::EMPTY, VertexSet::EMPTY));
        assert_eq!(r.outsiders, (VertexSet::EMPTY, VertexSet::EMPTY));
    }

    #[test]
    fn coating_matches_recursive_path_enumeration() {
        // independent oracle: depth-first enumeration of induced paths
        fn all_induced_path_vertices(g: &Graph, s: VertexSet) -> VertexSet {
            fn extend(
                g: &Graph,
                s: VertexSet,
                path: &mut Vec<usize>,
                used: VertexSet,
                out: &mut VertexSet,
            ) {
                let last = *path.last().unwrap();
                if s.contains(last) {
                    for &v in path.iter() {
                        out.insert(v);
                    }
                }
                for next in g.nbrs(last).minus(used).iter() {
                    let touches_earlier =
                        path[..path.len() - 1].iter().any(|&p| g.has_edge(p, next));
                    if !touches_earlier {
                        path.push(next);
                        extend(g, s, path, used.union(VertexSet::singleton(next)), out);
                        path.pop();
                    }
                }
            }
            let mut out = VertexSet::EMPTY;
            for v in s.iter() {
                let mut path = vec![v];
                extend(g, s, &mut path, VertexSet::singleton(v), &mut out);
            }
            out
        }

        for g in [path(5), caterpillar1(), caterpillar2(), double_tail(), barbell(), k(4)] {
            for bits in 0u32..(1u32 << g.n()) {
                let s = VertexSet(bits);
                assert_eq!(
                    coating(&g, s),
                    all_induced_path_vertices(&g, s),
                    "coating mismatch on {:?} with {:?}",
                    g,
                    s
                );
            }
        }
    }
}
