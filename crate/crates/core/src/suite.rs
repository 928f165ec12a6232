//! Registry of lemma-backed invariants checked exhaustively over all small
//! connected interval graphs. Each invariant returns None on (possibly
//! vacuous) success and a human-readable counterexample description on
//! failure.

use crate::canon::certificate_unchecked;
use crate::deck::{self, Deck};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::interval::{
    compact_representation, has_linearly_ordered_neighborhoods, is_clean_clique_separation,
    is_tidy, is_tidy_brute, tidy_representation, IntervalRepresentation, Separation,
};
use crate::oracle::Invariant;
use crate::structure;

pub fn registry() -> Vec<(&'static str, Invariant)> {
    vec![
        ("twin-max-degree-vertices-are-false-twins", twin_max_degree_false_twins),
        ("max-degree-order-monotone-on-tidy", max_degree_order_monotone),
        ("span-neighborhood-equals-coating-neighborhood", span_closure),
        ("span-of-max-degree-set-is-interval-hull", span_hull),
        ("sides-at-most-two-classes", sides_at_most_two),
        ("flank-is-side-with-consistent-labeling", flank_is_side),
        ("side-versus-flank-equivalence", side_versus_flank),
        ("connected-max-degree-set-controls-bulk", connected_vmaxdeg),
        ("flanks-give-clean-clique-separations", flanks_clean_separation),
        ("outsider-and-span-partitions-are-clean", tilde_clean_separation),
        ("clean-separations-have-linearly-ordered-neighborhoods", clean_implies_linear),
        ("tidy-representations-exist-by-shrinking", tidy_existence),
        ("tidy-decision-matches-brute-force", tidy_matches_brute),
        ("one-sided-classes-complement-flanks", extremal_classes),
        ("outsider-degree-and-max-degree-neighbors", outsider_properties),
        ("nonempty-one-sided-class-has-outsiders", a_nonempty_o_nonempty),
        ("deleting-outsider-from-big-class-steals-flank", steal_outsider),
        ("single-outsider-has-rivet-vertex", outsider_rivet),
        ("outsiders-match-interval-endpoints", outsider_interval_endpoints),
        ("induced-paths-order-along-intervals", paths_in_interval_graphs),
        ("deck-degree-data-matches-graph", deck_degrees),
        ("deck-only-e-matches-flank-deletions", deck_e_recognizable),
        ("every-flank-represented-in-e", deck_flank_represented),
        ("deck-only-no-flank-decision", deck_no_flanks),
        ("deck-only-flank-sizes", deck_flank_sizes),
        ("deck-only-big-outsider-cards", deck_q2),
        ("deck-only-single-outsider-cards", deck_q1),
        ("deck-only-outsider-sizes", deck_outsider_sizes),
        ("separation-parts-reassemble-to-the-graph", assembly_roundtrip),
        ("distant-vertex-recovery-matches-truth", distant_vertex_recovery),
    ]
}

/// G - v without relabeling: the surviving vertices keep their identities.
fn delete_keep_labels(g: &Graph, v: usize) -> (Graph, Vec<usize>) {
    g.induced(g.vertex_set().minus(VertexSet::singleton(v)))
}

fn map_set_back(new_set: VertexSet, old: &[usize]) -> VertexSet {
    VertexSet::from_iter(new_set.iter().map(|i| old[i]))
}

/// The clean clique separations the structure theory constructs:
/// partitions of the flanks, the outsider classes, and the spans of the
/// one-sided classes, whenever their hypotheses hold.
fn structural_separations(g: &Graph) -> Result<Vec<(&'static str, Separation)>> {
    let mut out = Vec::new();
    let (f1, f2) = structure::flanks(g)?;
    if !f1.is_empty() && !f2.is_empty() {
        for f in [f1, f2] {
            let (s, c, b) = g.neighborhood_partition(f)?;
            out.push(("flank", Separation::new(s, c, b)));
        }
    }
    if g.has_universal_vertex() {
        return Ok(out);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    for a in [a1, a2] {
        if a.is_empty() {
            continue;
        }
        let sp = structure::span(g, a);
        if g.closed_nbrs_set(sp) != g.vertex_set() {
            let (s, c, b) = g.neighborhood_partition(sp)?;
            out.push(("span", Separation::new(s, c, b)));
        }
        let o = structure::outsiders_of(g, a);
        // the outsider partition is clean in the flankless case
        if !o.is_empty() && structure::flank_vertices(g)?.is_empty() {
            let (s, c, b) = g.neighborhood_partition(o)?;
            out.push(("outsider", Separation::new(s, c, b)));
        }
    }
    Ok(out)
}

fn twin_max_degree_false_twins(g: &Graph) -> Result<Option<String>> {
    if g.edge_count() == 0 {
        return Ok(None);
    }
    let vmax = g.max_degree_vertices();
    for u in vmax.iter() {
        for v in vmax.iter() {
            if u < v && g.are_twins(u, v) && !g.has_edge(u, v) {
                return Ok(Some(format!("{} and {} are non-adjacent max-degree twins", u, v)));
            }
        }
    }
    Ok(None)
}

fn max_degree_order_monotone(g: &Graph) -> Result<Option<String>> {
    let rep = compact_representation(g)?;
    let order = structure::max_degree_order(g, g.max_degree_vertices())?;
    let hulls: Vec<(i64, i64)> = order
        .classes
        .iter()
        .map(|c| {
            let v = c.min_vertex().unwrap();
            (rep.left(v), rep.right(v))
        })
        .collect();
    let fwd = hulls.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1);
    let rev = hulls.windows(2).all(|w| w[0].0 >= w[1].0 && w[0].1 >= w[1].1);
    if fwd || rev {
        Ok(None)
    } else {
        Ok(Some(format!("class hulls not monotone: {:?}", hulls)))
    }
}

fn span_subjects(g: &Graph) -> Vec<VertexSet> {
    let mut subjects: Vec<VertexSet> = Vec::new();
    if g.n() <= 6 {
        subjects.extend((1u32..(1u32 << g.n())).map(VertexSet));
    } else {
        subjects.extend(g.vertices().map(VertexSet::singleton));
        for u in g.vertices() {
            for v in (u + 1)..g.n() {
                subjects.push(VertexSet::from_iter([u, v]));
            }
        }
        subjects.push(g.max_degree_vertices());
        if let Ok((a1, a2)) = structure::one_sided_max_classes(g) {
            subjects.push(a1);
            subjects.push(a2);
        }
        subjects.retain(|s| !s.is_empty());
    }
    subjects
}

fn span_closure(g: &Graph) -> Result<Option<String>> {
    for s in span_subjects(g) {
        let coat = structure::coating(g, s);
        let sp = structure::span(g, s);
        if !s.is_subset_of(coat) || !coat.is_subset_of(sp) {
            return Ok(Some(format!("chain violated for {:?}", s)));
        }
        if g.closed_nbrs_set(sp) != g.closed_nbrs_set(coat) {
            return Ok(Some(format!("N[span] != N[coating] for {:?}", s)));
        }
        if !g.is_connected_set(sp) {
            return Ok(Some(format!("span of {:?} is disconnected", s)));
        }
    }
    Ok(None)
}

fn span_hull(g: &Graph) -> Result<Option<String>> {
    let rep = compact_representation(g)?;
    let vmax = g.max_degree_vertices();
    let sp = structure::span(g, vmax);
    let (hl, hr) = rep.hull(vmax).unwrap();
    let from_rep = VertexSet::from_iter(
        g.vertices().filter(|&v| rep.left(v) >= hl && rep.right(v) <= hr),
    );
    if sp == from_rep {
        Ok(None)
    } else {
        Ok(Some(format!("span {:?} vs hull-set {:?}", sp, from_rep)))
    }
}

fn sides_at_most_two(g: &Graph) -> Result<Option<String>> {
    let delta = g.max_degree();
    for s in g.vertices() {
        if g.degree(s) + 1 < delta {
            continue;
        }
        let sides = structure::sides(g, s)?;
        if sides.len() > 2 {
            return Ok(Some(format!("vertex {} has {} sides", s, sides.len())));
        }
    }
    Ok(None)
}

fn flank_is_side(g: &Graph) -> Result<Option<String>> {
    let (f1, f2) = structure::flanks(g)?;
    let vmax = g.max_degree_vertices();
    // label each b's sides so that F1 <= side1 and F2 <= side2, and check the
    // intersections recover the flanks exactly
    let mut inter1 = g.vertex_set();
    let mut inter2 = g.vertex_set();
    for b in vmax.iter() {
        let sides = structure::sides(g, b)?;
        let mut s1 = VertexSet::EMPTY;
        let mut s2 = VertexSet::EMPTY;
        match sides.len() {
            0 => {}
            1 => {
                let s = sides[0];
                if !f1.is_empty() && f1.is_subset_of(s) {
                    s1 = s;
                } else if !f2.is_empty() && f2.is_subset_of(s) {
                    s2 = s;
                } else if f1.is_empty() {
                    s1 = s;
                } else {
                    s2 = s;
                }
            }
            2 => {
                let (x, y) = (sides[0], sides[1]);
                let fits = |f: VertexSet, s: VertexSet| f.is_empty() || f.is_subset_of(s);
                if fits(f1, x) && fits(f2, y) {
                    s1 = x;
                    s2 = y;
                } else if fits(f1, y) && fits(f2, x) {
                    s1 = y;
                    s2 = x;
                } else {
                    return Ok(Some(format!("sides of {} cannot be labeled over flanks", b)));
                }
            }
            _ => return Ok(Some(format!("vertex {} has more than two sides", b))),
        }
        inter1 = inter1.intersect(s1);
        inter2 = inter2.intersect(s2);
    }
    if inter1 != f1 || inter2 != f2 {
        // the labeling freedom is symmetric; accept the swapped match
        if inter1 == f2 && inter2 == f1 {
            return Ok(None);
        }
        return Ok(Some(format!(
            "side intersections {:?}/{:?} differ from flanks {:?}/{:?}",
            inter1, inter2, f1, f2
        )));
    }
    Ok(None)
}

fn side_versus_flank(g: &Graph) -> Result<Option<String>> {
    let (f1, f2) = structure::flanks(g)?;
    let bordering = structure::bordering_vertices(g)?;
    let vmax = g.max_degree_vertices();
    for v in vmax.iter() {
        for m in structure::sides(g, v)? {
            let is_flank = m == f1 || m == f2;
            let closed = g.closed_nbrs_set(m);
            let cond2 = closed.intersect(vmax).is_empty();
            let cond3 =
                bordering.contains(v) && closed.intersect(bordering).is_empty();
            if is_flank != cond2 || cond2 != cond3 {
                return Ok(Some(format!(
                    "side {:?} of {}: flank={} nbhd-free={} bordering-cond={}",
                    m, v, is_flank, cond2, cond3
                )));
            }
        }
    }
    // every flank is a side of some bordering vertex
    for f in [f1, f2] {
        if f.is_empty() {
            continue;
        }
        let witnessed = bordering
            .iter()
            .any(|b| structure::sides(g, b).map(|s| s.contains(&f)).unwrap_or(false));
        if !witnessed {
            return Ok(Some(format!("flank {:?} is no side of a bordering vertex", f)));
        }
    }
    Ok(None)
}

fn connected_vmaxdeg(g: &Graph) -> Result<Option<String>> {
    let vmax = g.max_degree_vertices();
    let b = structure::bulk(g)?;
    if g.is_connected_set(vmax) && g.closed_nbrs_set(b) != g.closed_nbrs_set(vmax) {
        return Ok(Some("N[bulk] != N[V_max] though V_max is connected".into()));
    }
    // monotonicity under induced subgraphs keeping the maximum degree;
    // exhaustive over subsets for tiny n, vertex deletions otherwise
    let delta = g.max_degree();
    let check_sub = |keep: VertexSet| -> Option<String> {
        let (h, old) = g.induced(keep);
        if h.max_degree() != delta {
            return None;
        }
        let nb_h = map_set_back(h.closed_nbrs_set(structure::bulk_unchecked(&h)), &old);
        if !nb_h.is_subset_of(g.closed_nbrs_set(structure::bulk_unchecked(g))) {
            return Some(format!("N[bulk] not monotone for {:?}", keep));
        }
        None
    };
    if g.n() <= 6 {
        for bits in 1u32..(1u32 << g.n()) {
            if let Some(m) = check_sub(VertexSet(bits)) {
                return Ok(Some(m));
            }
        }
    } else {
        for v in g.vertices() {
            if let Some(m) = check_sub(g.vertex_set().minus(VertexSet::singleton(v))) {
                return Ok(Some(m));
            }
        }
    }
    // deleting a flank vertex preserves the bulk neighborhood
    for v in structure::flank_vertices(g)?.iter() {
        let (h, old) = delete_keep_labels(g, v);
        let nb_h = map_set_back(h.closed_nbrs_set(structure::bulk_unchecked(&h)), &old);
        if nb_h != g.closed_nbrs_set(structure::bulk_unchecked(g)) {
            return Ok(Some(format!("deleting flank vertex {} moved N[bulk]", v)));
        }
    }
    Ok(None)
}

fn flanks_clean_separation(g: &Graph) -> Result<Option<String>> {
    let (f1, f2) = structure::flanks(g)?;
    if f1.is_empty() || f2.is_empty() {
        return Ok(None);
    }
    let r1 = g.open_nbrs_set(f1);
    let r2 = g.open_nbrs_set(f2);
    if !r1.intersect(r2).is_empty() {
        return Ok(Some("flank neighborhoods intersect".into()));
    }
    for (f, r) in [(f1, r1), (f2, r2)] {
        if !g.is_clique(r) {
            return Ok(Some(format!("N({:?}) is not a clique", f)));
        }
        let other = if f == f1 { f2 } else { f1 };
        if !g.closed_nbrs_set(r).intersect(other).is_empty() {
            return Ok(Some("flank neighborhood touches the other flank".into()));
        }
        let (s, c, b) = g.neighborhood_partition(f)?;
        if !is_clean_clique_separation(g, &Separation::new(s, c, b))? {
            return Ok(Some(format!("partition of flank {:?} is not clean", f)));
        }
    }
    Ok(None)
}

fn tilde_clean_separation(g: &Graph) -> Result<Option<String>> {
    for (kind, sep) in structural_separations(g)? {
        if kind == "flank" {
            continue;
        }
        if !is_clean_clique_separation(g, &sep)? {
            return Ok(Some(format!("{} separation {:?} is not clean", kind, sep)));
        }
    }
    Ok(None)
}

fn clean_implies_linear(g: &Graph) -> Result<Option<String>> {
    for (_, sep) in structural_separations(g)? {
        if is_clean_clique_separation(g, &sep)?
            && !has_linearly_ordered_neighborhoods(g, &sep)?
        {
            return Ok(Some(format!("{:?} is clean but not linearly ordered", sep)));
        }
    }
    Ok(None)
}

/// Greedily stretches intervals of a representation without changing the
/// realized graph, giving the tidy-restoration code something to chew on.
fn sloppy_representation(g: &Graph) -> Result<IntervalRepresentation> {
    let rep = compact_representation(g)?;
    let mut wide = IntervalRepresentation {
        intervals: rep.intervals.iter().map(|&(l, r)| (3 * l, 3 * r)).collect(),
    };
    for v in g.vertices() {
        for _ in 0..2 {
            let mut stretched = wide.clone();
            stretched.intervals[v].0 -= 1;
            if stretched.realizes(g) {
                wide = stretched;
            }
            let mut stretched = wide.clone();
            stretched.intervals[v].1 += 1;
            if stretched.realizes(g) {
                wide = stretched;
            }
        }
    }
    Ok(wide)
}

fn tidy_existence(g: &Graph) -> Result<Option<String>> {
    let compact = compact_representation(g)?;
    if !is_tidy(g, &compact)? {
        return Ok(Some("compact representation is not tidy".into()));
    }
    let sloppy = sloppy_representation(g)?;
    let tidied = tidy_representation(&sloppy);
    if !tidied.realizes(g) {
        return Ok(Some("tidied representation realizes a different graph".into()));
    }
    if !is_tidy(g, &tidied)? {
        return Ok(Some("tidied representation fails the tidy predicate".into()));
    }
    for v in g.vertices() {
        if tidied.left(v) < sloppy.left(v) || tidied.right(v) > sloppy.right(v) {
            return Ok(Some(format!("interval of {} grew while tidying", v)));
        }
    }
    Ok(None)
}

fn tidy_matches_brute(g: &Graph) -> Result<Option<String>> {
    for rep in [compact_representation(g)?, sloppy_representation(g)?] {
        if is_tidy(g, &rep)? != is_tidy_brute(g, &rep)? {
            return Ok(Some("threshold tidy check disagrees with brute force".into()));
        }
    }
    Ok(None)
}

fn extremal_classes(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    let (f1, f2) = structure::flanks(g)?;
    let class_count = usize::from(!a1.is_empty()) + usize::from(!a2.is_empty());
    let flank_count = usize::from(!f1.is_empty()) + usize::from(!f2.is_empty());
    if class_count + flank_count != 2 {
        return Ok(Some(format!(
            "{} one-sided classes and {} flanks",
            class_count, flank_count
        )));
    }
    for a in [a1, a2] {
        for u in a.iter() {
            if g.twin_class_of(u).intersect(a) != a {
                return Ok(Some(format!("{:?} is not a full twin class", a)));
            }
        }
    }
    Ok(None)
}

fn outsider_properties(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    let vmax = g.max_degree_vertices();
    for a in [a1, a2] {
        if a.is_empty() {
            continue;
        }
        for o in structure::outsiders_of(g, a).iter() {
            if g.degree(o) >= g.max_degree() {
                return Ok(Some(format!("outsider {} has maximum degree", o)));
            }
            if g.nbrs(o).intersect(vmax) != a {
                return Ok(Some(format!(
                    "outsider {} sees {:?} instead of {:?}",
                    o,
                    g.nbrs(o).intersect(vmax),
                    a
                )));
            }
        }
    }
    Ok(None)
}

fn a_nonempty_o_nonempty(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    for a in [a1, a2] {
        if !a.is_empty() && structure::outsiders_of(g, a).is_empty() {
            return Ok(Some(format!("class {:?} has no outsiders", a)));
        }
    }
    Ok(None)
}

fn steal_outsider(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    let vmax = g.max_degree_vertices();
    let flank_count = {
        let (f1, f2) = structure::flanks(g)?;
        usize::from(!f1.is_empty()) + usize::from(!f2.is_empty())
    };
    for (a, other_a) in [(a1, a2), (a2, a1)] {
        let o = structure::outsiders_of(g, a);
        if o.len() < 2 || vmax == a {
            continue;
        }
        let other_o = structure::outsiders_of(g, other_a);
        for v in o.iter() {
            let (h, old) = delete_keep_labels(g, v);
            let h_flanks = structure::flank_classes_unchecked(&h);
            if h_flanks.len() != flank_count + 1 {
                return Ok(Some(format!(
                    "deleting outsider {} gave {} flanks instead of {}",
                    v,
                    h_flanks.len(),
                    flank_count + 1
                )));
            }
            let new_flank_union: VertexSet = h_flanks
                .iter()
                .fold(VertexSet::EMPTY, |acc, &f| acc.union(map_set_back(f, &old)));
            if !o.minus(VertexSet::singleton(v)).is_subset_of(new_flank_union) {
                return Ok(Some(format!(
                    "remaining outsiders of {:?} not inside the new flank",
                    a
                )));
            }
            let h_outsiders: VertexSet = structure::one_sided_classes_lenient(&h)
                .into_iter()
                .map(|cl| structure::outsiders_of(&h, cl))
                .fold(VertexSet::EMPTY, |acc, x| acc.union(x));
            if map_set_back(h_outsiders, &old) != other_o {
                return Ok(Some(format!(
                    "outsiders after deleting {} are {:?}, expected {:?}",
                    v,
                    map_set_back(h_outsiders, &old),
                    other_o
                )));
            }
        }
    }
    Ok(None)
}

fn outsider_rivet(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    for a in [a1, a2] {
        if a.is_empty() {
            continue;
        }
        let o = structure::outsiders_of(g, a);
        if o.len() != 1 {
            continue;
        }
        let o_v = o.min_vertex().unwrap();
        let sp = structure::span(g, a);
        let tilde1 = g.open_nbrs_set(sp);
        let target = g.closed_nbrs_set(a).minus(o);
        let rivet = tilde1.iter().find(|&x| {
            g.degree(x) == g.max_degree() && target.is_subset_of(g.closed_nbrs(x))
        });
        if rivet.is_none() {
            return Ok(Some(format!("no rivet vertex for class {:?}", a)));
        }
        let (h, old) = delete_keep_labels(g, o_v);
        if h.max_degree() != g.max_degree() {
            return Ok(Some(format!("max degree dropped deleting outsider {}", o_v)));
        }
        let h_flank: VertexSet = structure::flank_classes_unchecked(&h)
            .iter()
            .fold(VertexSet::EMPTY, |acc, &f| acc.union(map_set_back(f, &old)));
        if h_flank != structure::flank_vertices(g)? {
            return Ok(Some(format!("flanks changed deleting outsider {}", o_v)));
        }
    }
    Ok(None)
}

fn outsider_interval_endpoints(g: &Graph) -> Result<Option<String>> {
    if g.has_universal_vertex() {
        return Ok(None);
    }
    let (a1, a2) = structure::one_sided_max_classes(g)?;
    if a1.is_empty() {
        return Ok(None);
    }
    let rep = tidy_representation(&compact_representation(g)?);
    let ends_of = |a: VertexSet| -> VertexSet {
        // vertices strictly before every neighbor of Span(a), on either side
        let sp = structure::span(g, a);
        let tilde1 = g.open_nbrs_set(sp);
        let min_l = tilde1.iter().map(|u| rep.left(u)).min();
        let max_r = tilde1.iter().map(|u| rep.right(u)).max();
        let mut out = VertexSet::EMPTY;
        if let (Some(min_l), Some(max_r)) = (min_l, max_r) {
            let left: VertexSet =
                VertexSet::from_iter(g.vertices().filter(|&v| rep.right(v) < min_l));
            let right: VertexSet =
                VertexSet::from_iter(g.vertices().filter(|&v| rep.left(v) > max_r));
            // the class's side is whichever end is nonempty and matches
            out = if structure::outsiders_of(g, a) == left { left } else { right };
        }
        out
    };
    for a in [a1, a2] {
        if a.is_empty() {
            continue;
        }
        if ends_of(a) != structure::outsiders_of(g, a) {
            return Ok(Some(format!(
                "outsiders of {:?} do not match the endpoint characterization",
                a
            )));
        }
    }
    Ok(None)
}

fn paths_in_interval_graphs(g: &Graph) -> Result<Option<String>> {
    let rep = compact_representation(g)?;
    let vmax = g.max_degree_vertices();
    let n = g.n();
    for bits in 1u32..(1u32 << n) {
        let p = VertexSet(bits);
        if p.len() < 3 {
            continue;
        }
        let path = match ordered_induced_path(g, p) {
            Some(path) => path,
            None => continue,
        };
        let (a, b) = (path[0], path[path.len() - 1]);
        let ordered: Vec<usize> = if rep.right(a) <= rep.right(b) {
            path.clone()
        } else {
            path.iter().rev().copied().collect()
        };
        for i in 0..ordered.len().saturating_sub(2) {
            let (v1, v2, v3) = (ordered[i], ordered[i + 1], ordered[i + 2]);
            if !(rep.left(v2) <= rep.right(v1) && rep.right(v1) < rep.left(v3)) {
                return Ok(Some(format!("path {:?} violates the interval order", ordered)));
            }
        }
        if vmax.contains(a) && vmax.contains(b) && a != b {
            let (hl, hr) = rep.hull(VertexSet::from_iter([a, b])).unwrap();
            for &w in &path {
                if rep.left(w) < hl || rep.right(w) > hr {
                    return Ok(Some(format!(
                        "vertex {} of max-degree path {:?} leaves the hull",
                        w, path
                    )));
                }
            }
        }
    }
    Ok(None)
}

fn ordered_induced_path(g: &Graph, p: VertexSet) -> Option<Vec<usize>> {
    let ends: Vec<usize> = p.iter().filter(|&v| g.nbrs(v).intersect(p).len() == 1).collect();
    if ends.len() != 2
        || !p.iter().all(|v| (1..=2).contains(&g.nbrs(v).intersect(p).len()))
        || !g.is_connected_set(p)
    {
        return None;
    }
    let mut path = vec![ends[0]];
    let mut used = VertexSet::singleton(ends[0]);
    while path.len() < p.len() {
        let next = g.nbrs(*path.last().unwrap()).intersect(p).minus(used).min_vertex()?;
        path.push(next);
        used.insert(next);
    }
    Some(path)
}

fn deck_degrees(g: &Graph) -> Result<Option<String>> {
    let ctx = deck::DeckCtx::new(&Deck::of(g))?;
    let mut truth: Vec<usize> = g.degree_sequence();
    truth.sort_unstable();
    if ctx.degree_multiset != truth {
        return Ok(Some("degree multiset mismatch".into()));
    }
    for v in g.vertices() {
        let cert = certificate_unchecked(&g.remove_vertex(v));
        let info = ctx.cards.iter().find(|c| c.cert == cert).unwrap();
        if info.degree != g.degree(v) {
            return Ok(Some(format!("degree of {} misreconstructed", v)));
        }
        let mut nd: Vec<usize> = g.nbrs(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        if info.neighbor_degrees != nd {
            return Ok(Some(format!("neighbor degrees of {} misreconstructed", v)));
        }
    }
    Ok(None)
}

fn deck_e_recognizable(g: &Graph) -> Result<Option<String>> {
    let d = Deck::of(g);
    let deck_only = deck::multiset_e(&d)?;
    let from_graph = deck::direct::multiset_e_of(g)?;
    if deck_only != from_graph {
        return Ok(Some(format!("E deck-only {:?} vs direct {:?}", deck_only, from_graph)));
    }
    // membership only comes from flank deletions
    let f = structure::flank_vertices(g)?;
    for v in g.vertices() {
        if f.contains(v) {
            continue;
        }
        let cert = certificate_unchecked(&g.remove_vertex(v));
        let card = g.remove_vertex(v);
        if card.is_connected()
            && card.max_degree() == g.max_degree()
            && deck_only.iter().any(|(c, _)| *c == cert)
        {
            // a non-flank deletion may share a certificate with a flank
            // deletion only if some flank deletion realizes it
            let realized_by_flank = f.iter().any(|u| {
                certificate_unchecked(&g.remove_vertex(u)) == cert
            });
            if !realized_by_flank {
                return Ok(Some(format!("non-flank vertex {} produced a card in E", v)));
            }
        }
    }
    Ok(None)
}

fn deck_flank_represented(g: &Graph) -> Result<Option<String>> {
    let (f1, f2) = structure::flanks(g)?;
    if f1.is_empty() {
        return Ok(None);
    }
    let e = deck::direct::multiset_e_of(g)?;
    for f in [f1, f2] {
        if f.is_empty() {
            continue;
        }
        let represented = f.iter().any(|v| {
            let cert = certificate_unchecked(&g.remove_vertex(v));
            e.iter().any(|(c, _)| *c == cert)
        });
        if !represented {
            return Ok(Some(format!("flank {:?} has no card in E", f)));
        }
    }
    Ok(None)
}

fn deck_no_flanks(g: &Graph) -> Result<Option<String>> {
    let deck_only = deck::has_no_flanks(&Deck::of(g))?;
    let truth = deck::direct::has_no_flanks_of(g)?;
    if deck_only != truth {
        return Ok(Some(format!("deck-only {} vs truth {}", deck_only, truth)));
    }
    Ok(None)
}

fn deck_flank_sizes(g: &Graph) -> Result<Option<String>> {
    let deck_only = deck::flank_sizes(&Deck::of(g))?;
    let truth = deck::direct::flank_sizes_of(g)?;
    if deck_only != truth {
        return Ok(Some(format!("deck-only {:?} vs truth {:?}", deck_only, truth)));
    }
    Ok(None)
}

fn outsider_preconditions_hold(g: &Graph) -> Result<bool> {
    if g.has_universal_vertex() {
        return Ok(false);
    }
    let (small, _) = deck::direct::flank_sizes_of(g)?;
    Ok(small == 0)
}

fn deck_q2(g: &Graph) -> Result<Option<String>> {
    if !outsider_preconditions_hold(g)? {
        return Ok(None);
    }
    let deck_only = deck::q_ge2_cards(&Deck::of(g))?;
    let truth = deck::direct::q_ge2_of(g)?;
    if deck_only != truth {
        return Ok(Some(format!("deck-only {:?} vs truth {:?}", deck_only, truth)));
    }
    Ok(None)
}

fn deck_q1(g: &Graph) -> Result<Option<String>> {
    if !outsider_preconditions_hold(g)? {
        return Ok(None);
    }
    let deck_only = deck::q1_cards(&Deck::of(g))?;
    let truth = deck::direct::q1_of(g)?;
    if deck_only != truth {
        return Ok(Some(format!("deck-only {:?} vs truth {:?}", deck_only, truth)));
    }
    Ok(None)
}

fn deck_outsider_sizes(g: &Graph) -> Result<Option<String>> {
    if !outsider_preconditions_hold(g)? {
        return Ok(None);
    }
    let deck_only = deck::outsider_sizes(&Deck::of(g))?;
    let truth = deck::direct::outsider_sizes_of(g)?;
    if deck_only != truth {
        return Ok(Some(format!("deck-only {:?} vs truth {:?}", deck_only, truth)));
    }
    Ok(None)
}

fn assembly_roundtrip(g: &Graph) -> Result<Option<String>> {
    for (kind, sep) in structural_separations(g)? {
        if !is_clean_clique_separation(g, &sep)? {
            continue;
        }
        let (ha, hb) = crate::annotated::annotated_parts(g, &sep)?;
        let glued = match crate::annotated::assemble(&ha, &hb) {
            Ok(glued) => glued,
            Err(e) => return Ok(Some(format!("{} separation failed to assemble: {}", kind, e))),
        };
        if !crate::canon::are_isomorphic(&glued, g)? {
            return Ok(Some(format!("{} separation reassembled to a different graph", kind)));
        }
    }
    Ok(None)
}

fn distant_vertex_recovery(g: &Graph) -> Result<Option<String>> {
    for (_, sep) in structural_separations(g)? {
        if !is_clean_clique_separation(g, &sep)? {
            continue;
        }
        // the lemma recovers the A-side from a deletion on the B-side
        for (a, c, b) in [(sep.a, sep.c, sep.b), (sep.b, sep.c, sep.a)] {
            if b.len() < 2 {
                continue;
            }
            // pick b-side vertices with connected remainder and minimal
            // separator contact
            let candidates: Vec<usize> = b
                .iter()
                .filter(|&v| {
                    let (h, _) = delete_keep_labels(g, v);
                    h.is_connected()
                })
                .collect();
            let min_contact = candidates
                .iter()
                .map(|&v| g.nbrs(v).intersect(c).len())
                .min();
            let Some(min_contact) = min_contact else { continue };
            for &bv in &candidates {
                if g.nbrs(bv).intersect(c).len() != min_contact {
                    continue;
                }
                let truth = crate::annotated::annotated_parts(
                    g,
                    &Separation::new(a, c, b),
                )?
                .0;
                let (card, old) = delete_keep_labels(g, bv);
                let to_new = |set: VertexSet| {
                    VertexSet::from_iter(
                        set.iter().map(|v| old.iter().position(|&o| o == v).unwrap()),
                    )
                };
                let mut nbr_degs: Vec<usize> =
                    g.nbrs(bv).iter().map(|u| g.degree(u)).collect();
                nbr_degs.sort_unstable();
                let recovered = crate::annotated::distant_vertex_recover(
                    &card,
                    to_new(a),
                    to_new(c),
                    &nbr_degs,
                )?;
                if !crate::annotated::annotated_isomorphic(&truth, &recovered) {
                    return Ok(Some(format!(
                        "recovery from deleting {} disagrees with the true part",
                        bv
                    )));
                }
            }
        }
    }
    Ok(None)
}
