//! Deck-to-graph reconstruction for interval graphs: dispatch on the
//! reconstructed flank sizes, then the case analyses for two flanks, one
//! flank, and no flanks, with fast paths for disconnected graphs and graphs
//! with a universal vertex.
//!
//! Every case builds its candidates through the deck-identified cards and the
//! annotated-part machinery; the result invariant (the output's deck equals
//! the input deck) is enforced at the end. Where the case analysis leaves a
//! choice open (which twin to attach, which of two symmetric flank graphs is
//! which), all readings enter the candidate set and the deck filter keeps the
//! unique isomorphism class the uniqueness theorem guarantees.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::annotated::{annotated_isomorphic, assemble, distant_vertex_recover, AnnotatedGraph};
use crate::canon::{certificate_unchecked, Certificate};
use crate::deck::{
    flank_sizes_ctx, multiset_e_ctx, outsider_sizes_ctx, q1_cards_ctx, q_ge2_cards_ctx, Card,
    CardInfo, Deck, DeckCtx,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::structure;

#[derive(Debug, Clone)]
pub struct ReconstructionResult {
    pub graph: Graph,
    pub method: String,
    pub trace: Vec<String>,
}

#[derive(Serialize)]
struct ResultJson {
    g6: String,
    method: String,
    trace: Vec<String>,
}

impl ReconstructionResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ResultJson {
            g6: certificate_unchecked(&self.graph).0,
            method: self.method.clone(),
            trace: self.trace.clone(),
        })
        .unwrap()
    }
}

pub fn reconstruct(d: &Deck) -> Result<ReconstructionResult> {
    if d.n() < 3 {
        return Err(Error::OrderTooSmall { n: d.n() });
    }
    let ctx = DeckCtx::new(d)?;
    if !ctx.all_cards_interval() {
        return Err(Error::NotIntervalDeck);
    }
    let mut trace = vec!["interval cards".to_string()];
    if !ctx.original_connected() {
        trace.push("disconnected graph".to_string());
        let g = reconstruct_disconnected(d)?;
        return finish(d, vec![g], "disconnected", trace);
    }
    if ctx.has_universal_vertex() {
        trace.push("universal vertex present".to_string());
        let g = reconstruct_universal(&ctx)?;
        return finish(d, vec![g], "universal-vertex", trace);
    }
    let (s, t) = flank_sizes_ctx(&ctx)?;
    trace.push(format!("flank sizes {{{{{}, {}}}}}", s, t));
    let (candidates, method) = if s >= 1 {
        reconstruct_two_flanks_cases(&ctx, s, t, &mut trace)?
    } else if t == 0 {
        reconstruct_no_flank_cases(&ctx, &mut trace)?
    } else {
        reconstruct_one_flank_cases(&ctx, t, &mut trace)?
    };
    finish(d, candidates, &method, trace)
}

/// Reconstruction restricted to decks of graphs with two nonempty flanks.
pub fn reconstruct_two_flanks(d: &Deck) -> Result<Graph> {
    let ctx = DeckCtx::new(d)?;
    let (s, t) = flank_sizes_ctx(&ctx)?;
    if s == 0 {
        return Err(Error::NotApplicable("graph does not have two flanks"));
    }
    let mut trace = Vec::new();
    let (candidates, _) = reconstruct_two_flanks_cases(&ctx, s, t, &mut trace)?;
    unique_deck_match(d, candidates)
}

pub fn reconstruct_no_flank(d: &Deck) -> Result<Graph> {
    let ctx = DeckCtx::new(d)?;
    let (s, t) = flank_sizes_ctx(&ctx)?;
    if (s, t) != (0, 0) {
        return Err(Error::NotApplicable("graph has flanks"));
    }
    let mut trace = Vec::new();
    let (candidates, _) = reconstruct_no_flank_cases(&ctx, &mut trace)?;
    unique_deck_match(d, candidates)
}

pub fn reconstruct_one_flank(d: &Deck) -> Result<Graph> {
    let ctx = DeckCtx::new(d)?;
    let (s, t) = flank_sizes_ctx(&ctx)?;
    if s != 0 || t == 0 {
        return Err(Error::NotApplicable("graph does not have exactly one flank"));
    }
    let mut trace = Vec::new();
    let (candidates, _) = reconstruct_one_flank_cases(&ctx, t, &mut trace)?;
    unique_deck_match(d, candidates)
}

/// Disconnected graphs: exhaustive deck search, the one sanctioned oracle
/// fallback.
pub fn reconstruct_disconnected(d: &Deck) -> Result<Graph> {
    let matches = crate::oracle::graphs_with_deck(d)?;
    match matches.len() {
        0 => Err(Error::CaseUnmatched("disconnected")),
        1 => matches[0].to_graph(),
        _ => Err(Error::AmbiguousDeck),
    }
}

/// Graphs with a universal vertex: add one back to the card of a universal
/// vertex.
pub fn reconstruct_universal_deck(d: &Deck) -> Result<Graph> {
    let ctx = DeckCtx::new(d)?;
    if !ctx.has_universal_vertex() {
        return Err(Error::NotApplicable("no universal vertex"));
    }
    reconstruct_universal(&ctx)
}

fn reconstruct_universal(ctx: &DeckCtx) -> Result<Graph> {
    let card = ctx
        .cards
        .iter()
        .find(|c| c.degree + 1 == ctx.n)
        .ok_or(Error::CaseUnmatched("universal-vertex"))?;
    let old = &card.graph;
    let mut g = Graph::new(ctx.n);
    for (u, v) in old.edges() {
        g.add_edge(u, v);
    }
    for v in 0..ctx.n - 1 {
        g.add_edge(v, ctx.n - 1);
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// shared machinery
// ---------------------------------------------------------------------------

fn finish(
    d: &Deck,
    candidates: Vec<Graph>,
    method: &str,
    mut trace: Vec<String>,
) -> Result<ReconstructionResult> {
    let graph = unique_deck_match(d, candidates)?;
    trace.push("deck verified".to_string());
    Ok(ReconstructionResult { graph, method: method.to_string(), trace })
}

fn unique_deck_match(d: &Deck, candidates: Vec<Graph>) -> Result<Graph> {
    let mut survivors: BTreeMap<Certificate, Graph> = BTreeMap::new();
    for g in candidates {
        if g.n() != d.n() {
            continue;
        }
        let cert = certificate_unchecked(&g);
        if survivors.contains_key(&cert) {
            continue;
        }
        if &Deck::of(&g) == d {
            survivors.insert(cert, g);
        }
    }
    match survivors.len() {
        0 => {
            // distinguish a non-interval deck from an internal failure where
            // the exhaustive check is still feasible
            if d.n() <= crate::oracle::ENUMERATE_ALL_LIMIT
                && !crate::deck::is_interval_deck(d)?
            {
                return Err(Error::NotIntervalDeck);
            }
            Err(Error::CaseUnmatched("no candidate matches the deck"))
        }
        1 => Ok(survivors.into_values().next().unwrap()),
        _ => Err(Error::AmbiguousDeck),
    }
}

/// All ways to re-attach a deleted vertex to its card so that the neighbor
/// degrees (in the restored graph) come out right, enumerated up to the
/// card's twin classes: within a twin class only the number of chosen
/// neighbors matters.
fn attach_candidates(card: &Graph, neighbor_degrees: &[usize]) -> Vec<Graph> {
    let mut need: BTreeMap<usize, usize> = BTreeMap::new();
    for &d in neighbor_degrees {
        if d == 0 {
            return Vec::new();
        }
        *need.entry(d - 1).or_insert(0) += 1;
    }
    let classes: Vec<VertexSet> = card.twin_classes().into_iter().map(|c| c.members).collect();
    let mut selections: Vec<VertexSet> = vec![VertexSet::EMPTY];
    for (&deg, &count) in &need {
        let groups: Vec<Vec<usize>> = classes
            .iter()
            .map(|cl| cl.iter().filter(|&v| card.degree(v) == deg).collect::<Vec<usize>>())
            .filter(|g| !g.is_empty())
            .collect();
        if groups.iter().map(|g| g.len()).sum::<usize>() < count {
            return Vec::new();
        }
        let mut splits: Vec<VertexSet> = Vec::new();
        distribute(&groups, 0, count, VertexSet::EMPTY, &mut splits);
        let mut next = Vec::new();
        for base in &selections {
            for extra in &splits {
                next.push(base.union(*extra));
            }
        }
        selections = next;
    }
    let n = card.n() + 1;
    let mut out: BTreeMap<Certificate, Graph> = BTreeMap::new();
    for sel in selections {
        let mut g = Graph::new(n);
        for (u, v) in card.edges() {
            g.add_edge(u, v);
        }
        for v in sel.iter() {
            g.add_edge(v, n - 1);
        }
        out.entry(certificate_unchecked(&g)).or_insert(g);
    }
    out.into_values().collect()
}

fn distribute(
    groups: &[Vec<usize>],
    idx: usize,
    still_needed: usize,
    acc: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if still_needed == 0 {
        out.push(acc);
        return;
    }
    if idx >= groups.len() {
        return;
    }
    let cap = groups[idx].len().min(still_needed);
    for take in 0..=cap {
        let mut next = acc;
        for &v in groups[idx].iter().take(take) {
            next.insert(v);
        }
        distribute(groups, idx + 1, still_needed - take, next, out);
    }
}

/// The cards of E with their recovered data.
fn e_card_infos<'a>(ctx: &'a DeckCtx) -> Vec<(&'a CardInfo, usize)> {
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    multiset_e_ctx(ctx).into_iter().map(|(cert, k)| (by_cert[&cert], k)).collect()
}

fn flank_parts_of(card: &Graph) -> Vec<VertexSet> {
    structure::flank_classes_unchecked(card)
}

/// Unique flank part of the given size inside a card.
fn locate_flank(card: &Graph, size: usize) -> Option<VertexSet> {
    let matching: Vec<VertexSet> =
        flank_parts_of(card).into_iter().filter(|f| f.len() == size).collect();
    if matching.len() == 1 {
        Some(matching[0])
    } else {
        None
    }
}

/// The annotated graph induced by a flank-like part and its neighborhood,
/// annotations taken from the card's degrees (valid whenever the deleted
/// vertex is not adjacent to the part's closed neighborhood).
fn part_with_boundary(card: &Graph, part: VertexSet) -> AnnotatedGraph {
    let boundary = card.open_nbrs_set(part);
    let keep = part.union(boundary);
    let (h, old) = card.induced(keep);
    let lambda = old
        .iter()
        .map(|&v| if boundary.contains(v) { Some(card.degree(v)) } else { None })
        .collect();
    AnnotatedGraph::new(h, lambda)
}

/// Deletes an unannotated vertex from an annotated graph, decrementing the
/// annotations of its annotated neighbors.
fn annotated_delete(h: &AnnotatedGraph, v: usize) -> AnnotatedGraph {
    let keep = h.graph.vertex_set().minus(VertexSet::singleton(v));
    let (g, old) = h.graph.induced(keep);
    let lambda = old
        .iter()
        .map(|&u| h.lambda[u].map(|l| if h.graph.has_edge(u, v) { l - 1 } else { l }))
        .collect();
    AnnotatedGraph::new(g, lambda)
}

/// Distant-vertex recovery of the far side from a chosen card of E: the
/// deleted vertex's flank is located in the card with one vertex fewer; the
/// far side is everything beyond that flank's neighborhood.
fn recover_far_side(info: &CardInfo, flank_in_card: VertexSet) -> Result<AnnotatedGraph> {
    let card = &info.graph;
    let c_side = card.open_nbrs_set(flank_in_card);
    let a_side = card.vertex_set().minus(flank_in_card.union(c_side));
    distant_vertex_recover(card, a_side, c_side, &info.neighbor_degrees)
}

/// Proxy for minimizing |N(deleted) ∩ N(flank)| among the cards of one flank:
/// 2 deg_G(deleted) + sum of card degrees over the remaining flank differs
/// from that quantity by a constant.
fn contact_proxy(info: &CardInfo, flank_in_card: VertexSet) -> usize {
    2 * info.degree + flank_in_card.iter().map(|u| info.graph.degree(u)).sum::<usize>()
}

// ---------------------------------------------------------------------------
// two flanks
// ---------------------------------------------------------------------------

fn reconstruct_two_flanks_cases(
    ctx: &DeckCtx,
    s: usize,
    t: usize,
    trace: &mut Vec<String>,
) -> Result<(Vec<Graph>, String)> {
    let e_cards = e_card_infos(ctx);
    match (s, t) {
        (1, 1) => {
            trace.push("two flanks of size one".to_string());
            Ok((two_flanks_small(&e_cards, s, t, trace)?, "two-flanks case 5".into()))
        }
        (1, 2) => {
            trace.push("flank sizes one and two".to_string());
            Ok((two_flanks_small(&e_cards, s, t, trace)?, "two-flanks case 4".into()))
        }
        (1, _) => {
            trace.push("single vertex flank opposite a large flank".to_string());
            Ok((two_flanks_general(&e_cards, s, t, 2, trace)?, "two-flanks case 2".into()))
        }
        _ if s == t => {
            trace.push("equal flanks".to_string());
            Ok((two_flanks_equal(&e_cards, s, trace)?, "two-flanks case 3".into()))
        }
        _ => {
            trace.push("two large flanks of different sizes".to_string());
            Ok((two_flanks_general(&e_cards, s, t, 1, trace)?, "two-flanks case 1".into()))
        }
    }
}

fn normalized_sizes(a: usize, b: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [a, b].into_iter().filter(|&x| x > 0).collect();
    v.sort_unstable();
    v
}

fn card_flank_sizes(card: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> =
        flank_parts_of(card).iter().map(|f| f.len()).filter(|&x| x > 0).collect();
    sizes.sort_unstable();
    sizes
}

fn dedupe_annotated(cands: Vec<AnnotatedGraph>) -> Vec<AnnotatedGraph> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for c in cands {
        if seen.insert(c.certificate()) {
            out.push(c);
        }
    }
    out
}

/// Cases 1 and 2: delete inside the flank indexed `delete_side` (1 = the
/// smaller flank, 2 = the larger), recover the far side by the distant-vertex
/// method and the deleted side's flank graph from the opposite cards.
fn two_flanks_general(
    e_cards: &[(&CardInfo, usize)],
    s: usize,
    t: usize,
    delete_side: usize,
    trace: &mut Vec<String>,
) -> Result<Vec<Graph>> {
    let (own_size, other_size) = if delete_side == 1 { (s, t) } else { (t, s) };
    let deletion_cards: Vec<&CardInfo> = e_cards
        .iter()
        .filter(|(c, _)| card_flank_sizes(&c.graph) == normalized_sizes(own_size - 1, other_size))
        .map(|(c, _)| *c)
        .collect();
    let opposite_cards: Vec<&CardInfo> = e_cards
        .iter()
        .filter(|(c, _)| card_flank_sizes(&c.graph) == normalized_sizes(other_size - 1, own_size))
        .map(|(c, _)| *c)
        .collect();
    // far side: minimal separator contact within the deletion flank
    let mut scored: Vec<(usize, Certificate, &CardInfo, VertexSet)> = Vec::new();
    for c in &deletion_cards {
        if let Some(f) = locate_flank(&c.graph, own_size - 1) {
            scored.push((contact_proxy(c, f), c.cert.clone(), c, f));
        }
    }
    scored.sort_by_key(|(p, cert, _, _)| (*p, cert.clone()));
    let (_, _, chosen, chosen_flank) =
        scored.first().ok_or(Error::CaseUnmatched("two-flanks: no deletion card"))?;
    trace.push("distant vertex recovery of the far side".to_string());
    let far = recover_far_side(chosen, *chosen_flank)?;

    // own-side flank graph from the opposite flank's cards
    let own_candidates: Vec<AnnotatedGraph> = if own_size != other_size.wrapping_sub(1) {
        let mut cands = Vec::new();
        for c in &opposite_cards {
            if let Some(f) = locate_flank(&c.graph, own_size) {
                cands.push(part_with_boundary(&c.graph, f));
            }
        }
        dedupe_annotated(cands)
    } else {
        trace.push("tie-break flank graphs through deletions of the larger flank".to_string());
        own_flank_candidates_nearby(e_cards, own_size, other_size)?
    };
    let mut out = Vec::new();
    for own in &own_candidates {
        if let Ok(g) = assemble(own, &far) {
            out.push(g);
        }
    }
    trace.push("reassembled along the flank separation".to_string());
    Ok(out)
}

/// |F_own| = |F_other| - 1: every card of the other flank shows two flanks of
/// equal size. The own flank graph is whichever of the card's two flank
/// graphs does not arise from the other flank graph by one deletion.
fn own_flank_candidates_nearby(
    e_cards: &[(&CardInfo, usize)],
    own_size: usize,
    other_size: usize,
) -> Result<Vec<AnnotatedGraph>> {
    // the other flank graph survives intact in own-side deletion cards
    let own_deletion_cards: Vec<&CardInfo> = e_cards
        .iter()
        .filter(|(c, _)| card_flank_sizes(&c.graph) == normalized_sizes(own_size - 1, other_size))
        .map(|(c, _)| *c)
        .collect();
    let mut other_graphs = Vec::new();
    for c in &own_deletion_cards {
        if let Some(f) = locate_flank(&c.graph, other_size) {
            other_graphs.push(part_with_boundary(&c.graph, f));
        }
    }
    let other_graphs = dedupe_annotated(other_graphs);
    // all one-vertex deletions of the other flank graph that stay connected
    let mut reduced: Vec<AnnotatedGraph> = Vec::new();
    for other in &other_graphs {
        for v in other.graph.vertices() {
            if other.lambda[v].is_some() {
                continue;
            }
            let h = annotated_delete(other, v);
            if h.graph.is_connected() {
                reduced.push(h);
            }
        }
    }
    let reduced = dedupe_annotated(reduced);
    let other_deletion_cards: Vec<&CardInfo> = e_cards
        .iter()
        .filter(|(c, _)| card_flank_sizes(&c.graph) == vec![own_size, own_size])
        .map(|(c, _)| *c)
        .collect();
    let mut candidates = Vec::new();
    for c in &other_deletion_cards {
        let parts = flank_parts_of(&c.graph);
        let pair: Vec<AnnotatedGraph> =
            parts.iter().map(|&f| part_with_boundary(&c.graph, f)).collect();
        let outside: Vec<&AnnotatedGraph> = pair
            .iter()
            .filter(|p| !reduced.iter().any(|r| annotated_isomorphic(p, r)))
            .collect();
        match outside.len() {
            1 => candidates.push(outside[0].clone()),
            _ => candidates.extend(pair.clone()),
        }
    }
    Ok(dedupe_annotated(candidates))
}

/// Case 3: equal flank sizes s = t > 1. The far side comes from the overall
/// minimal-contact card; its own intact flank determines the opposite flank
/// graph, and the deleted side's is the remaining one.
fn two_flanks_equal(
    e_cards: &[(&CardInfo, usize)],
    s: usize,
    trace: &mut Vec<String>,
) -> Result<Vec<Graph>> {
    let mut scored: Vec<(usize, Certificate, &CardInfo, VertexSet)> = Vec::new();
    for (c, _) in e_cards {
        if let Some(f) = locate_flank(&c.graph, s - 1) {
            scored.push((contact_proxy(c, f), c.cert.clone(), c, f));
        }
    }
    scored.sort_by_key(|(p, cert, _, _)| (*p, cert.clone()));
    let (_, _, chosen, chosen_flank) =
        scored.first().ok_or(Error::CaseUnmatched("two-flanks equal: no card"))?;
    trace.push("distant vertex recovery of the far side".to_string());
    let far = recover_far_side(chosen, *chosen_flank)?;
    // the far part contains the opposite flank in full
    let opposite: Vec<AnnotatedGraph> = flank_parts_of(&far.graph)
        .iter()
        .filter(|f| f.len() == s)
        .map(|&f| flank_graph_inside(&far, f))
        .collect();
    // both flank graphs, observed across all cards
    let mut all_flank_graphs = Vec::new();
    for (c, _) in e_cards {
        if let Some(f) = locate_flank(&c.graph, s) {
            all_flank_graphs.push(part_with_boundary(&c.graph, f));
        }
    }
    let all_flank_graphs = dedupe_annotated(all_flank_graphs);
    let mut own_candidates: Vec<AnnotatedGraph> = Vec::new();
    match opposite.first() {
        Some(opp) => {
            let others: Vec<AnnotatedGraph> = all_flank_graphs
                .iter()
                .filter(|h| !annotated_isomorphic(h, opp))
                .cloned()
                .collect();
            if others.is_empty() {
                own_candidates.extend(all_flank_graphs.clone());
            } else {
                own_candidates.extend(others);
            }
        }
        None => own_candidates.extend(all_flank_graphs.clone()),
    }
    let mut out = Vec::new();
    for own in dedupe_annotated(own_candidates) {
        if let Ok(g) = assemble(&own, &far) {
            out.push(g);
        }
    }
    trace.push("reassembled along the flank separation".to_string());
    Ok(out)
}

/// The annotated flank graph read inside a recovered far part: part vertices
/// keep their original degrees (annotated boundary or unannotated interior).
fn flank_graph_inside(far: &AnnotatedGraph, flank: VertexSet) -> AnnotatedGraph {
    let g = &far.graph;
    let boundary = g.open_nbrs_set(flank);
    let keep = flank.union(boundary);
    let (h, old) = g.induced(keep);
    let lambda = old
        .iter()
        .map(|&v| {
            if boundary.contains(v) {
                Some(far.lambda[v].unwrap_or_else(|| g.degree(v)))
            } else {
                None
            }
        })
        .collect();
    AnnotatedGraph::new(h, lambda)
}

/// Cases 4 and 5 (sizes {1,2} and {1,1}): a single-vertex flank's card shows
/// the entire rest of the graph; reattach the deleted flank vertex to its
/// neighborhood using the recovered neighbor degrees, up to twins.
fn two_flanks_small(
    e_cards: &[(&CardInfo, usize)],
    s: usize,
    t: usize,
    trace: &mut Vec<String>,
) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (c, _) in e_cards {
        let sizes = card_flank_sizes(&c.graph);
        if sizes == normalized_sizes(s - 1, t) || sizes == normalized_sizes(s, t - 1) {
            out.extend(attach_candidates(&c.graph, &c.neighbor_degrees));
        }
    }
    trace.push("reattached the deleted flank vertex by neighbor degrees".to_string());
    Ok(out)
}

// ---------------------------------------------------------------------------
// no flanks
// ---------------------------------------------------------------------------

fn reconstruct_no_flank_cases(
    ctx: &DeckCtx,
    trace: &mut Vec<String>,
) -> Result<(Vec<Graph>, String)> {
    let (o_small, o_large) = outsider_sizes_ctx(ctx)?;
    trace.push(format!("outsider sizes {{{{{}, {}}}}}", o_small, o_large));
    if o_large >= 2 {
        trace.push("separation at the larger outsider class".to_string());
        Ok((no_flank_big_outsiders(ctx, trace)?, "no-flank case 1".into()))
    } else if ctx.max_degree + 2 == ctx.n {
        trace.push("reattached a single outsider by neighbor degrees".to_string());
        Ok((outsider_attach_candidates(ctx)?, "no-flank case 2".into()))
    } else {
        trace.push("reattached a single outsider by neighbor degrees".to_string());
        Ok((outsider_attach_candidates(ctx)?, "no-flank case 3".into()))
    }
}

/// Cases 2 and 3 (both outsider classes singletons): the identified outsider
/// cards show everything but one outsider; reattach it with the recovered
/// neighbor degrees.
fn outsider_attach_candidates(ctx: &DeckCtx) -> Result<Vec<Graph>> {
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let mut out = Vec::new();
    for (cert, _) in q1_cards_ctx(ctx)? {
        let info = by_cert[&cert];
        out.extend(attach_candidates(&info.graph, &info.neighbor_degrees));
    }
    Ok(out)
}

/// Locates, inside the card of a deleted outsider, the rest of the deleted
/// vertex's class: the span confinement of an extremal high-degree class of
/// card degree maxdeg - 1.
fn locate_removed_class(card: &Graph, delta: usize) -> Vec<VertexSet> {
    let nnc = structure::neighborhood_maximal(card);
    let order = match structure::max_degree_order(card, nnc) {
        Ok(o) => o,
        Err(_) => return Vec::new(),
    };
    let qualifies = |cl: &VertexSet| cl.iter().all(|v| card.degree(v) + 1 >= delta);
    let d1 = order.classes.iter().find(|cl| qualifies(cl));
    let d2 = order.classes.iter().rev().find(|cl| qualifies(cl));
    let mut out = Vec::new();
    for d in [d1, d2].into_iter().flatten() {
        if d.iter().all(|v| card.degree(v) + 1 == delta) {
            let span = structure::span(card, *d);
            let located = VertexSet::from_iter(
                card.vertices().filter(|&x| card.closed_nbrs(x).is_subset_of(span)),
            );
            if !located.is_empty() {
                out.push(located);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Case 1: some outsider class has at least two members. Pick the deletion
/// maximizing the boundary degree sum, rebuild the far part with annotation
/// repair, read the near part from the opposite class's cards, and glue.
fn no_flank_big_outsiders(ctx: &DeckCtx, trace: &mut Vec<String>) -> Result<Vec<Graph>> {
    let delta = ctx.max_degree;
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let q2 = q_ge2_cards_ctx(ctx)?;
    let (o_small, o_large) = outsider_sizes_ctx(ctx)?;
    let mut located: Vec<(&CardInfo, VertexSet)> = Vec::new();
    for (cert, _) in &q2 {
        let info = by_cert[cert];
        for loc in locate_removed_class(&info.graph, delta) {
            located.push((info, loc));
        }
    }
    // the remnant's size pins which class the deletion came from
    located.retain(|(_, loc)| loc.len() + 1 == o_small || loc.len() + 1 == o_large);
    located.sort_by_key(|(info, loc)| {
        let y = info.graph.open_nbrs_set(*loc);
        let score: usize = y.iter().map(|u| info.graph.degree(u)).sum();
        (std::cmp::Reverse(score), info.cert.clone(), loc.0)
    });
    let (chosen, remnant) =
        located.first().ok_or(Error::CaseUnmatched("no-flank case 1: no locatable deletion"))?;
    let own_size = remnant.len() + 1;
    let boundary = chosen.graph.open_nbrs_set(*remnant);
    trace.push("rebuilt the far side with annotation repair".to_string());
    let far = repaired_far_part(chosen, *remnant, boundary, own_size)?;
    // near side: the whole class with its neighborhood, read from the cards
    // of the opposite class
    let mut near_candidates: Vec<AnnotatedGraph> = Vec::new();
    let near_sources: Vec<(Card, usize)> = q2.iter().cloned().chain(q1_cards_ctx(ctx)?).collect();
    for (cert, _) in &near_sources {
        let info = by_cert[cert];
        for class in structure::one_sided_classes_lenient(&info.graph) {
            let o_set = structure::outsiders_of(&info.graph, class);
            if o_set.len() == own_size {
                near_candidates.push(part_with_boundary(&info.graph, o_set));
            }
        }
    }
    let mut out = Vec::new();
    for near in dedupe_annotated(near_candidates) {
        if let Ok(g) = assemble(&near, &far) {
            out.push(g);
        }
    }
    trace.push("reassembled along the outsider separation".to_string());
    Ok(out)
}

/// The far part of an outsider or flank separation: everything outside the
/// remnant, annotated on the boundary, with the annotations of the deleted
/// vertex's boundary neighbors bumped back up. Matching vertices are twins
/// under linearly ordered neighborhoods, so a greedy assignment is correct.
fn repaired_far_part(
    info: &CardInfo,
    remnant: VertexSet,
    boundary: VertexSet,
    own_size: usize,
) -> Result<AnnotatedGraph> {
    let card = &info.graph;
    let part = card.vertex_set().minus(remnant);
    let (h, old) = card.induced(part);
    let part_degree = |v_old: usize| {
        let idx = old.iter().position(|&x| x == v_old).unwrap();
        h.degree(idx)
    };
    let threshold = own_size + boundary.len();
    let mut bumped = VertexSet::EMPTY;
    for &d in info.neighbor_degrees.iter().filter(|&&d| d >= threshold) {
        let y = boundary.iter().find(|&y| {
            !bumped.contains(y) && card.degree(y) + 1 == d && part_degree(y) + own_size == d
        });
        match y {
            Some(y) => bumped.insert(y),
            None => return Err(Error::CaseUnmatched("annotation repair failed")),
        }
    }
    let lambda = old
        .iter()
        .map(|&v| {
            if boundary.contains(v) {
                Some(card.degree(v) + usize::from(bumped.contains(v)))
            } else {
                None
            }
        })
        .collect();
    Ok(AnnotatedGraph::new(h, lambda))
}

// ---------------------------------------------------------------------------
// one flank
// ---------------------------------------------------------------------------

fn reconstruct_one_flank_cases(
    ctx: &DeckCtx,
    k: usize,
    trace: &mut Vec<String>,
) -> Result<(Vec<Graph>, String)> {
    if k == 1 {
        trace.push("reattached the single flank vertex by neighbor degrees".to_string());
        let e_cards = e_card_infos(ctx);
        let mut out = Vec::new();
        for (c, _) in &e_cards {
            out.extend(attach_candidates(&c.graph, &c.neighbor_degrees));
        }
        return Ok((out, "one-flank case small".into()));
    }
    trace.push("separation at the flank".to_string());
    Ok((one_flank_big(ctx, k, trace)?, "one-flank case big".into()))
}

/// |F2| > 1: choose the flank deletion maximizing the boundary degree sum,
/// rebuild the far side with annotation repair, and read the flank graph from
/// the outsider cards.
fn one_flank_big(ctx: &DeckCtx, k: usize, trace: &mut Vec<String>) -> Result<Vec<Graph>> {
    let delta = ctx.max_degree;
    let e_cards = e_card_infos(ctx);
    let mut scored: Vec<(&CardInfo, VertexSet, usize)> = Vec::new();
    for (c, _) in &e_cards {
        if let Some(f) = locate_flank(&c.graph, k - 1) {
            let y = c.graph.open_nbrs_set(f);
            let score: usize = y.iter().map(|u| c.graph.degree(u)).sum();
            scored.push((c, f, score));
        }
    }
    scored.sort_by_key(|(c, f, score)| (std::cmp::Reverse(*score), c.cert.clone(), f.0));
    let (chosen, remnant, _) =
        scored.first().ok_or(Error::CaseUnmatched("one-flank: no deletion card"))?;
    let boundary = chosen.graph.open_nbrs_set(*remnant);
    trace.push("rebuilt the far side with annotation repair".to_string());
    let far = repaired_far_part(chosen, *remnant, boundary, k)?;

    // flank graph candidates from the outsider cards
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let mut flank_candidates: Vec<AnnotatedGraph> = Vec::new();
    let mut outsider_cards: BTreeMap<Card, usize> = BTreeMap::new();
    for (c, n) in q1_cards_ctx(ctx)?.into_iter().chain(q_ge2_cards_ctx(ctx)?) {
        *outsider_cards.entry(c).or_insert(0) += n;
    }
    for cert in outsider_cards.keys() {
        let info = by_cert[cert];
        let card = &info.graph;
        if card.max_degree() == delta {
            for part in flank_parts_of(card) {
                if part.len() == k {
                    flank_candidates.push(part_with_boundary(card, part));
                }
            }
        } else {
            // the deletion dropped the maximum degree: the flank sits beyond
            // the closed span of a one-sided class of degree maxdeg - 1
            for class in structure::one_sided_classes_lenient(card) {
                if !class.iter().all(|v| card.degree(v) + 1 == delta) {
                    continue;
                }
                let span = structure::span(card, class);
                let beyond = card.vertex_set().minus(card.closed_nbrs_set(span));
                if beyond.len() == k {
                    flank_candidates.push(part_with_boundary(card, beyond));
                }
            }
        }
    }
    let mut out = Vec::new();
    for flank in dedupe_annotated(flank_candidates) {
        if let Ok(g) = assemble(&flank, &far) {
            out.push(g);
        }
    }
    trace.push("reassembled along the flank separation".to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

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

    fn caterpillar1() -> Graph {
        Graph::from_edges(6, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5)])
    }

    fn caterpillar2() -> Graph {
        Graph::from_edges(7, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5), (5, 6)])
    }

    fn double_tail() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6)])
    }

    fn barbell() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    }

    fn roundtrip(g: &Graph) -> ReconstructionResult {
        let r = reconstruct(&Deck::of(g)).unwrap();
        assert!(are_isomorphic(&r.graph, g).unwrap(), "reconstructed wrong graph for {:?}", g);
        r
    }

    #[test]
    fn reconstructs_paths() {
        let r = roundtrip(&path(5));
        assert_eq!(r.method, "no-flank case 3");
        roundtrip(&path(6));
    }

    #[test]
    fn reconstructs_universal() {
        let r = roundtrip(&k(4));
        assert_eq!(r.method, "universal-vertex");
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(roundtrip(&star).method, "universal-vertex");
        // path plus a universal vertex
        let fan = Graph::from_edges(4, &[(0, 1), (1, 2), (3, 0), (3, 1), (3, 2)]);
        assert_eq!(roundtrip(&fan).method, "universal-vertex");
    }

    #[test]
    fn reconstructs_disconnected() {
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(roundtrip(&two_k2).method, "disconnected");
        roundtrip(&Graph::from_edges(4, &[(1, 2), (2, 3)]));
        roundtrip(&Graph::new(3));
    }

    #[test]
    fn reconstructs_named_structures() {
        assert_eq!(roundtrip(&barbell()).method, "no-flank case 1");
        assert_eq!(roundtrip(&double_tail()).method, "two-flanks case 5");
        assert_eq!(roundtrip(&caterpillar2()).method, "one-flank case big");
        assert_eq!(roundtrip(&caterpillar1()).method, "one-flank case small");
    }

    #[test]
    fn rejects_tiny_and_non_interval_decks() {
        assert!(matches!(reconstruct(&Deck::of(&k(2))), Err(Error::OrderTooSmall { n: 2 })));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(matches!(reconstruct(&Deck::of(&c5)), Err(Error::NotIntervalDeck)));
    }

    #[test]
    fn two_flank_cases_with_longer_tails() {
        // double tail with one tail lengthened: flank sizes {1, 2}
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6), (5, 7)]);
        assert_eq!(roundtrip(&g).method, "two-flanks case 4");
        // lengthened by two: flank sizes {1, 3}
        let g = Graph::from_edges(
            9,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6), (5, 7), (7, 8)],
        );
        assert_eq!(roundtrip(&g).method, "two-flanks case 2");
    }

    #[test]
    fn two_flank_case_equal_large_flanks() {
        // both tails of length two: flank sizes {2, 2}
        let g = Graph::from_edges(
            9,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6), (5, 7), (6, 8)],
        );
        assert_eq!(roundtrip(&g).method, "two-flanks case 3");
    }

    #[test]
    fn two_flank_case_different_large_flanks() {
        // tails of lengths two and three: flank sizes {2, 3}, which also
        // exercises the near-size tie-break (|F1| = |F2| - 1)
        let g = Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6), (5, 7), (6, 8), (8, 9)],
        );
        assert_eq!(roundtrip(&g).method, "two-flanks case 1");
    }
}
