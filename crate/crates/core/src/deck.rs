//! Decks of vertex-deleted cards and the deck-level invariants that are
//! reconstructible for connected interval graphs: the card multiset E of
//! flank deletions, the no-flank decision, flank sizes, and the outsider card
//! sets Q^1 and Q^>=2 with the outsider class sizes.
//!
//! Every public procedure here reads only the deck. The `direct` submodule
//! holds the graph-reading counterparts used as test oracles; the two are
//! diffed exhaustively over all small connected interval graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::{certificate_unchecked, Certificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::is_interval;
use crate::structure;

/// A card: the certificate of G - v for some vertex v.
pub type Card = Certificate;

/// Multiset of cards with explicit multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deck {
    n: usize,
    cards: BTreeMap<Card, usize>,
}

#[derive(Serialize, Deserialize)]
struct DeckCardJson {
    g6: String,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct DeckJson {
    n: usize,
    cards: Vec<DeckCardJson>,
}

impl Deck {
    pub fn of(g: &Graph) -> Deck {
        let mut cards = BTreeMap::new();
        for v in g.vertices() {
            let card = certificate_unchecked(&g.remove_vertex(v));
            *cards.entry(card).or_insert(0) += 1;
        }
        Deck { n: g.n(), cards }
    }

    pub fn from_counts(n: usize, cards: BTreeMap<Card, usize>) -> Deck {
        Deck { n, cards }
    }

    /// Order of the original graph (= number of cards).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Card, usize)> {
        self.cards.iter().map(|(c, &k)| (c, k))
    }

    pub fn count(&self, card: &Card) -> usize {
        self.cards.get(card).copied().unwrap_or(0)
    }

    pub fn total_multiplicity(&self) -> usize {
        self.cards.values().sum()
    }

    pub fn to_json(&self) -> String {
        let json = DeckJson {
            n: self.n,
            cards: self
                .cards
                .iter()
                .map(|(c, &k)| DeckCardJson { g6: c.0.clone(), count: k })
                .collect(),
        };
        serde_json::to_string(&json).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Deck> {
        let json: DeckJson =
            serde_json::from_str(s).map_err(|_| Error::NotApplicable("invalid deck JSON"))?;
        let mut cards = BTreeMap::new();
        for c in json.cards {
            // store cards canonically regardless of input labeling
            let g = crate::graph6::decode(&c.g6)?;
            let cert = certificate_unchecked(&g);
            *cards.entry(cert).or_insert(0) += c.count;
        }
        Ok(Deck { n: json.n, cards })
    }
}

/// Per-card data recovered from the deck alone: the canonical representative
/// of the card, its multiplicity, the degree of the deleted vertex, and the
/// multiset of degrees (in G) of the deleted vertex's neighbors.
#[derive(Debug, Clone)]
pub struct CardInfo {
    pub cert: Card,
    pub count: usize,
    pub graph: Graph,
    pub degree: usize,
    pub neighbor_degrees: Vec<usize>,
}

/// Deck plus everything the degree-sequence lemma recovers from it.
#[derive(Debug, Clone)]
pub struct DeckCtx {
    pub n: usize,
    pub edge_total: usize,
    pub degree_multiset: Vec<usize>,
    pub max_degree: usize,
    pub cards: Vec<CardInfo>,
}

impl DeckCtx {
    pub fn new(d: &Deck) -> Result<DeckCtx> {
        let n = d.n();
        if n < 3 {
            return Err(Error::OrderTooSmall { n });
        }
        if d.total_multiplicity() != n {
            return Err(Error::NotApplicable("deck multiplicity does not match order"));
        }
        let mut decoded: Vec<(Card, usize, Graph)> = Vec::new();
        for (c, k) in d.entries() {
            let g = c.to_graph()?;
            if g.n() + 1 != n {
                return Err(Error::NotApplicable("card order does not match deck order"));
            }
            decoded.push((c.clone(), k, g));
        }
        let edge_sum: usize = decoded.iter().map(|(_, k, g)| k * g.edge_count()).sum();
        if edge_sum % (n - 2) != 0 {
            return Err(Error::NotApplicable("card edge counts are inconsistent"));
        }
        let edge_total = edge_sum / (n - 2);
        let mut degree_multiset: Vec<usize> = Vec::with_capacity(n);
        for (_, k, g) in &decoded {
            if edge_total < g.edge_count() {
                return Err(Error::NotApplicable("card edge counts are inconsistent"));
            }
            let deg = edge_total - g.edge_count();
            for _ in 0..*k {
                degree_multiset.push(deg);
            }
        }
        degree_multiset.sort_unstable();
        let max_degree = degree_multiset.last().copied().unwrap_or(0);
        let mut cards = Vec::new();
        for (cert, count, graph) in decoded {
            let degree = edge_total - graph.edge_count();
            let neighbor_degrees = recover_neighbor_degrees(&degree_multiset, degree, &graph)?;
            cards.push(CardInfo { cert, count, graph, degree, neighbor_degrees });
        }
        Ok(DeckCtx { n, edge_total, degree_multiset, max_degree, cards })
    }

    /// All cards expanded by multiplicity.
    pub fn expanded(&self) -> impl Iterator<Item = &CardInfo> {
        self.cards.iter().flat_map(|c| std::iter::repeat(c).take(c.count))
    }

    /// True when the original graph is connected: a graph is connected
    /// exactly when at least two of its cards are connected.
    pub fn original_connected(&self) -> bool {
        self.cards
            .iter()
            .map(|c| if c.graph.is_connected() { c.count } else { 0 })
            .sum::<usize>()
            >= 2
    }

    pub fn has_universal_vertex(&self) -> bool {
        self.max_degree + 1 == self.n
    }

    pub fn all_cards_interval(&self) -> bool {
        self.cards.iter().all(|c| is_interval(&c.graph))
    }
}

/// Inverts the degree-multiset transformation of removing one vertex: given
/// the degree multiset of G minus one copy of deg(v) and the card's degree
/// multiset, recovers how many neighbors of v had each degree in G.
fn recover_neighbor_degrees(
    degree_multiset: &[usize],
    removed_degree: usize,
    card: &Graph,
) -> Result<Vec<usize>> {
    let max_deg = degree_multiset.last().copied().unwrap_or(0);
    let mut count_a = vec![0isize; max_deg + 2];
    for &d in degree_multiset {
        count_a[d] += 1;
    }
    if count_a[removed_degree] == 0 {
        return Err(Error::NotApplicable("degree bookkeeping failed"));
    }
    count_a[removed_degree] -= 1;
    let mut count_b = vec![0isize; max_deg + 2];
    for v in card.vertices() {
        let d = card.degree(v);
        if d > max_deg {
            return Err(Error::NotApplicable("card degree exceeds graph maximum"));
        }
        count_b[d] += 1;
    }
    // s[k] = #neighbors of the deleted vertex with degree k in G;
    // b[k] = a[k] - s[k] + s[k+1]
    let mut s = vec![0isize; max_deg + 3];
    let mut out = Vec::new();
    for k in (0..=max_deg + 1).rev() {
        let sk = count_a[k] - count_b[k] + s[k + 1];
        if sk < 0 {
            return Err(Error::NotApplicable("degree bookkeeping failed"));
        }
        s[k] = sk;
        for _ in 0..sk {
            out.push(k);
        }
    }
    out.sort_unstable();
    if out.len() != removed_degree {
        return Err(Error::NotApplicable("degree bookkeeping failed"));
    }
    Ok(out)
}

/// The deck with each card annotated by the recovered degree data.
pub fn reconstruct_degree_info(d: &Deck) -> Result<DeckCtx> {
    DeckCtx::new(d)
}

/// True iff every graph with this deck is an interval graph. The fast path
/// checks the hereditary necessary condition; the confirmation enumerates all
/// deck-consistent graphs at desk scale.
pub fn is_interval_deck(d: &Deck) -> Result<bool> {
    let ctx = DeckCtx::new(d)?;
    if !ctx.all_cards_interval() {
        return Ok(false);
    }
    let all = crate::oracle::graphs_with_deck(d)?;
    Ok(!all.is_empty() && all.iter().all(|c| is_interval(&c.to_graph().unwrap())))
}

fn require_connected_interval(ctx: &DeckCtx) -> Result<()> {
    if !ctx.original_connected() {
        return Err(Error::NotApplicable("deck belongs to a disconnected graph"));
    }
    if !ctx.all_cards_interval() {
        return Err(Error::NotApplicable("deck is not an interval deck"));
    }
    Ok(())
}

/// Whether the hidden graph has no flank vertices. Procedure: first decide
/// whether every vertex is in or next to the maximum-degree set (then the
/// bulk's neighborhood covers everything); otherwise inspect the subgraph
/// induced by the maximum-degree vertices through a card of a far-away
/// vertex; otherwise apply the two-sides criterion over the cards that keep
/// the maximum degree.
pub fn has_no_flanks(d: &Deck) -> Result<bool> {
    let ctx = DeckCtx::new(d)?;
    require_connected_interval(&ctx)?;
    Ok(has_no_flanks_ctx(&ctx))
}

pub(crate) fn has_no_flanks_ctx(ctx: &DeckCtx) -> bool {
    let delta = ctx.max_degree;
    // N[V_max] = V(G)?
    let all_covered = ctx
        .cards
        .iter()
        .all(|c| c.degree == delta || c.neighbor_degrees.contains(&delta));
    if all_covered {
        return true;
    }
    // a card of a vertex at distance >= 2 from every maximum-degree vertex
    // shows the subgraph induced by V_max unchanged
    let j_card = ctx
        .cards
        .iter()
        .find(|c| c.degree < delta && !c.neighbor_degrees.contains(&delta))
        .expect("a far vertex exists when N[V_max] != V");
    let vmax_in_card = VertexSet::from_iter(
        j_card.graph.vertices().filter(|&v| j_card.graph.degree(v) == delta),
    );
    if j_card.graph.is_connected_set(vmax_in_card) {
        return false;
    }
    // two-sides criterion over cards preserving the maximum degree
    for c in &ctx.cards {
        if c.graph.max_degree() != delta {
            continue;
        }
        let all_two_sided = c
            .graph
            .vertices()
            .filter(|&s| c.graph.degree(s) == delta)
            .all(|s| structure::sides(&c.graph, s).map(|x| x.len() == 2).unwrap_or(false));
        if all_two_sided {
            return false;
        }
    }
    true
}

/// The multiset E: cards that are connected, keep the maximum degree, and
/// keep the size of the bulk's closed neighborhood. Deletions of flank
/// vertices are exactly the candidates.
pub fn multiset_e(d: &Deck) -> Result<Vec<(Card, usize)>> {
    let ctx = DeckCtx::new(d)?;
    require_connected_interval(&ctx)?;
    Ok(multiset_e_ctx(&ctx))
}

pub(crate) fn multiset_e_ctx(ctx: &DeckCtx) -> Vec<(Card, usize)> {
    if has_no_flanks_ctx(ctx) {
        return Vec::new();
    }
    let delta = ctx.max_degree;
    let bulk_closed = ctx
        .cards
        .iter()
        .filter(|c| c.graph.max_degree() == delta)
        .map(|c| {
            let b = structure::bulk_unchecked(&c.graph);
            c.graph.closed_nbrs_set(b).len()
        })
        .max()
        .unwrap_or(0);
    ctx.cards
        .iter()
        .filter(|c| {
            c.graph.is_connected()
                && c.graph.max_degree() == delta
                && c.graph.closed_nbrs_set(structure::bulk_unchecked(&c.graph)).len()
                    == bulk_closed
        })
        .map(|c| (c.cert.clone(), c.count))
        .collect()
}

fn flank_class_sizes(card: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = structure::flank_classes_unchecked(card)
        .iter()
        .map(|c| c.len())
        .collect();
    sizes.sort_unstable();
    sizes
}

/// The multiset {{|F1|, |F2|}} of flank sizes of the hidden graph, returned
/// as an ordered pair (small, large).
pub fn flank_sizes(d: &Deck) -> Result<(usize, usize)> {
    let ctx = DeckCtx::new(d)?;
    require_connected_interval(&ctx)?;
    flank_sizes_ctx(&ctx)
}

pub(crate) fn flank_sizes_ctx(ctx: &DeckCtx) -> Result<(usize, usize)> {
    if has_no_flanks_ctx(ctx) {
        return Ok((0, 0));
    }
    let e_cards = multiset_e_ctx(ctx);
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let first = by_cert[&e_cards.first().expect("E is nonempty when flanks exist").0];
    let s = flank_class_sizes(&first.graph).iter().sum::<usize>() + 1;
    match s {
        1 => Ok((0, 1)),
        2 => flank_sizes_total_two(ctx, &e_cards, &by_cert),
        _ => {
            let some_two_flanked = e_cards.iter().any(|(cert, _)| {
                let sizes = flank_class_sizes(&by_cert[cert].graph);
                sizes.len() == 2 && sizes.iter().all(|&x| x > 0)
            });
            if !some_two_flanked {
                return Ok((0, s));
            }
            let t = e_cards
                .iter()
                .map(|(cert, _)| {
                    flank_class_sizes(&by_cert[cert].graph).last().copied().unwrap_or(0)
                })
                .max()
                .unwrap();
            Ok((s - t, t))
        }
    }
}

/// |F1| + |F2| = 2: one card in E means one flank of size two; otherwise
/// probe adjacency and the neighborhood degree sequence of the two flank
/// vertices m, m' to decide whether they share a flank.
fn flank_sizes_total_two(
    _ctx: &DeckCtx,
    e_cards: &[(Card, usize)],
    by_cert: &BTreeMap<&Card, &CardInfo>,
) -> Result<(usize, usize)> {
    let multiplicity: usize = e_cards.iter().map(|(_, k)| k).sum();
    if multiplicity == 1 {
        return Ok((0, 2));
    }
    debug_assert_eq!(multiplicity, 2);
    let infos: Vec<&CardInfo> = e_cards
        .iter()
        .flat_map(|(cert, k)| std::iter::repeat(by_cert[cert]).take(*k))
        .collect();
    let mut degs: Vec<usize> = infos.iter().map(|c| c.degree).collect();
    degs.sort_unstable();
    let (dm, dmax) = (degs[0], degs[1]);

    // the unique flank vertex of a card in E, its card degree and the degrees
    // of its card neighborhood
    let flank_vertex_data = |card: &Graph| -> (usize, Vec<usize>) {
        let classes = structure::flank_classes_unchecked(card);
        debug_assert_eq!(classes.iter().map(|c| c.len()).sum::<usize>(), 1);
        let fv = classes
            .iter()
            .find_map(|c| c.min_vertex())
            .expect("cards in E have exactly one flank vertex here");
        let mut nd: Vec<usize> = card.nbrs(fv).iter().map(|u| card.degree(u)).collect();
        nd.sort_unstable();
        (card.degree(fv), nd)
    };

    let adjacent =
        dm > 0 && infos.iter().any(|c| flank_vertex_data(&c.graph).0 == dm - 1);
    if adjacent {
        return Ok((0, 2));
    }
    // degree sequence of the neighborhood of the higher-degree flank vertex
    let s_seq = infos
        .iter()
        .find(|c| c.degree == dmax)
        .map(|c| c.neighbor_degrees.clone())
        .unwrap();
    let seen_as_card_nbrs = infos.iter().any(|c| flank_vertex_data(&c.graph).1 == s_seq);
    if seen_as_card_nbrs {
        // no common neighbor: the two vertices sit in different flanks
        Ok((1, 1))
    } else {
        Ok((0, 2))
    }
}

/// Number of nonempty flanks of the hidden graph.
pub(crate) fn flank_count_ctx(ctx: &DeckCtx) -> Result<usize> {
    let (a, b) = flank_sizes_ctx(ctx)?;
    Ok(usize::from(a > 0) + usize::from(b > 0))
}

fn require_outsider_preconditions(ctx: &DeckCtx) -> Result<usize> {
    require_connected_interval(ctx)?;
    if ctx.has_universal_vertex() {
        return Err(Error::NotApplicable("graph has a universal vertex"));
    }
    let fc = flank_count_ctx(ctx)?;
    if fc > 1 {
        return Err(Error::NotApplicable("graph has two flanks"));
    }
    Ok(fc)
}

/// Does the deleted vertex see exactly one twin class of maximum-degree
/// vertices? Checked through the card: the deleted vertex's maximum-degree
/// neighbors stay pairwise twins in the card and show up inside a twin class
/// of card degree maxdeg(G) - 1.
fn sees_one_max_class(ctx: &DeckCtx, c: &CardInfo) -> bool {
    let delta = ctx.max_degree;
    let k = c.neighbor_degrees.iter().filter(|&&d| d == delta).count();
    if k == 0 || delta == 0 {
        return false;
    }
    c.graph.twin_classes().iter().any(|cl| {
        cl.members.len() >= k && cl.members.iter().all(|v| c.graph.degree(v) == delta - 1)
    })
}

/// The extremal twin classes of degree >= maxdeg(G) - 1 in the canonical
/// order of the card's neighborhood-maximal vertices.
fn extremal_high_degree_classes(card: &Graph, delta: usize) -> Option<(VertexSet, VertexSet)> {
    let nnc = structure::neighborhood_maximal(card);
    let order = structure::max_degree_order(card, nnc).ok()?;
    let qualifies = |cl: &VertexSet| cl.iter().all(|v| card.degree(v) + 1 >= delta);
    let d1 = order.classes.iter().find(|cl| qualifies(cl))?;
    let d2 = order.classes.iter().rev().find(|cl| qualifies(cl))?;
    Some((*d1, *d2))
}

fn x_set_size(card: &Graph, delta: usize) -> Option<usize> {
    let (d1, d2) = extremal_high_degree_classes(card, delta)?;
    let span1 = structure::span(card, d1);
    let span2 = structure::span(card, d2);
    Some(
        card.vertices()
            .filter(|&x| {
                let nx = card.closed_nbrs(x);
                nx.is_subset_of(span1) || nx.is_subset_of(span2)
            })
            .count(),
    )
}

/// Cards of outsiders living in outsider classes of size at least two.
pub fn q_ge2_cards(d: &Deck) -> Result<Vec<(Card, usize)>> {
    let ctx = DeckCtx::new(d)?;
    require_outsider_preconditions(&ctx)?;
    q_ge2_cards_ctx(&ctx)
}

/// Whether the maximum-degree vertices form a single twin class, read from
/// the deck. With no universal vertex, N[V_max] = V(G) forces at least two
/// classes (one class would make its members universal). Otherwise a card of
/// a vertex at distance >= 2 from V_max shows the twin structure of V_max
/// unchanged: twins stay twins under any deletion, and two non-twins always
/// differ on a witness inside N[V_max].
fn vmax_single_class(ctx: &DeckCtx) -> bool {
    let delta = ctx.max_degree;
    let far_card = ctx
        .cards
        .iter()
        .find(|c| c.degree < delta && !c.neighbor_degrees.contains(&delta));
    match far_card {
        None => false,
        Some(c) => {
            let vmax: Vec<usize> =
                c.graph.vertices().filter(|&v| c.graph.degree(v) == delta).collect();
            vmax.iter().all(|&u| vmax.iter().all(|&v| u == v || c.graph.are_twins(u, v)))
        }
    }
}

pub(crate) fn q_ge2_cards_ctx(ctx: &DeckCtx) -> Result<Vec<(Card, usize)>> {
    let delta = ctx.max_degree;
    let g_flanks = flank_count_ctx(ctx)?;
    // When V_max is one twin class it equals the one-sided class, so deleting
    // an outsider drops the maximum degree; otherwise outsider deletions keep
    // the maximum degree and gain a flank. Cards of the other kind are noise.
    let drop_mode = vmax_single_class(ctx);
    let w_prime: Vec<&CardInfo> = ctx
        .cards
        .iter()
        .filter(|c| {
            if c.degree >= delta || !c.graph.is_connected() {
                return false;
            }
            if drop_mode {
                c.graph.max_degree() < delta
            } else {
                let gained_flank =
                    structure::flank_classes_unchecked(&c.graph).len() > g_flanks;
                c.graph.max_degree() == delta && gained_flank && sees_one_max_class(ctx, c)
            }
        })
        .collect();
    let w: Vec<&CardInfo> = if drop_mode {
        // keep the cards exposing the most twin classes of degree maxdeg - 1
        let class_count = |c: &CardInfo| {
            c.graph
                .twin_classes()
                .iter()
                .filter(|cl| cl.members.iter().all(|v| c.graph.degree(v) + 1 == delta))
                .count()
        };
        let best = w_prime.iter().map(|c| class_count(c)).max().unwrap_or(0);
        w_prime.into_iter().filter(|c| class_count(c) == best).collect()
    } else {
        w_prime
    };
    if w.is_empty() {
        return Ok(Vec::new());
    }
    let sizes: Vec<(usize, &CardInfo)> = w
        .iter()
        .filter_map(|c| x_set_size(&c.graph, delta).map(|s| (s, *c)))
        .collect();
    let min = match sizes.iter().map(|(s, _)| *s).min() {
        Some(m) => m,
        None => return Ok(Vec::new()),
    };
    let q: Vec<(Card, usize)> = sizes
        .into_iter()
        .filter(|(s, _)| *s == min)
        .map(|(_, c)| (c.cert.clone(), c.count))
        .collect();
    // a nonempty recovery must fit a legal outsider-size pattern; otherwise
    // the class structure it claims cannot exist and Q^(>=2) is empty
    if q2_sizes_consistent(ctx, &q, g_flanks) {
        Ok(q)
    } else {
        Ok(Vec::new())
    }
}

/// Checks that the candidate card set can arise as the deletions of the
/// outsiders in classes of size >= 2: with one flank there is a single class
/// (so at least two cards); with no flanks the per-card outsider counts must
/// assemble into {{1, |Q|}} or {{c1, c2}} with c1 + c2 = |Q| and matching
/// multiplicities.
fn q2_sizes_consistent(ctx: &DeckCtx, q: &[(Card, usize)], g_flanks: usize) -> bool {
    let total: usize = q.iter().map(|(_, k)| k).sum();
    if total == 0 {
        return true;
    }
    if g_flanks == 1 {
        return total >= 2;
    }
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let mut observed: Vec<usize> = Vec::new();
    for (cert, k) in q {
        let card = &by_cert[cert].graph;
        let union = card_outsider_union(card);
        for _ in 0..*k {
            observed.push(union.len());
        }
    }
    if observed.iter().all(|&s| s == 1) {
        return total >= 2;
    }
    let mut values = observed.clone();
    values.sort_unstable();
    values.dedup();
    match values[..] {
        [c] => c >= 2 && 2 * c == total,
        [c1, c2] => {
            let count1 = observed.iter().filter(|&&s| s == c1).count();
            let count2 = observed.iter().filter(|&&s| s == c2).count();
            c1 >= 1 && c2 >= 2 && c1 + c2 == total && count1 == c2 && count2 == c1
        }
        _ => false,
    }
}

/// Outsider classes of a card, computed structurally on the card.
fn card_outsider_union(card: &Graph) -> VertexSet {
    structure::one_sided_classes_lenient(card)
        .into_iter()
        .map(|cl| structure::outsiders_of(card, cl))
        .fold(VertexSet::EMPTY, |acc, o| acc.union(o))
}

/// The multiset {{|O1|, |O2|}} as an ordered pair (small, large).
pub fn outsider_sizes(d: &Deck) -> Result<(usize, usize)> {
    let ctx = DeckCtx::new(d)?;
    require_outsider_preconditions(&ctx)?;
    outsider_sizes_ctx(&ctx)
}

pub(crate) fn outsider_sizes_ctx(ctx: &DeckCtx) -> Result<(usize, usize)> {
    let q2 = q_ge2_cards_ctx(ctx)?;
    let q2_total: usize = q2.iter().map(|(_, k)| k).sum();
    let flank_count = flank_count_ctx(ctx)?;
    if q2_total == 0 {
        return Ok(if flank_count == 1 { (0, 1) } else { (1, 1) });
    }
    if flank_count == 1 {
        return Ok((0, q2_total.max(1)));
    }
    let by_cert: BTreeMap<&Card, &CardInfo> = ctx.cards.iter().map(|c| (&c.cert, c)).collect();
    let mut observed: Vec<usize> = Vec::new();
    let mut all_single = true;
    for (cert, k) in &q2 {
        let card = &by_cert[cert].graph;
        let union = card_outsider_union(card);
        if union.len() != 1 {
            all_single = false;
        }
        for _ in 0..*k {
            observed.push(union.len());
        }
    }
    if all_single {
        return Ok((1, q2_total));
    }
    observed.sort_unstable();
    observed.dedup();
    match observed.len() {
        1 => Ok((observed[0], observed[0])),
        2 => Ok((observed[0], observed[1])),
        _ => Err(Error::NotApplicable("outsider size observation is inconsistent")),
    }
}

/// Cards of outsiders living in outsider classes of size exactly one.
pub fn q1_cards(d: &Deck) -> Result<Vec<(Card, usize)>> {
    let ctx = DeckCtx::new(d)?;
    require_outsider_preconditions(&ctx)?;
    q1_cards_ctx(&ctx)
}

pub(crate) fn q1_cards_ctx(ctx: &DeckCtx) -> Result<Vec<(Card, usize)>> {
    let (o_small, o_large) = outsider_sizes_ctx(ctx)?;
    let expected = usize::from(o_small == 1) + usize::from(o_large == 1);
    if expected == 0 {
        return Ok(Vec::new());
    }
    let delta = ctx.max_degree;
    let g_flanks = flank_count_ctx(ctx)?;
    let candidates: Vec<&CardInfo> = ctx
        .cards
        .iter()
        .filter(|c| {
            // deleting the sole member of an outsider class keeps the
            // maximum degree: some rivet vertex is adjacent to the whole
            // class neighborhood
            c.degree < delta
                && c.graph.is_connected()
                && c.graph.max_degree() == delta
                && sees_one_max_class(ctx, c)
                && structure::flank_classes_unchecked(&c.graph).len() == g_flanks
        })
        .collect();
    // minimize the number of vertices confined to the span of either chain
    // class (the same kind of set the big-outsider recovery counts)
    let scored: Vec<(usize, &CardInfo)> = candidates
        .iter()
        .filter_map(|c| {
            let (ai1, ai2) = structure::a_infinity(&c.graph).ok()?;
            let span1 = structure::span(&c.graph, ai1);
            let span2 = structure::span(&c.graph, ai2);
            let measure = c
                .graph
                .vertices()
                .filter(|&x| {
                    let nx = c.graph.closed_nbrs(x);
                    nx.is_subset_of(span1) || nx.is_subset_of(span2)
                })
                .count();
            Some((measure, *c))
        })
        .collect();
    let min = match scored.iter().map(|(s, _)| *s).min() {
        Some(m) => m,
        None => return Ok(Vec::new()),
    };
    Ok(scored
        .into_iter()
        .filter(|(s, _)| *s == min)
        .map(|(_, c)| (c.cert.clone(), c.count))
        .collect())
}

/// All outsider cards: the union of the size-one and size->=2 recoveries.
pub fn outsider_cards(d: &Deck) -> Result<Vec<(Card, usize)>> {
    let ctx = DeckCtx::new(d)?;
    require_outsider_preconditions(&ctx)?;
    let mut merged: BTreeMap<Card, usize> = BTreeMap::new();
    for (c, k) in q1_cards_ctx(&ctx)?.into_iter().chain(q_ge2_cards_ctx(&ctx)?) {
        *merged.entry(c).or_insert(0) += k;
    }
    Ok(merged.into_iter().collect())
}

/// Graph-reading counterparts of the deck procedures; the only place the
/// hidden graph is consulted. These are the oracles the deck-only versions
/// are diffed against.
pub mod direct {
    use super::*;

    /// E computed from the graph: deletions keeping connectivity, the maximum
    /// degree, and the bulk neighborhood size.
    pub fn multiset_e_of(g: &Graph) -> Result<Vec<(Card, usize)>> {
        let delta = g.max_degree();
        let bulk_closed = g.closed_nbrs_set(structure::bulk(g)?).len();
        let mut out: BTreeMap<Card, usize> = BTreeMap::new();
        for v in g.vertices() {
            let card = g.remove_vertex(v);
            if card.is_connected()
                && card.max_degree() == delta
                && card.closed_nbrs_set(structure::bulk_unchecked(&card)).len() == bulk_closed
            {
                *out.entry(certificate_unchecked(&card)).or_insert(0) += 1;
            }
        }
        Ok(out.into_iter().collect())
    }

    pub fn flank_sizes_of(g: &Graph) -> Result<(usize, usize)> {
        let r = structure::flanks(g)?;
        let mut s = [r.0.len(), r.1.len()];
        s.sort_unstable();
        Ok((s[0], s[1]))
    }

    pub fn has_no_flanks_of(g: &Graph) -> Result<bool> {
        Ok(structure::flank_vertices(g)?.is_empty())
    }

    pub fn outsider_sizes_of(g: &Graph) -> Result<(usize, usize)> {
        Ok(structure::structure_report(g)?.outsider_size_multiset())
    }

    fn outsider_cards_by(g: &Graph, keep: impl Fn(usize) -> bool) -> Result<Vec<(Card, usize)>> {
        let (o1, o2) = structure::outsiders(g)?;
        let mut out: BTreeMap<Card, usize> = BTreeMap::new();
        let mut seen = VertexSet::EMPTY;
        for class in [o1, o2] {
            if !keep(class.len()) {
                continue;
            }
            for v in class.minus(seen).iter() {
                *out.entry(certificate_unchecked(&g.remove_vertex(v))).or_insert(0) += 1;
            }
            seen = seen.union(class);
        }
        Ok(out.into_iter().collect())
    }

    pub fn q_ge2_of(g: &Graph) -> Result<Vec<(Card, usize)>> {
        outsider_cards_by(g, |len| len >= 2)
    }

    pub fn q1_of(g: &Graph) -> Result<Vec<(Card, usize)>> {
        outsider_cards_by(g, |len| len == 1)
    }

    pub fn outsider_cards_of(g: &Graph) -> Result<Vec<(Card, usize)>> {
        outsider_cards_by(g, |len| len >= 1)
    }
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

    fn caterpillar2() -> Graph {
        Graph::from_edges(7, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5), (5, 6)])
    }

    fn double_tail() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (0, 4), (3, 5), (4, 6)])
    }

    fn barbell() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (2, 3), (1, 4), (1, 5), (4, 5)])
    }

    #[test]
    fn deck_examples() {
        // K2 and its complement share the deck of two single vertices
        assert_eq!(Deck::of(&k(2)), Deck::of(&Graph::new(2)));
        // P3 deck: two K2 cards and one empty-pair card
        let d = Deck::of(&path(3));
        assert_eq!(d.n(), 3);
        let counts: Vec<usize> = d.entries().map(|(_, k)| k).collect();
        assert_eq!(counts, vec![1, 2]);
        // K3: three identical K2 cards
        let d = Deck::of(&k(3));
        assert_eq!(d.entries().count(), 1);
        assert_eq!(d.total_multiplicity(), 3);
    }

    #[test]
    fn deck_json_roundtrip() {
        let d = Deck::of(&caterpillar2());
        let j = d.to_json();
        assert_eq!(Deck::from_json(&j).unwrap(), d);
        assert!(j.starts_with("{\"n\":7,"));
    }

    #[test]
    fn degree_info_examples() {
        let ctx = DeckCtx::new(&Deck::of(&k(3))).unwrap();
        assert!(ctx.cards.iter().all(|c| c.degree == 2));

        let ctx = DeckCtx::new(&Deck::of(&path(3))).unwrap();
        for c in &ctx.cards {
            if c.graph.edge_count() == 0 {
                assert_eq!(c.degree, 2);
            } else {
                assert_eq!(c.degree, 1);
            }
        }

        let ctx = DeckCtx::new(&Deck::of(&path(5))).unwrap();
        let mut degs: Vec<usize> = ctx.expanded().map(|c| c.degree).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);
        assert_eq!(ctx.degree_multiset, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn degree_info_rejects_tiny_decks() {
        assert!(matches!(DeckCtx::new(&Deck::of(&k(2))), Err(Error::OrderTooSmall { n: 2 })));
    }

    #[test]
    fn neighbor_degrees_match_truth() {
        for g in [path(5), caterpillar2(), double_tail(), barbell(), k(4)] {
            let ctx = DeckCtx::new(&Deck::of(&g)).unwrap();
            for v in g.vertices() {
                let cert = certificate_unchecked(&g.remove_vertex(v));
                let info = ctx.cards.iter().find(|c| c.cert == cert).unwrap();
                assert_eq!(info.degree, g.degree(v));
                let mut truth: Vec<usize> = g.nbrs(v).iter().map(|u| g.degree(u)).collect();
                truth.sort_unstable();
                assert_eq!(info.neighbor_degrees, truth, "vertex {} of {:?}", v, g);
            }
        }
    }

    #[test]
    fn has_no_flanks_examples() {
        assert!(has_no_flanks(&Deck::of(&barbell())).unwrap());
        assert!(!has_no_flanks(&Deck::of(&caterpillar2())).unwrap());
        assert!(has_no_flanks(&Deck::of(&k(4))).unwrap());
    }

    #[test]
    fn multiset_e_examples() {
        // caterpillar2: only the tail-tip deletion stays connected
        let e = multiset_e(&Deck::of(&caterpillar2())).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].1, 1);
        let cat1 = Graph::from_edges(6, &[(2, 0), (2, 1), (2, 3), (2, 4), (4, 5)]);
        assert_eq!(e[0].0, certificate_unchecked(&cat1));

        // double tail: both tail tips
        let e = multiset_e(&Deck::of(&double_tail())).unwrap();
        let total: usize = e.iter().map(|(_, k)| k).sum();
        assert_eq!(total, 2);

        // barbell: no flanks, empty E
        assert!(multiset_e(&Deck::of(&barbell())).unwrap().is_empty());
    }

    #[test]
    fn flank_sizes_examples() {
        assert_eq!(flank_sizes(&Deck::of(&double_tail())).unwrap(), (1, 1));
        assert_eq!(flank_sizes(&Deck::of(&caterpillar2())).unwrap(), (0, 2));
        assert_eq!(flank_sizes(&Deck::of(&k(4))).unwrap(), (0, 0));
    }

    #[test]
    fn q_and_outsider_examples() {
        let bb = Deck::of(&barbell());
        let q2 = q_ge2_cards(&bb).unwrap();
        assert_eq!(q2.iter().map(|(_, k)| k).sum::<usize>(), 4);
        assert!(q1_cards(&bb).unwrap().is_empty());
        assert_eq!(outsider_sizes(&bb).unwrap(), (2, 2));

        let p5 = Deck::of(&path(5));
        assert!(q_ge2_cards(&p5).unwrap().is_empty());
        let q1 = q1_cards(&p5).unwrap();
        assert_eq!(q1.iter().map(|(_, k)| k).sum::<usize>(), 2);
        assert_eq!(outsider_sizes(&p5).unwrap(), (1, 1));

        let cat = Deck::of(&caterpillar2());
        let q2 = q_ge2_cards(&cat).unwrap();
        assert_eq!(q2.iter().map(|(_, k)| k).sum::<usize>(), 3);
        assert!(q1_cards(&cat).unwrap().is_empty());
        assert_eq!(outsider_sizes(&cat).unwrap(), (0, 3));
    }

    #[test]
    fn deck_only_matches_direct_on_named_graphs() {
        for g in [path(5), path(6), caterpillar2(), double_tail(), barbell()] {
            let d = Deck::of(&g);
            assert_eq!(
                flank_sizes(&d).unwrap(),
                direct::flank_sizes_of(&g).unwrap(),
                "flank sizes on {:?}",
                g
            );
            assert_eq!(multiset_e(&d).unwrap(), direct::multiset_e_of(&g).unwrap(), "E on {:?}", g);
            if direct::flank_sizes_of(&g).unwrap().0 == 0 && !g.has_universal_vertex() {
                assert_eq!(
                    outsider_sizes(&d).unwrap(),
                    direct::outsider_sizes_of(&g).unwrap(),
                    "outsider sizes on {:?}",
                    g
                );
                assert_eq!(q_ge2_cards(&d).unwrap(), direct::q_ge2_of(&g).unwrap(), "q2 on {:?}", g);
                assert_eq!(q1_cards(&d).unwrap(), direct::q1_of(&g).unwrap(), "q1 on {:?}", g);
            }
        }
    }
}
