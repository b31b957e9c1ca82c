//! Heuristic upper bounds via chordal completion.
//!
//! The graph is triangulated with the LB-Triang scheme (processing the
//! vertex that induces the fewest fill edges at each step) and a pruned
//! variant of the separator branching then builds a treedepth decomposition
//! of the chordal supergraph. Any decomposition of the supergraph is valid
//! for the original graph, so the result is always a certified upper bound.
//! Chordal graphs keep this cheap: their minimal separators come out of a
//! maximum-cardinality-search order, at most one per vertex.

use rustc_hash::{FxHashMap, FxHashSet};

use crate::bounds::{CompactForest, NO_PARENT};
use crate::graph::Graph;
use crate::separators::is_minimal_separator;
use crate::solver::Decomposition;
use crate::vset::VertexSet;

/// A chordal supergraph of the input on the same vertex set.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub graph: Graph,
    pub fill_edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("input graph is not chordal")]
pub struct NotChordal;

/// Maximum-cardinality search over `G[x]`: visit order plus, per position,
/// the neighbors already visited (`madj`). The reverse visit order is a
/// perfect elimination order iff `G[x]` is chordal.
fn mcs(g: &Graph, x: &VertexSet) -> (Vec<usize>, Vec<VertexSet>) {
    let t = x.len();
    let mut order = Vec::with_capacity(t);
    let mut madj = Vec::with_capacity(t);
    let mut visited = VertexSet::empty(g.n());
    let mut weight = vec![0usize; g.n()];
    let mut remaining = x.clone();
    for _ in 0..t {
        let mut best = usize::MAX;
        let mut best_w = 0;
        for v in &remaining {
            if best == usize::MAX || weight[v] > best_w {
                best = v;
                best_w = weight[v];
            }
        }
        remaining.remove(best);
        order.push(best);
        madj.push(g.adjacency(best).intersection(&visited));
        visited.insert(best);
        for w in &g.adjacency(best).intersection(&remaining) {
            weight[w] += 1;
        }
    }
    (order, madj)
}

/// Chordality check for `G[x]` (Tarjan–Yannakakis follower test on an MCS
/// order).
pub fn is_chordal_within(g: &Graph, x: &VertexSet) -> bool {
    let (order, madj) = mcs(g, x);
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for i in 0..order.len() {
        if madj[i].is_empty() {
            continue;
        }
        let follower = madj[i].iter().max_by_key(|&v| pos[v]).unwrap();
        let mut rest = madj[i].clone();
        rest.remove(follower);
        if !rest.is_subset_of(&madj[pos[follower]]) {
            return false;
        }
    }
    true
}

pub fn is_chordal(g: &Graph) -> bool {
    is_chordal_within(g, &g.vertex_set())
}

/// Size of the largest clique of a chordal `G[x]`, off the MCS order.
fn chordal_max_clique(madj: &[VertexSet]) -> usize {
    madj.iter().map(|m| m.len() + 1).max().unwrap_or(0)
}

/// LB-Triang with the min-fill step heuristic: each round processes the
/// vertex whose separator saturation adds the fewest edges, then saturates
/// `N(C)` for every component `C` of the current graph minus the closed
/// neighborhood. The result is chordal by construction and is re-checked.
pub fn lb_triang(g: &Graph) -> Triangulation {
    let mut h = g.clone();
    let full = g.vertex_set();
    let mut unprocessed = full.clone();
    let mut fill_edges = Vec::new();
    while !unprocessed.is_empty() {
        let mut best_v = usize::MAX;
        let mut best_fill: Option<FxHashSet<(usize, usize)>> = None;
        for v in &unprocessed {
            let fill = saturation_fill(&h, &full, v);
            if best_fill.as_ref().is_none_or(|b| fill.len() < b.len()) {
                best_v = v;
                best_fill = Some(fill);
            }
        }
        let fill = best_fill.unwrap();
        let mut pairs: Vec<(usize, usize)> = fill.into_iter().collect();
        pairs.sort_unstable();
        for (a, b) in pairs {
            h.add_edge(a, b);
            fill_edges.push((a, b));
        }
        unprocessed.remove(best_v);
    }
    assert!(is_chordal(&h), "LB-Triang produced a non-chordal graph");
    Triangulation {
        graph: h,
        fill_edges,
    }
}

/// The distinct non-adjacent pairs inside the component boundaries of
/// `h \ N[v]`: exactly the edges saturating v's close separators.
fn saturation_fill(h: &Graph, full: &VertexSet, v: usize) -> FxHashSet<(usize, usize)> {
    let closed = h.closed_neighborhood(v);
    let rest = full.difference(&closed);
    let mut fill = FxHashSet::default();
    for comp in h.components(full, &rest) {
        let boundary: Vec<usize> = comp.boundary.iter().collect();
        for (i, &a) in boundary.iter().enumerate() {
            for &b in &boundary[i + 1..] {
                if !h.adjacency(a).contains(b) {
                    fill.insert((a, b));
                }
            }
        }
    }
    fill
}

const EXPLORE_WIDTH: usize = 3;

struct ChordalHeuristic<'g> {
    h: &'g Graph,
    memo: FxHashMap<VertexSet, CompactForest>,
}

impl<'g> ChordalHeuristic<'g> {
    fn chain(x: &VertexSet) -> CompactForest {
        let mut prev = NO_PARENT;
        let links = x
            .iter()
            .map(|v| {
                let l = (v as u32, prev);
                prev = v as u32;
                l
            })
            .collect();
        CompactForest {
            links,
            depth: x.len() as u32,
        }
    }

    fn solve(&mut self, x: &VertexSet) -> CompactForest {
        if let Some(hit) = self.memo.get(x) {
            return hit.clone();
        }
        let pieces = self.h.pieces(x);
        if pieces.len() > 1 {
            let mut links = Vec::new();
            let mut depth = 0;
            for p in &pieces {
                let sub = self.solve(p);
                depth = depth.max(sub.depth);
                links.extend(sub.links);
            }
            return CompactForest { links, depth };
        }
        if self.h.is_clique(x) {
            return Self::chain(x);
        }
        let (_, madj) = mcs(self.h, x);
        let clique_floor = chordal_max_clique(&madj) as u32;

        let mut seen = FxHashSet::default();
        let mut candidates: Vec<(usize, usize, VertexSet)> = Vec::new();
        for m in madj {
            if m.is_empty() || seen.contains(&m) {
                continue;
            }
            seen.insert(m.clone());
            if !is_minimal_separator(self.h, x, &m) {
                continue;
            }
            let rest = x.difference(&m);
            candidates.push((m.len(), self.h.largest_piece(&rest), m));
        }
        candidates.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then_with(|| a.1.cmp(&b.1))
                .then_with(|| a.2.cmp(&b.2))
        });
        candidates.truncate(EXPLORE_WIDTH);

        let mut best: Option<CompactForest> = None;
        for (_, _, s) in &candidates {
            let rest = x.difference(s);
            let mut links: Vec<(u32, u32)> = Vec::new();
            let mut prev = NO_PARENT;
            for v in s {
                links.push((v as u32, prev));
                prev = v as u32;
            }
            let anchor = prev;
            let mut depth = 0;
            for piece in self.h.pieces(&rest) {
                let sub = self.solve(&piece);
                depth = depth.max(sub.depth);
                links.extend(sub.links.into_iter().map(|(v, p)| {
                    if p == NO_PARENT {
                        (v, anchor)
                    } else {
                        (v, p)
                    }
                }));
            }
            let total = CompactForest {
                links,
                depth: s.len() as u32 + depth,
            };
            if best.as_ref().is_none_or(|b| total.depth < b.depth) {
                best = Some(total);
            }
            if best.as_ref().unwrap().depth == clique_floor {
                break; // cannot beat the largest clique
            }
        }
        // a connected non-clique chordal graph always has a minimal
        // separator among the madj sets, but fall back to a chain if the
        // exploration came up empty
        let best = best.unwrap_or_else(|| Self::chain(x));
        self.memo.insert(x.clone(), best.clone());
        best
    }
}

/// A valid treedepth decomposition of a chordal graph, produced by the
/// branching recursion restricted to the (linearly many) minimal separators
/// of the chordal graph, exploring only the best few candidates per node.
pub fn chordal_td_heuristic(h: &Graph) -> Result<Decomposition, NotChordal> {
    if !is_chordal(h) {
        return Err(NotChordal);
    }
    let full = h.vertex_set();
    if full.is_empty() {
        return Ok(Decomposition::empty(h.n()));
    }
    let mut ctx = ChordalHeuristic {
        h,
        memo: FxHashMap::default(),
    };
    let forest = ctx.solve(&full);
    Ok(Decomposition::from_compact(h.n(), &full, &forest))
}

/// Upper bound for an arbitrary graph: triangulate each connected component
/// with LB-Triang, run the chordal heuristic on the completion, and stitch
/// the per-component forests together. The returned decomposition is always
/// valid for `g`.
pub fn compute_upper_bound(g: &Graph) -> (usize, Decomposition) {
    let n = g.n();
    if n == 0 {
        return (0, Decomposition::empty(0));
    }
    let full = g.vertex_set();
    let mut parent = vec![None; n];
    let mut depth = 0usize;
    for comp in g.components(&full, &full) {
        let (sub, map) = g.induced(&comp.vertices);
        let tri = lb_triang(&sub);
        let dec = chordal_td_heuristic(&tri.graph).expect("triangulation must be chordal");
        depth = depth.max(dec.depth());
        for (local, &global) in map.iter().enumerate() {
            parent[global] = dec.parent(local).map(|p| map[p]);
        }
    }
    let dec = Decomposition::new(full, parent, depth);
    debug_assert!(crate::solver::verify(g, &dec));
    (depth, dec)
}
