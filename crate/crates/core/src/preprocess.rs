//! Treedepth-preserving reductions and decomposition reconstruction.
//!
//! Three rules run to a fixed point before the search:
//!
//! * tree elimination: a subset-maximal pendant tree hanging off a single
//!   attachment vertex is replaced by a path of cliques whose sizes are the
//!   ranks an optimal vertex ranking of the tree exposes at the attachment;
//! * a simplicial rule: a vertex whose neighborhood is contained in some
//!   clique neighborhood is deleted (its reinsertion point is remembered);
//! * the shared-neighborhood rule: an edge may be added between non-adjacent
//!   vertices whose minimum vertex cut reaches a certified upper bound.
//!
//! Every rule logs a trace event carrying enough data to lift a
//! decomposition of the reduced graph back to the original at equal depth.
//! Lifting works in the vertex-ranking formulation (rank = depth from the
//! bottom), where the reconstruction arguments are cleanest.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rustc_hash::FxHashMap;

use crate::graph::Graph;
use crate::solver::Decomposition;
use crate::upper_bound::compute_upper_bound;
use crate::vset::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("input graph is not a tree")]
pub struct NotATree;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("decomposition does not fit the reduced graph of this trace")]
pub struct LiftError;

/// The set of ranks visible from a vertex, strictly increasing.
///
/// Rank sets order by their symmetric difference: `R < R'` iff
/// `max(R \ R') < max(R' \ R)`, with `max(∅) = -∞`. Equivalently,
/// descending-lexicographic with exhausted-first smaller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSet {
    ranks: Vec<u32>,
}

impl RankSet {
    pub fn from_ranks(mut ranks: Vec<u32>) -> Self {
        ranks.sort_unstable();
        ranks.dedup();
        assert!(ranks.first().is_none_or(|&r| r >= 1));
        RankSet { ranks }
    }

    fn from_mask(mask: u64) -> Self {
        RankSet {
            ranks: (0..64)
                .filter(|i| mask >> i & 1 != 0)
                .map(|i| i as u32 + 1)
                .collect(),
        }
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn max_rank(&self) -> Option<u32> {
        self.ranks.last().copied()
    }

    /// Total vertex count of the replacement construction.
    pub fn sum(&self) -> usize {
        self.ranks.iter().map(|&r| r as usize).sum()
    }
}

impl PartialOrd for RankSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RankSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.ranks.iter().rev();
        let mut b = other.ranks.iter().rev();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(y),
                _ => {}
            }
        }
    }
}

/// Optimal vertex ranking of a tree, minimizing the rank set visible from
/// `root`. Bottom-up combination of the children's critical lists: a vertex
/// takes the smallest rank that no child exposes and that exceeds every rank
/// exposed by two or more children. Returns the ranking (indexed by vertex)
/// and the visible set `c+(root)`.
pub fn schaffer_ranking(tree: &Graph, root: usize) -> Result<(Vec<u32>, RankSet), NotATree> {
    let n = tree.n();
    if n == 0 || root >= n {
        return Err(NotATree);
    }
    let full = tree.vertex_set();
    if tree.edge_count() != n - 1 || !tree.is_connected(&full) {
        return Err(NotATree);
    }
    // BFS order rooted at `root`
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::singleton(n, root);
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in tree.adjacency(u) {
            if !seen.contains(w) {
                seen.insert(w);
                parent[w] = u;
                order.push(w);
            }
        }
    }

    let mut list = vec![0u64; n];
    let mut rank = vec![0u32; n];
    for &u in order.iter().rev() {
        let mut exposed = 0u64;
        let mut duplicated = 0u64;
        for w in tree.adjacency(u) {
            if w != parent[u] {
                duplicated |= exposed & list[w];
                exposed |= list[w];
            }
        }
        let blocked = if duplicated == 0 {
            0
        } else {
            (1u64 << (64 - duplicated.leading_zeros())) - 1
        };
        let allowed = !exposed & !blocked;
        let bit = allowed.trailing_zeros() as u64;
        debug_assert!(bit < 64);
        rank[u] = bit as u32 + 1;
        list[u] = (exposed & !((1u64 << (bit + 1)) - 1)) | (1u64 << bit);
    }
    Ok((rank, RankSet::from_mask(list[root])))
}

/// Ranks derived from a decomposition: `rank(v) = depth - depth(v) + 1`.
pub fn decomposition_to_ranking(dec: &Decomposition) -> Vec<u32> {
    let depths = dec
        .compute_depths()
        .expect("ranking requires a well-formed decomposition");
    let mut ranks = vec![0u32; depths.len()];
    for v in dec.members() {
        ranks[v] = (dec.depth() - depths[v] + 1) as u32;
    }
    ranks
}

/// Builds the elimination forest of a valid ranking: the unique maximum-rank
/// vertex of every connected piece becomes the root, recursively.
pub fn ranking_to_decomposition(g: &Graph, members: &VertexSet, ranks: &[u32]) -> Decomposition {
    let mut parent = vec![None; g.n()];
    let mut max_depth = 0usize;
    let mut stack: Vec<(VertexSet, Option<usize>, usize)> = g
        .components(members, members)
        .into_iter()
        .map(|c| (c.vertices, None, 0))
        .collect();
    while let Some((set, par, par_depth)) = stack.pop() {
        let top = set.iter().map(|v| ranks[v]).max().unwrap();
        let mut root = usize::MAX;
        for v in &set {
            if ranks[v] == top {
                assert!(
                    root == usize::MAX,
                    "ranking has two visible maxima in one component"
                );
                root = v;
            }
        }
        parent[root] = par;
        let d = par_depth + 1;
        max_depth = max_depth.max(d);
        let mut rest = set;
        rest.remove(root);
        for c in g.components(&rest, &rest) {
            stack.push((c.vertices, Some(root), d));
        }
    }
    Decomposition::new(members.clone(), parent, max_depth)
}

/// Validity of a vertex ranking on `G[members]`: equal ranks must be
/// separated by a higher rank on every connecting path.
pub fn is_valid_ranking(g: &Graph, members: &VertexSet, ranks: &[u32]) -> bool {
    let distinct: BTreeSet<u32> = members.iter().map(|v| ranks[v]).collect();
    for &r in &distinct {
        let level = VertexSet::from_indices(g.n(), members.iter().filter(|&v| ranks[v] <= r));
        for comp in g.components(&level, &level) {
            if comp.vertices.iter().filter(|&v| ranks[v] == r).count() > 1 {
                return false;
            }
        }
    }
    true
}

/// Ranks visible from `start` inside `G[domain]`: rank `r` is visible when
/// some vertex of rank `r` is reachable through vertices ranked at most `r`.
fn visible_ranks(g: &Graph, domain: &VertexSet, start: usize, ranks: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let distinct: BTreeSet<u32> = domain.iter().map(|v| ranks[v]).collect();
    for &r in distinct.iter() {
        if r < ranks[start] {
            continue;
        }
        let restricted = VertexSet::from_indices(g.n(), domain.iter().filter(|&v| ranks[v] <= r));
        let comp = g.component_of(&restricted, start);
        if comp.iter().any(|v| ranks[v] == r) {
            out.push(r);
        }
    }
    out
}

enum ReductionEvent {
    /// `tree` (containing `attach`) was replaced by a path `path_new` whose
    /// vertex `i` carries a clique of `rank_set[i] - 1` fresh vertices;
    /// `path_new[0]` inherited the attachment's external edges.
    TreeReplace {
        before: Graph,
        after: Graph,
        /// new index -> old index for the untouched vertices
        kept: Vec<usize>,
        /// old indices of the replaced tree, ascending
        tree: Vec<usize>,
        attach: usize,
        /// optimal ranking of the tree, aligned with `tree`
        ranking: Vec<u32>,
        rank_set: RankSet,
        path_new: Vec<usize>,
        cliques_new: Vec<Vec<usize>>,
    },
    /// `deleted` had its neighborhood contained in the clique neighborhood
    /// of `keeper` and was removed.
    SimplicialDelete {
        before: Graph,
        after: Graph,
        kept: Vec<usize>,
        deleted: usize,
        keeper: usize,
    },
    /// Edges added between vertex pairs whose minimum vertex cut reached the
    /// upper bound; the vertex set is unchanged.
    EdgeAdditions { before: Graph, after: Graph },
}

impl ReductionEvent {
    fn before(&self) -> &Graph {
        match self {
            ReductionEvent::TreeReplace { before, .. } => before,
            ReductionEvent::SimplicialDelete { before, .. } => before,
            ReductionEvent::EdgeAdditions { before, .. } => before,
        }
    }

    fn after(&self) -> &Graph {
        match self {
            ReductionEvent::TreeReplace { after, .. } => after,
            ReductionEvent::SimplicialDelete { after, .. } => after,
            ReductionEvent::EdgeAdditions { after, .. } => after,
        }
    }
}

/// Ordered log of applied reductions; replaying it in reverse lifts a
/// decomposition of the reduced graph to one of the original graph with the
/// same depth.
#[derive(Default)]
pub struct ReductionTrace {
    events: Vec<ReductionEvent>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    fn extend(&mut self, other: ReductionTrace) {
        self.events.extend(other.events);
    }
}

/// Replaces pendant trees until none remains. Each replacement strictly
/// shrinks the graph; constructions that would not shrink are left alone
/// (they are already in reduced form).
pub fn tree_eliminate(g: &Graph) -> (Graph, ReductionTrace) {
    let mut cur = g.clone();
    let mut trace = ReductionTrace::default();
    while let Some((after, event)) = find_tree_reduction(&cur) {
        trace.events.push(event);
        cur = after;
    }
    (cur, trace)
}

fn find_tree_reduction(cur: &Graph) -> Option<(Graph, ReductionEvent)> {
    let full = cur.vertex_set();
    for comp in cur.components(&full, &full) {
        let cn = comp.vertices.len();
        let edges = cur.edges_within(&comp.vertices);
        if edges == cn.saturating_sub(1) {
            // the whole component is a tree; carve off everything except one leaf
            if cn < 3 {
                continue;
            }
            let leaves: Vec<usize> = comp
                .vertices
                .iter()
                .filter(|&u| cur.adjacency(u).intersection(&comp.vertices).len() == 1)
                .collect();
            for r in leaves {
                let mut t = comp.vertices.clone();
                t.remove(r);
                let v = cur
                    .adjacency(r)
                    .intersection(&comp.vertices)
                    .first()
                    .unwrap();
                if let Some(found) = apply_tree_reduction(cur, &t, v) {
                    return Some(found);
                }
            }
        } else {
            // peel pendant trees off the 2-core
            let mut alive = comp.vertices.clone();
            let mut deg: Vec<usize> = (0..cur.n())
                .map(|v| {
                    if alive.contains(v) {
                        cur.adjacency(v).intersection(&alive).len()
                    } else {
                        0
                    }
                })
                .collect();
            let mut queue: Vec<usize> = alive.iter().filter(|&v| deg[v] == 1).collect();
            while let Some(v) = queue.pop() {
                if !alive.contains(v) || deg[v] != 1 {
                    continue;
                }
                alive.remove(v);
                for w in &cur.adjacency(v).intersection(&alive) {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        queue.push(w);
                    }
                }
            }
            let peeled = comp.vertices.difference(&alive);
            if peeled.is_empty() {
                continue;
            }
            // group pendant pieces by their unique anchor in the 2-core
            let mut by_anchor: FxHashMap<usize, VertexSet> = FxHashMap::default();
            for piece in cur.components(&comp.vertices, &peeled) {
                debug_assert_eq!(piece.boundary.len(), 1, "pendant piece with two anchors");
                let anchor = piece.boundary.first().unwrap();
                by_anchor
                    .entry(anchor)
                    .or_insert_with(|| VertexSet::empty(cur.n()))
                    .union_with(&piece.vertices);
            }
            let mut anchors: Vec<usize> = by_anchor.keys().copied().collect();
            anchors.sort_unstable();
            for anchor in anchors {
                let mut t = by_anchor[&anchor].clone();
                t.insert(anchor);
                if let Some(found) = apply_tree_reduction(cur, &t, anchor) {
                    return Some(found);
                }
            }
        }
    }
    None
}

fn apply_tree_reduction(
    cur: &Graph,
    tree: &VertexSet,
    attach: usize,
) -> Option<(Graph, ReductionEvent)> {
    debug_assert!(tree.contains(attach));
    debug_assert!(tree
        .iter()
        .all(|t| t == attach || cur.adjacency(t).is_subset_of(tree)));

    let (local_tree, map) = cur.induced(tree);
    let local_attach = map.binary_search(&attach).unwrap();
    let (local_ranks, rank_set) =
        schaffer_ranking(&local_tree, local_attach).expect("pendant subgraph must be a tree");
    if rank_set.sum() >= tree.len() {
        return None; // already in reduced form
    }

    let kept: Vec<usize> = (0..cur.n()).filter(|v| !tree.contains(*v)).collect();
    let mut old_to_new = vec![usize::MAX; cur.n()];
    for (new, &old) in kept.iter().enumerate() {
        old_to_new[old] = new;
    }
    let p = rank_set.len();
    let path_new: Vec<usize> = (kept.len()..kept.len() + p).collect();
    let mut next_id = kept.len() + p;
    let mut cliques_new = Vec::with_capacity(p);
    for &r in rank_set.ranks() {
        let clique: Vec<usize> = (next_id..next_id + (r as usize - 1)).collect();
        next_id += r as usize - 1;
        cliques_new.push(clique);
    }
    let n_after = next_id;

    let mut edges = Vec::new();
    for (new_u, &old_u) in kept.iter().enumerate() {
        for old_w in cur.adjacency(old_u) {
            if old_w > old_u && !tree.contains(old_w) {
                edges.push((new_u, old_to_new[old_w]));
            }
        }
    }
    for ext in &cur.adjacency(attach).difference(tree) {
        edges.push((old_to_new[ext], path_new[0]));
    }
    for i in 1..p {
        edges.push((path_new[i - 1], path_new[i]));
    }
    for (i, clique) in cliques_new.iter().enumerate() {
        for (a, &x) in clique.iter().enumerate() {
            edges.push((path_new[i], x));
            for &y in &clique[a + 1..] {
                edges.push((x, y));
            }
        }
    }
    let after = Graph::new(n_after, edges);

    let tree_vec: Vec<usize> = map;
    let event = ReductionEvent::TreeReplace {
        before: cur.clone(),
        after: after.clone(),
        kept,
        tree: tree_vec,
        attach,
        ranking: local_ranks,
        rank_set,
        path_new,
        cliques_new,
    };
    Some((after, event))
}

/// Deletes vertices whose neighborhood is contained in the (clique)
/// neighborhood of another vertex. The upper bound is accepted for interface
/// parity with the other rules; this conservative trigger does not need it.
pub fn simplicial_rule(g: &Graph, _ub: usize) -> (Graph, ReductionTrace) {
    let mut cur = g.clone();
    let mut trace = ReductionTrace::default();
    'restart: loop {
        let n = cur.n();
        if n < 2 {
            break;
        }
        let simplicial: Vec<bool> = (0..n).map(|u| cur.is_clique(cur.adjacency(u))).collect();
        for v in 0..n {
            for (u, &u_simplicial) in simplicial.iter().enumerate() {
                if u == v || !u_simplicial {
                    continue;
                }
                if !cur.adjacency(v).is_subset_of(cur.adjacency(u)) {
                    continue;
                }
                let mut keep = cur.vertex_set();
                keep.remove(v);
                let (after, kept) = cur.induced(&keep);
                trace.events.push(ReductionEvent::SimplicialDelete {
                    before: cur.clone(),
                    after: after.clone(),
                    kept,
                    deleted: v,
                    keeper: u,
                });
                cur = after;
                continue 'restart;
            }
        }
        break;
    }
    (cur, trace)
}

/// True iff at least `k` internally vertex-disjoint paths join `s` and `t`
/// (unit-capacity vertex-split max-flow with early exit).
fn min_vertex_cut_at_least(g: &Graph, s: usize, t: usize, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    let n = g.n();
    // node 2x = in-copy, 2x+1 = out-copy
    let mut heads: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut to: Vec<usize> = Vec::new();
    let mut cap: Vec<u32> = Vec::new();
    let mut add = |heads: &mut Vec<Vec<usize>>, a: usize, b: usize, c: u32| {
        heads[a].push(to.len());
        to.push(b);
        cap.push(c);
        heads[b].push(to.len());
        to.push(a);
        cap.push(0);
    };
    let big = k as u32;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add(&mut heads, 2 * v, 2 * v + 1, c);
    }
    for v in 0..n {
        for w in g.adjacency(v) {
            add(&mut heads, 2 * v + 1, 2 * w, big);
        }
    }
    let src = 2 * s + 1;
    let dst = 2 * t;
    let mut flow = 0usize;
    let mut pred = vec![usize::MAX; 2 * n];
    while flow < k {
        for p in pred.iter_mut() {
            *p = usize::MAX;
        }
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        pred[src] = usize::MAX - 1;
        let mut reached = false;
        'bfs: while let Some(a) = queue.pop_front() {
            for &e in &heads[a] {
                if cap[e] > 0 && pred[to[e]] == usize::MAX {
                    pred[to[e]] = e;
                    if to[e] == dst {
                        reached = true;
                        break 'bfs;
                    }
                    queue.push_back(to[e]);
                }
            }
        }
        if !reached {
            return false;
        }
        let mut a = dst;
        while a != src {
            let e = pred[a];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            a = to[e ^ 1];
        }
        flow += 1;
    }
    true
}

/// Adds an edge between every non-adjacent pair whose minimum vertex cut is
/// at least `ub`, iterating to a fixed point. `ub` must be a certified upper
/// bound on the treedepth; the additions preserve it.
pub fn shared_neighborhood_rule(g: &Graph, ub: usize) -> (Graph, ReductionTrace) {
    let before = g.clone();
    let mut cur = g.clone();
    let n = cur.n();
    let mut added_any = false;
    let cap = n * n;
    let mut additions = 0usize;
    'fixpoint: loop {
        let mut changed = false;
        for u in 0..n {
            for v in u + 1..n {
                if cur.adjacency(u).contains(v) {
                    continue;
                }
                if min_vertex_cut_at_least(&cur, u, v, ub) {
                    cur.add_edge(u, v);
                    added_any = true;
                    changed = true;
                    additions += 1;
                    if additions >= cap {
                        break 'fixpoint;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut trace = ReductionTrace::default();
    if added_any {
        trace.events.push(ReductionEvent::EdgeAdditions {
            before,
            after: cur.clone(),
        });
    }
    (cur, trace)
}

const MAX_ROUNDS: usize = 64;

/// Full preprocessing pipeline: tree elimination, then the simplicial rule,
/// then shared-neighborhood edge additions (fed by a fresh upper bound),
/// repeated until nothing changes.
pub fn preprocess(g: &Graph) -> (Graph, ReductionTrace) {
    let mut cur = g.clone();
    let mut trace = ReductionTrace::default();
    for _ in 0..MAX_ROUNDS {
        let mut changed = false;

        let (next, t) = tree_eliminate(&cur);
        if !t.is_empty() {
            changed = true;
            trace.extend(t);
            cur = next;
        }

        let ub = compute_upper_bound(&cur).0;
        let (next, t) = simplicial_rule(&cur, ub);
        if !t.is_empty() {
            changed = true;
            trace.extend(t);
            cur = next;
        }

        let (next, t) = shared_neighborhood_rule(&cur, ub);
        if !t.is_empty() {
            changed = true;
            trace.extend(t);
            cur = next;
        }

        if !changed {
            break;
        }
    }
    (cur, trace)
}

/// Lifts a decomposition of the reduced graph back through the trace. The
/// result is a valid decomposition of the original graph whose depth does
/// not exceed the input depth (equal when the input was optimal).
pub fn lift_decomposition(
    trace: &ReductionTrace,
    dec: &Decomposition,
) -> Result<Decomposition, LiftError> {
    let mut cur = dec.clone();
    for event in trace.events.iter().rev() {
        if !crate::solver::verify(event.after(), &cur) {
            return Err(LiftError);
        }
        cur = match event {
            ReductionEvent::TreeReplace { .. } => lift_tree(event, &cur),
            ReductionEvent::SimplicialDelete { .. } => lift_simplicial(event, &cur),
            ReductionEvent::EdgeAdditions { .. } => cur,
        };
        assert!(
            crate::solver::verify(event.before(), &cur),
            "lift produced an invalid decomposition"
        );
    }
    Ok(cur)
}

fn lift_tree(event: &ReductionEvent, dec: &Decomposition) -> Decomposition {
    let ReductionEvent::TreeReplace {
        before,
        after,
        kept,
        tree,
        attach,
        ranking,
        rank_set,
        path_new,
        cliques_new,
    } = event
    else {
        unreachable!()
    };
    let ranks_after = decomposition_to_ranking(dec);

    // ranks the construction shows to the attachment point
    let mut tprime = VertexSet::empty(after.n());
    for &w in path_new {
        tprime.insert(w);
    }
    for clique in cliques_new {
        for &q in clique {
            tprime.insert(q);
        }
    }
    let seen = visible_ranks(after, &tprime, path_new[0], &ranks_after);

    // rebuild a tree ranking that exposes only ranks in `seen`
    let rank_of: FxHashMap<usize, u32> =
        tree.iter().copied().zip(ranking.iter().copied()).collect();
    let tree_set = VertexSet::from_indices(before.n(), tree.iter().copied());
    let assigned = rebuild_tree_ranking(before, &tree_set, *attach, &rank_of, rank_set, seen);

    let mut ranks_before = vec![0u32; before.n()];
    for (new, &old) in kept.iter().enumerate() {
        ranks_before[old] = ranks_after[new];
    }
    for (old, r) in assigned {
        ranks_before[old] = r;
    }
    ranking_to_decomposition(before, &before.vertex_set(), &ranks_before)
}

/// The constructive half of the replacement proof: given the visible set
/// `seen` of the construction (never smaller than the stored optimum), build
/// a ranking of the original tree whose visible set is contained in `seen`.
/// While the maxima agree, the subtree showing the maximum keeps its stored
/// ranking and is peeled; once `seen` has a strictly larger maximum, the
/// attachment takes it and everything else keeps the stored ranking.
fn rebuild_tree_ranking(
    g: &Graph,
    tree: &VertexSet,
    attach: usize,
    stored: &FxHashMap<usize, u32>,
    optimum: &RankSet,
    seen: Vec<u32>,
) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut s_cur = tree.clone();
    let mut r_cur = seen;
    let mut o_cur = optimum.ranks().to_vec();
    loop {
        assert!(
            !r_cur.is_empty() && !o_cur.is_empty(),
            "rank sets exhausted during lift"
        );
        let rmax = *r_cur.last().unwrap();
        let omax = *o_cur.last().unwrap();
        assert!(
            rmax >= omax,
            "construction exposed a smaller rank set than the optimum"
        );
        if rmax > omax {
            out.push((attach, rmax));
            for w in &s_cur {
                if w != attach {
                    out.push((w, stored[&w]));
                }
            }
            return out;
        }
        // maxima agree: locate the unique visible vertex of rank omax
        let restricted =
            VertexSet::from_indices(g.n(), s_cur.iter().filter(|&w| stored[&w] <= omax));
        let comp = g.component_of(&restricted, attach);
        let top = comp
            .iter()
            .find(|&w| stored[&w] == omax)
            .expect("stored maximum must be visible from the attachment");
        if top == attach {
            for w in &s_cur {
                out.push((w, stored[&w]));
            }
            return out;
        }
        // peel the subtree hanging below `top`, away from the attachment
        let toward = g
            .adjacency(top)
            .intersection(&s_cur)
            .iter()
            .find(|&w| {
                let mut without_top = s_cur.clone();
                without_top.remove(top);
                g.component_of(&without_top, w).contains(attach)
            })
            .expect("attachment lies across some neighbor");
        let mut without = s_cur.clone();
        without.remove(toward);
        let sub = g.component_of(&without, top);
        for w in &sub {
            out.push((w, stored[&w]));
        }
        s_cur.subtract(&sub);
        r_cur.pop();
        o_cur.pop();
    }
}

fn lift_simplicial(event: &ReductionEvent, dec: &Decomposition) -> Decomposition {
    let ReductionEvent::SimplicialDelete {
        before,
        kept,
        deleted,
        keeper,
        ..
    } = event
    else {
        unreachable!()
    };
    let ranks_after = decomposition_to_ranking(dec);
    let mut ranks = vec![0u32; before.n()];
    for (new, &old) in kept.iter().enumerate() {
        ranks[old] = ranks_after[new];
    }
    // move the keeper below its clique neighborhood (rank swap with the
    // minimum neighbor keeps the ranking valid for a simplicial vertex),
    // then the deleted vertex re-enters at the keeper's rank
    let u = *keeper;
    if let Some(w) = before
        .adjacency(u)
        .iter()
        .min_by_key(|&w| ranks[w])
        .filter(|&w| ranks[w] < ranks[u])
    {
        ranks.swap(u, w);
    }
    ranks[*deleted] = ranks[u];
    ranking_to_decomposition(before, &before.vertex_set(), &ranks)
}
