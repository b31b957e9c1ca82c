//! The exact decision procedure and the top-level driver.
//!
//! `decide` answers `td(G[X]) <= k` by branching on minimal separators of
//! size at most `k-3`, with separators of sizes `k-1` and `k-2` handled as
//! special cases (vertex neighborhoods and star-constrained separators).
//! `solve` runs the full pipeline: preprocessing, a triangulation-based
//! upper bound, a descent with heuristic separator enumeration, and a final
//! certification pass with exact enumeration.

use rustc_hash::FxHashSet;

use crate::bounds::{
    dfs_path_cycle_lb, mmd_plus_lb, CompactForest, IsoTable, MemoTable, SubsetStore, NO_PARENT,
};
use crate::graph::Graph;
use crate::preprocess::{self, ReductionTrace};
use crate::separators::{
    enumerate_exact, enumerate_heuristic, induce_separators, star_constrained_enumeration,
    BudgetExceeded, SeparatorFamily, DEFAULT_SEPARATOR_BUDGET,
};
use crate::upper_bound::compute_upper_bound;
use crate::vset::VertexSet;

const UNASSIGNED: usize = usize::MAX;

/// A rooted forest on a stated vertex set, certifying a treedepth bound:
/// every edge of the host graph inside `members` joins an ancestor to a
/// descendant, and `depth` is the longest root-to-leaf chain in vertices.
#[derive(Clone, Debug)]
pub struct Decomposition {
    members: VertexSet,
    parent: Vec<Option<usize>>,
    depth: usize,
}

impl Decomposition {
    pub fn new(members: VertexSet, parent: Vec<Option<usize>>, depth: usize) -> Self {
        Decomposition {
            members,
            parent,
            depth,
        }
    }

    pub fn empty(n: usize) -> Self {
        Decomposition {
            members: VertexSet::empty(n),
            parent: vec![None; n],
            depth: 0,
        }
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn roots(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().filter(|&v| self.parent[v].is_none())
    }

    /// Depth of every member (roots at 1), or `None` if the parent links are
    /// broken (cycle, or a parent outside the member set).
    pub fn compute_depths(&self) -> Option<Vec<usize>> {
        let n = self.parent.len();
        let mut depth = vec![0usize; n];
        for v in &self.members {
            if depth[v] != 0 {
                continue;
            }
            let mut chain = Vec::new();
            let mut cur = v;
            let mut base = 0usize;
            loop {
                if depth[cur] != 0 {
                    base = depth[cur];
                    break;
                }
                if chain.contains(&cur) {
                    return None; // cycle
                }
                chain.push(cur);
                match self.parent[cur] {
                    None => break, // chain ends at a root
                    Some(p) => {
                        if !self.members.contains(p) {
                            return None;
                        }
                        cur = p;
                    }
                }
            }
            let mut d = base;
            for &u in chain.iter().rev() {
                d += 1;
                depth[u] = d;
            }
        }
        Some(depth)
    }

    fn from_buffer(x: &VertexSet, buf: &[usize], depth: usize) -> Self {
        let mut parent = vec![None; buf.len()];
        for v in x {
            if buf[v] != UNASSIGNED {
                parent[v] = Some(buf[v]);
            }
        }
        Decomposition {
            members: x.clone(),
            parent,
            depth,
        }
    }

    pub(crate) fn from_compact(n: usize, members: &VertexSet, forest: &CompactForest) -> Self {
        let mut parent = vec![None; n];
        for &(v, p) in &forest.links {
            if p != NO_PARENT {
                parent[v as usize] = Some(p as usize);
            }
        }
        Decomposition {
            members: members.clone(),
            parent,
            depth: forest.depth as usize,
        }
    }

    pub(crate) fn to_compact(&self) -> CompactForest {
        let links = self
            .members
            .iter()
            .map(|v| (v as u32, self.parent[v].map_or(NO_PARENT, |p| p as u32)))
            .collect();
        CompactForest {
            links,
            depth: self.depth as u32,
        }
    }
}

/// Checks a decomposition against the graph it claims to cover: exact
/// coverage of `V(G)`, sound parent links, depth equal to the longest chain,
/// and the ancestor condition for every edge.
pub fn verify(g: &Graph, dec: &Decomposition) -> bool {
    if *dec.members() != g.vertex_set() {
        return false;
    }
    verify_within(g, dec)
}

/// The same checks as `verify`, but for a decomposition of an induced
/// subgraph `G[members]`.
pub fn verify_within(g: &Graph, dec: &Decomposition) -> bool {
    let Some(depths) = dec.compute_depths() else {
        return false;
    };
    let max_depth = dec.members().iter().map(|v| depths[v]).max().unwrap_or(0);
    if max_depth != dec.depth() {
        return false;
    }
    for v in dec.members() {
        for w in &g.adjacency(v).intersection(dec.members()) {
            if w <= v {
                continue;
            }
            let (mut a, b) = if depths[v] >= depths[w] {
                (v, w)
            } else {
                (w, v)
            };
            while depths[a] > depths[b] {
                match dec.parent(a) {
                    Some(p) => a = p,
                    None => return false,
                }
            }
            if a != b {
                return false;
            }
        }
    }
    true
}

/// Depth-k decompositions witnessed by a separator of size `k-1`: such a
/// separator leaves an independent set, so it must be a vertex neighborhood.
/// Returns the chain-over-leaves decomposition for the first vertex `v` with
/// `|N(v) ∩ X| <= k-1` and `X \ N(v)` independent, if any.
pub fn special_case_k1(g: &Graph, x: &VertexSet, k: usize) -> Option<Decomposition> {
    if k == 0 {
        return None;
    }
    for v in x {
        let chain = g.adjacency(v).intersection(x);
        if chain.len() > k - 1 || chain.is_empty() {
            continue;
        }
        let rest = x.difference(&chain);
        if g.edges_within(&rest) != 0 {
            continue;
        }
        let mut parent = vec![None; g.n()];
        let mut prev: Option<usize> = None;
        for u in &chain {
            parent[u] = prev;
            prev = Some(u);
        }
        let last = prev.unwrap();
        for u in &rest {
            parent[u] = Some(last);
        }
        return Some(Decomposition::new(x.clone(), parent, chain.len() + 1));
    }
    None
}

/// Depth-k decompositions witnessed by a separator of size at most `k-2`
/// whose removal leaves only stars. Candidates come from star-constrained
/// enumeration anchored at every vertex; each is verified against all
/// components before acceptance.
pub fn special_case_k2(
    g: &Graph,
    x: &VertexSet,
    k: usize,
    budget: usize,
) -> Result<Option<Decomposition>, BudgetExceeded> {
    if k < 3 {
        return Ok(None);
    }
    let mut tried: FxHashSet<VertexSet> = FxHashSet::default();
    for a in x {
        let family = star_constrained_enumeration(g, x, a, k - 2, budget)?;
        'sep: for s in family.iter() {
            if s.is_empty() || !tried.insert(s.clone()) {
                continue;
            }
            let rest = x.difference(s);
            let comps = g.pieces(&rest);
            for c in &comps {
                if !g.is_star(c) {
                    continue 'sep;
                }
            }
            // chain of S over star decompositions
            let mut parent = vec![None; g.n()];
            let mut prev: Option<usize> = None;
            for u in s {
                parent[u] = prev;
                prev = Some(u);
            }
            let last = prev.unwrap();
            let mut max_star = 0;
            for c in &comps {
                let center = c
                    .iter()
                    .find(|&u| g.adjacency(u).intersection(c).len() >= 2)
                    .unwrap_or_else(|| c.first().unwrap());
                parent[center] = Some(last);
                let mut star_depth = 1;
                for u in c {
                    if u != center {
                        parent[u] = Some(center);
                        star_depth = 2;
                    }
                }
                max_star = max_star.max(star_depth);
            }
            return Ok(Some(Decomposition::new(
                x.clone(),
                parent,
                s.len() + max_star,
            )));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Heuristic,
    Exact,
}

/// Outcome of a `decide` call. `No` is a certificate only in exact mode;
/// `Unknown` is produced by enumeration budget aborts.
#[derive(Clone, Debug)]
pub enum DecideResult {
    Yes(Decomposition),
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Yes(usize),
    No,
    Unknown,
}

#[derive(Clone, Debug, Default)]
pub struct SolveStats {
    pub nodes_expanded: u64,
    pub separators_enumerated: u64,
    pub cache_hits: u64,
    pub cache_misses: u64,
    pub iso_transfers: u64,
}

#[derive(Clone, Debug)]
pub struct SolveConfig {
    /// Run the treedepth-preserving reductions before the search.
    pub preprocess: bool,
    /// Cap on the family size of any single separator enumeration.
    pub separator_budget: usize,
    /// Reserved; the pipeline is deterministic and ignores it.
    pub seed: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            preprocess: true,
            separator_budget: DEFAULT_SEPARATOR_BUDGET,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub td: usize,
    pub decomposition: Decomposition,
    /// False when a budget abort forced the solver to stop at the best
    /// verified upper bound without certifying optimality.
    pub certified: bool,
    pub stats: SolveStats,
}

/// One solver instance per graph: owns the memo table, the subset
/// lower-bound store, and the isomorphism table, all keyed against `g`.
pub struct Solver<'g> {
    g: &'g Graph,
    memo: MemoTable,
    subset: SubsetStore,
    iso: IsoTable,
    budget: usize,
    buf: Vec<usize>,
    pub stats: SolveStats,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, cfg: &SolveConfig) -> Self {
        Solver {
            g,
            memo: MemoTable::new(),
            subset: SubsetStore::new(g.n()),
            iso: IsoTable::new(),
            budget: cfg.separator_budget,
            buf: vec![UNASSIGNED; g.n()],
            stats: SolveStats::default(),
        }
    }

    /// Bounds stored so far, for audits.
    pub fn memo_entries(&self) -> impl Iterator<Item = (&VertexSet, u32, u32)> {
        self.memo.iter().map(|(k, e)| (k, e.lower, e.upper))
    }

    /// Decides `td(G[x]) <= k`. In heuristic mode a `No` only means "no
    /// witness found"; in exact mode it is a certificate (provided no budget
    /// abort occurred, which would surface as `Unknown`).
    pub fn decide(&mut self, x: &VertexSet, k: usize, mode: Mode) -> DecideResult {
        match self.decide_rec(x, k, mode, None) {
            Outcome::Yes(d) => {
                let dec = Decomposition::from_buffer(x, &self.buf, d);
                debug_assert!(verify_within(self.g, &dec));
                DecideResult::Yes(dec)
            }
            Outcome::No => DecideResult::No,
            Outcome::Unknown => DecideResult::Unknown,
        }
    }

    fn emit_chain(&mut self, x: &VertexSet) {
        let mut prev = UNASSIGNED;
        for v in x {
            self.buf[v] = prev;
            prev = v;
        }
    }

    fn emit_decomposition(&mut self, dec: &Decomposition) {
        for v in dec.members() {
            self.buf[v] = dec.parent(v).unwrap_or(UNASSIGNED);
        }
    }

    fn emit_compact(&mut self, forest: &CompactForest) {
        for &(v, p) in &forest.links {
            self.buf[v as usize] = if p == NO_PARENT {
                UNASSIGNED
            } else {
                p as usize
            };
        }
    }

    fn record_lower(&mut self, x: &VertexSet, lower: usize) {
        if lower >= 3 {
            self.subset.insert(x, lower as u32);
            self.iso.insert(self.g, x, lower as u32);
        }
    }

    fn decide_rec(
        &mut self,
        x: &VertexSet,
        k: usize,
        mode: Mode,
        inherited: Option<&SeparatorFamily>,
    ) -> Outcome {
        self.stats.nodes_expanded += 1;
        let t = x.len();
        if t == 0 {
            return Outcome::Yes(0);
        }
        if k == 0 {
            return Outcome::No;
        }

        // disconnected hosts split into a forest
        let comps = self.g.pieces(x);
        if comps.len() > 1 {
            let mut depth = 0;
            let mut unknown = false;
            for c in &comps {
                match self.decide_rec(c, k, mode, None) {
                    Outcome::Yes(d) => depth = depth.max(d),
                    Outcome::No => return Outcome::No,
                    Outcome::Unknown => unknown = true,
                }
            }
            if unknown {
                return Outcome::Unknown;
            }
            return Outcome::Yes(depth);
        }

        // anything fits in a chain of its own size
        if t <= k {
            self.emit_chain(x);
            return Outcome::Yes(t);
        }

        let mut lb = 2usize; // connected with t > k >= 1, so there is an edge
        let mut first_visit = true;
        if let Some(entry) = self.memo.get(x) {
            self.stats.cache_hits += 1;
            first_visit = false;
            if entry.lower as usize > k {
                return Outcome::No;
            }
            if entry.upper as usize <= k {
                if let Some(w) = entry.witness.clone() {
                    self.emit_compact(&w);
                    return Outcome::Yes(w.depth as usize);
                }
            }
            lb = lb.max(entry.lower as usize);
        } else {
            self.stats.cache_misses += 1;
        }

        // cliques are exactly their size
        if self.g.is_clique(x) {
            // t > k here
            let chain: Vec<(u32, u32)> = {
                let mut prev = NO_PARENT;
                x.iter()
                    .map(|v| {
                        let link = (v as u32, prev);
                        prev = v as u32;
                        link
                    })
                    .collect()
            };
            self.memo.put(
                x,
                t as u32,
                t as u32,
                Some(CompactForest {
                    links: chain,
                    depth: t as u32,
                }),
            );
            self.record_lower(x, t);
            return Outcome::No;
        }

        // lower bounds: stored subsets, isomorphic twins, clique minors,
        // long paths and cycles
        lb = lb.max(self.subset.query(x) as usize);
        if lb <= k {
            if let Some(transferred) = self.iso.lookup(self.g, x) {
                if transferred as usize > lb {
                    lb = transferred as usize;
                    self.stats.iso_transfers += 1;
                }
            }
        }
        if first_visit {
            lb = lb.max(mmd_plus_lb(self.g, x));
            lb = lb.max(dfs_path_cycle_lb(self.g, x));
        }
        self.memo.put(x, lb as u32, t as u32, None);
        if lb > k {
            self.record_lower(x, lb);
            return Outcome::No;
        }

        // separators of size k-1 (vertex neighborhoods over independent sets)
        if let Some(dec) = special_case_k1(self.g, x, k) {
            self.emit_decomposition(&dec);
            self.memo
                .put(x, lb as u32, dec.depth() as u32, Some(dec.to_compact()));
            return Outcome::Yes(dec.depth());
        }
        // separators of size k-2 (everything left must be stars)
        match special_case_k2(self.g, x, k, self.budget) {
            Ok(Some(dec)) => {
                self.emit_decomposition(&dec);
                self.memo
                    .put(x, lb as u32, dec.depth() as u32, Some(dec.to_compact()));
                return Outcome::Yes(dec.depth());
            }
            Ok(None) => {}
            Err(_) => {
                if mode == Mode::Exact {
                    return Outcome::Unknown;
                }
            }
        }

        // main branching over Δ_{k-3}
        let bound = k.saturating_sub(3);
        if bound == 0 {
            // a connected host has no empty minimal separator, so only the
            // special cases above could have produced a witness
            match mode {
                Mode::Exact => {
                    self.memo.put(x, (k + 1) as u32, t as u32, None);
                    self.record_lower(x, k + 1);
                    return Outcome::No;
                }
                Mode::Heuristic => return Outcome::No,
            }
        }
        let family = match inherited {
            Some(parent) => {
                let f = induce_separators(parent, self.g, x);
                debug_assert!(f.size_bound() >= bound);
                f
            }
            None => match mode {
                Mode::Heuristic => enumerate_heuristic(self.g, x, bound, self.budget),
                Mode::Exact => match enumerate_exact(self.g, x, bound, self.budget) {
                    Ok(f) => f,
                    Err(_) => return Outcome::Unknown,
                },
            },
        };
        self.stats.separators_enumerated += family.len() as u64;

        // score candidates without materializing their components; pieces
        // are rebuilt only for the candidates actually explored
        let mut candidates: Vec<(usize, usize, &VertexSet)> = family
            .iter()
            .filter(|s| !s.is_empty() && s.len() <= bound)
            .map(|s| {
                let rest = x.difference(s);
                (s.len(), self.g.largest_piece(&rest), s)
            })
            .collect();
        candidates.sort_by(|a, b| {
            a.0.cmp(&b.0)
                .then_with(|| a.1.cmp(&b.1))
                .then_with(|| a.2.cmp(b.2))
        });

        let mut unknown_seen = false;
        'candidate: for &(slen, _, s) in &candidates {
            let child_k = k - slen;
            let rest = x.difference(s);
            let mut pieces = self.g.pieces(&rest);
            // explore big pieces first so failures surface early
            pieces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
            let mut max_child = 0usize;
            for piece in &pieces {
                let pass_family = if piece.len() * 2 > t {
                    Some(&family)
                } else {
                    None
                };
                match self.decide_rec(piece, child_k, mode, pass_family) {
                    Outcome::Yes(d) => max_child = max_child.max(d),
                    Outcome::No => continue 'candidate,
                    Outcome::Unknown => {
                        unknown_seen = true;
                        continue 'candidate;
                    }
                }
            }
            // success: chain S above the component forests
            let mut prev = UNASSIGNED;
            for v in s {
                self.buf[v] = prev;
                prev = v;
            }
            let last = prev;
            for piece in &pieces {
                for v in piece {
                    if self.buf[v] == UNASSIGNED {
                        self.buf[v] = last;
                    }
                }
            }
            let depth = slen + max_child;
            let dec = Decomposition::from_buffer(x, &self.buf, depth);
            self.memo
                .put(x, lb as u32, depth as u32, Some(dec.to_compact()));
            return Outcome::Yes(depth);
        }

        if unknown_seen {
            return Outcome::Unknown;
        }
        match mode {
            Mode::Exact => {
                self.memo.put(x, (k + 1) as u32, t as u32, None);
                self.record_lower(x, k + 1);
                Outcome::No
            }
            // nothing found, but the family may have been incomplete
            Mode::Heuristic => Outcome::No,
        }
    }
}

/// Solves with the default configuration.
pub fn solve(g: &Graph) -> SolveOutcome {
    solve_with(g, &SolveConfig::default())
}

/// Full pipeline: preprocess, compute an upper bound, descend with heuristic
/// enumeration while witnesses keep appearing, then certify optimality with
/// exact enumeration, and lift the result back through the reductions.
pub fn solve_with(g: &Graph, cfg: &SolveConfig) -> SolveOutcome {
    if g.n() == 0 {
        return SolveOutcome {
            td: 0,
            decomposition: Decomposition::empty(0),
            certified: true,
            stats: SolveStats::default(),
        };
    }
    let (reduced, trace) = if cfg.preprocess {
        preprocess::preprocess(g)
    } else {
        (g.clone(), ReductionTrace::default())
    };

    let (ub, ub_dec) = compute_upper_bound(&reduced);
    debug_assert!(verify(&reduced, &ub_dec));
    let mut best_depth = ub;
    let mut best = ub_dec;

    let mut solver = Solver::new(&reduced, cfg);
    let full = reduced.vertex_set();
    while best_depth > 1 {
        match solver.decide(&full, best_depth - 1, Mode::Heuristic) {
            DecideResult::Yes(dec) => {
                debug_assert!(verify(&reduced, &dec));
                best_depth = dec.depth();
                best = dec;
            }
            _ => break,
        }
    }
    let mut certified = true;
    while best_depth > 1 {
        match solver.decide(&full, best_depth - 1, Mode::Exact) {
            DecideResult::Yes(dec) => {
                debug_assert!(verify(&reduced, &dec));
                best_depth = dec.depth();
                best = dec;
            }
            DecideResult::No => break,
            DecideResult::Unknown => {
                certified = false;
                break;
            }
        }
    }
    let stats = solver.stats.clone();

    let lifted =
        preprocess::lift_decomposition(&trace, &best).expect("verified decomposition must lift");
    assert!(
        verify(g, &lifted),
        "lifted decomposition failed verification"
    );
    SolveOutcome {
        td: lifted.depth(),
        decomposition: lifted,
        certified,
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_td;

    fn vs(n: usize, vals: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vals.iter().copied())
    }

    #[test]
    fn verify_accepts_path_decomposition() {
        // P4 rooted at 1: 0 and 2 children of 1, 3 child of 2
        let g = Graph::path(4);
        let dec = Decomposition::new(g.vertex_set(), vec![Some(1), None, Some(1), Some(2)], 3);
        assert!(verify(&g, &dec));
        let wrong_depth =
            Decomposition::new(g.vertex_set(), vec![Some(1), None, Some(1), Some(2)], 2);
        assert!(!verify(&g, &wrong_depth));
    }

    #[test]
    fn verify_rejects_incomparable_edge() {
        // K3 with 1 and 2 both children of 0: edge 1-2 joins incomparable nodes
        let g = Graph::complete(3);
        let dec = Decomposition::new(g.vertex_set(), vec![None, Some(0), Some(0)], 2);
        assert!(!verify(&g, &dec));
    }

    #[test]
    fn verify_rejects_cycles_and_partial_cover() {
        let g = Graph::path(3);
        let cyclic = Decomposition::new(g.vertex_set(), vec![Some(1), Some(0), Some(1)], 2);
        assert!(!verify(&g, &cyclic));
        let partial = Decomposition::new(vs(3, &[0, 1]), vec![Some(1), None, None], 2);
        assert!(!verify(&g, &partial));
    }

    #[test]
    fn k1_special_case_examples() {
        // K_{1,4}: N(leaf) = {center}, rest independent -> depth 2
        let star = Graph::star(4);
        let dec = special_case_k1(&star, &star.vertex_set(), 2).unwrap();
        assert_eq!(dec.depth(), 2);
        assert!(verify(&star, &dec));

        // P4 at k=2: no vertex works
        let p4 = Graph::path(4);
        assert!(special_case_k1(&p4, &p4.vertex_set(), 2).is_none());

        // C4 at k=3: N(v) splits into an independent pair
        let c4 = Graph::cycle(4);
        let dec = special_case_k1(&c4, &c4.vertex_set(), 3).unwrap();
        assert_eq!(dec.depth(), 3);
        assert!(verify(&c4, &dec));
    }

    #[test]
    fn k2_special_case_examples() {
        let p4 = Graph::path(4);
        let dec = special_case_k2(&p4, &p4.vertex_set(), 3, DEFAULT_SEPARATOR_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(dec.depth(), 3);
        assert!(verify(&p4, &dec));

        // P8 needs depth 4; no single separator leaves stars only
        let p8 = Graph::path(8);
        assert!(
            special_case_k2(&p8, &p8.vertex_set(), 3, DEFAULT_SEPARATOR_BUDGET)
                .unwrap()
                .is_none()
        );

        // two triangles sharing a vertex: removing it leaves two edges
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        let dec = special_case_k2(&bowtie, &bowtie.vertex_set(), 3, DEFAULT_SEPARATOR_BUDGET)
            .unwrap()
            .unwrap();
        assert_eq!(dec.depth(), 3);
        assert!(verify(&bowtie, &dec));
        assert_eq!(oracle_td(&bowtie, &bowtie.vertex_set()), 3);
    }

    #[test]
    fn decide_examples() {
        let p4 = Graph::path(4);
        let cfg = SolveConfig::default();
        let mut solver = Solver::new(&p4, &cfg);
        let full = p4.vertex_set();
        assert!(matches!(
            solver.decide(&full, 3, Mode::Exact),
            DecideResult::Yes(_)
        ));
        assert!(matches!(
            solver.decide(&full, 2, Mode::Exact),
            DecideResult::No
        ));

        let k4 = Graph::complete(4);
        let mut solver = Solver::new(&k4, &cfg);
        let full = k4.vertex_set();
        assert!(matches!(
            solver.decide(&full, 3, Mode::Exact),
            DecideResult::No
        ));
        assert!(matches!(
            solver.decide(&full, 4, Mode::Exact),
            DecideResult::Yes(_)
        ));

        let c8 = Graph::cycle(8);
        let mut solver = Solver::new(&c8, &cfg);
        let full = c8.vertex_set();
        assert!(matches!(
            solver.decide(&full, 4, Mode::Exact),
            DecideResult::Yes(_)
        ));
        assert!(matches!(
            solver.decide(&full, 3, Mode::Exact),
            DecideResult::No
        ));
    }

    #[test]
    fn decide_monotone_in_k() {
        let g = Graph::new(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        );
        let td = oracle_td(&g, &g.vertex_set());
        let cfg = SolveConfig::default();
        for k in 1..=7usize {
            let mut solver = Solver::new(&g, &cfg);
            let r = solver.decide(&g.vertex_set(), k, Mode::Exact);
            if k >= td {
                assert!(matches!(r, DecideResult::Yes(_)), "k={k} td={td}");
            } else {
                assert!(matches!(r, DecideResult::No), "k={k} td={td}");
            }
        }
    }

    #[test]
    fn solve_standard_families() {
        let p15 = Graph::path(15);
        let out = solve(&p15);
        assert_eq!(out.td, 4);
        assert!(out.certified);
        assert!(verify(&p15, &out.decomposition));

        let k5 = Graph::complete(5);
        let out = solve(&k5);
        assert_eq!(out.td, 5);
        assert!(verify(&k5, &out.decomposition));

        let e7 = Graph::edgeless(7);
        let out = solve(&e7);
        assert_eq!(out.td, 1);
        assert_eq!(out.decomposition.roots().count(), 7);
    }

    #[test]
    fn solve_matches_oracle_on_assorted_graphs() {
        let graphs = vec![
            Graph::path(9),
            Graph::cycle(7),
            Graph::star(6),
            Graph::complete_bipartite(2, 3),
            Graph::new(
                8,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 3),
                ],
            ),
        ];
        for g in graphs {
            let expected = oracle_td(&g, &g.vertex_set());
            let out = solve(&g);
            assert_eq!(out.td, expected, "on {g:?}");
            assert!(out.certified);
            assert!(verify(&g, &out.decomposition));
            assert_eq!(out.decomposition.depth(), expected);
        }
    }
}
