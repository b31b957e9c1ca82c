//! Lower-bound machinery and caches.
//!
//! The search stores known bounds for every handled induced subgraph in an
//! open-addressed memo table, queries a subset-signature store for the best
//! lower bound among stored subsets, and falls back to structural bounds:
//! a contraction-based clique-minor bound (MMD+ with the least-c rule), long
//! paths and cycles found by greedy depth-first walks, and lower bounds
//! transferred from already-processed isomorphic subgraphs.

use rustc_hash::FxHashMap;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// A stored witness forest: `(vertex, parent)` links with `u32::MAX` marking
/// a root, plus the forest depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactForest {
    pub links: Vec<(u32, u32)>,
    pub depth: u32,
}

pub const NO_PARENT: u32 = u32::MAX;

/// Bounds known for one vertex set: `lower <= td(G[key]) <= upper`, with an
/// optional witness of depth `upper`.
#[derive(Clone, Debug)]
pub struct BoundEntry {
    pub lower: u32,
    pub upper: u32,
    pub witness: Option<CompactForest>,
}

struct Slot {
    key: VertexSet,
    entry: BoundEntry,
}

/// Open-addressed hash table with linear probing, power-of-two capacity,
/// resized at load factor 1/2. Keys are the exact vertex sets.
pub struct MemoTable {
    slots: Vec<Option<Slot>>,
    len: usize,
}

fn hash_words(words: &[u64]) -> u64 {
    let mut h = 0x9E37_79B9_7F4A_7C15u64;
    for &w in words {
        h ^= w.wrapping_mul(0xBF58_476D_1CE4_E5B9);
        h = h.rotate_left(31).wrapping_mul(0x94D0_49BB_1331_11EB);
    }
    h ^ (h >> 29)
}

impl MemoTable {
    pub fn new() -> Self {
        MemoTable {
            slots: (0..64).map(|_| None).collect(),
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, key: &VertexSet) -> Option<&BoundEntry> {
        let mask = self.slots.len() - 1;
        let mut idx = hash_words(key.words()) as usize & mask;
        loop {
            match &self.slots[idx] {
                None => return None,
                Some(slot) if slot.key == *key => return Some(&slot.entry),
                Some(_) => idx = (idx + 1) & mask,
            }
        }
    }

    /// Merges bounds for `key`, tightening only: the stored lower bound can
    /// only grow and the stored upper bound only shrink. A merge that would
    /// cross the bounds is a soundness bug and aborts.
    pub fn put(&mut self, key: &VertexSet, lower: u32, upper: u32, witness: Option<CompactForest>) {
        let mask = self.slots.len() - 1;
        let mut idx = hash_words(key.words()) as usize & mask;
        loop {
            match &mut self.slots[idx] {
                Some(slot) if slot.key == *key => {
                    let e = &mut slot.entry;
                    let new_lower = e.lower.max(lower);
                    let new_upper = e.upper.min(upper);
                    assert!(
                        new_lower <= new_upper,
                        "memo merge crossed bounds for {key:?}: lower {new_lower} > upper {new_upper}"
                    );
                    e.lower = new_lower;
                    let better = upper < e.upper || (upper == e.upper && e.witness.is_none());
                    if better && witness.is_some() {
                        e.witness = witness;
                    }
                    e.upper = new_upper;
                    return;
                }
                Some(_) => idx = (idx + 1) & mask,
                empty @ None => {
                    assert!(lower <= upper, "new memo entry has crossed bounds");
                    *empty = Some(Slot {
                        key: key.clone(),
                        entry: BoundEntry {
                            lower,
                            upper,
                            witness,
                        },
                    });
                    self.len += 1;
                    if self.len * 2 >= self.slots.len() {
                        self.grow();
                    }
                    return;
                }
            }
        }
    }

    fn grow(&mut self) {
        let new_cap = self.slots.len() * 2;
        let old = std::mem::replace(&mut self.slots, (0..new_cap).map(|_| None).collect());
        let mask = new_cap - 1;
        for slot in old.into_iter().flatten() {
            let mut idx = hash_words(slot.key.words()) as usize & mask;
            while self.slots[idx].is_some() {
                idx = (idx + 1) & mask;
            }
            self.slots[idx] = Some(slot);
        }
    }

    /// All stored entries (for audits and statistics).
    pub fn iter(&self) -> impl Iterator<Item = (&VertexSet, &BoundEntry)> {
        self.slots
            .iter()
            .flatten()
            .map(|slot| (&slot.key, &slot.entry))
    }
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new()
    }
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const SUBSET_SAMPLE_FACTOR: f64 = 2.0;
const SUBSET_ENUM_LIMIT: u32 = 20;
const SUBSET_FALLBACK_SCAN: usize = 32_768;

/// Finds, for a query set `X`, the best lower bound stored for any subset
/// `X' ⊆ X`. Buckets are keyed by the intersection with a small sampled
/// vertex set `V'`, so every stored subset of `X` lives under one of the
/// sub-signatures of `X ∩ V'`.
pub struct SubsetStore {
    n: usize,
    sample: Vec<usize>,
    sample_set: VertexSet,
    buckets: FxHashMap<u64, Vec<usize>>,
    records: Vec<(VertexSet, u32)>,
    index: FxHashMap<VertexSet, usize>,
    next_rebuild: usize,
    rebuild_round: u64,
    pinned: bool,
}

impl SubsetStore {
    pub fn new(n: usize) -> Self {
        let mut store = SubsetStore {
            n,
            sample: Vec::new(),
            sample_set: VertexSet::empty(n),
            buckets: FxHashMap::default(),
            records: Vec::new(),
            index: FxHashMap::default(),
            next_rebuild: 16,
            rebuild_round: 0,
            pinned: false,
        };
        store.resample();
        store
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Pins the sample to an explicit vertex list (test hook).
    pub fn force_sample(&mut self, sample: Vec<usize>) {
        self.sample = sample;
        self.sample_set = VertexSet::from_indices(self.n, self.sample.iter().copied());
        self.pinned = true;
        self.rebuild_buckets();
    }

    fn sample_size(&self) -> usize {
        let e = self.records.len().max(2) as f64;
        let want = (SUBSET_SAMPLE_FACTOR * e.log2()).ceil() as usize;
        want.clamp(1, self.n.clamp(1, 64))
    }

    fn resample(&mut self) {
        if self.pinned {
            self.rebuild_buckets();
            return;
        }
        let want = self.sample_size();
        let mut state = 0xA076_1D64_78BD_642Fu64 ^ self.rebuild_round;
        self.rebuild_round += 1;
        let mut chosen = VertexSet::empty(self.n);
        let mut picked = Vec::new();
        if self.n > 0 {
            let mut guard = 0;
            while picked.len() < want && guard < 64 * want {
                let v = (splitmix64(&mut state) % self.n as u64) as usize;
                if !chosen.contains(v) {
                    chosen.insert(v);
                    picked.push(v);
                }
                guard += 1;
            }
        }
        picked.sort_unstable();
        self.sample = picked;
        self.sample_set = chosen;
        self.rebuild_buckets();
    }

    fn rebuild_buckets(&mut self) {
        self.buckets.clear();
        for i in 0..self.records.len() {
            let sig = self.signature(&self.records[i].0);
            self.buckets.entry(sig).or_default().push(i);
        }
    }

    fn signature(&self, x: &VertexSet) -> u64 {
        let mut sig = 0u64;
        for (pos, &v) in self.sample.iter().enumerate() {
            if x.contains(v) {
                sig |= 1 << pos;
            }
        }
        sig
    }

    pub fn insert(&mut self, key: &VertexSet, lower: u32) {
        if let Some(&i) = self.index.get(key) {
            if self.records[i].1 < lower {
                self.records[i].1 = lower;
            }
            return;
        }
        let i = self.records.len();
        self.records.push((key.clone(), lower));
        self.index.insert(key.clone(), i);
        let sig = self.signature(key);
        self.buckets.entry(sig).or_default().push(i);
        if self.records.len() >= self.next_rebuild {
            self.next_rebuild *= 4;
            self.resample();
        }
    }

    /// Best stored lower bound over subsets of `x`; 1 when nothing applies.
    pub fn query(&self, x: &VertexSet) -> u32 {
        let mut best = 1u32;
        let sig = self.signature(x);
        if sig.count_ones() <= SUBSET_ENUM_LIMIT {
            let mut sub = sig;
            loop {
                if let Some(bucket) = self.buckets.get(&sub) {
                    for &i in bucket {
                        let (key, lower) = &self.records[i];
                        if *lower > best && key.is_subset_of(x) {
                            best = *lower;
                        }
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & sig;
            }
        } else {
            for (key, lower) in self.records.iter().take(SUBSET_FALLBACK_SCAN) {
                if *lower > best && key.is_subset_of(x) {
                    best = *lower;
                }
            }
        }
        best
    }
}

/// `ceil(log2(x))` for `x >= 1`.
pub(crate) fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Treewidth-style contraction bound, plus one.
///
/// Repeatedly takes a minimum-degree vertex of the current minor, records its
/// degree, and contracts it into the neighbor with the fewest common
/// neighbors. The maximum recorded degree lower-bounds the treewidth of
/// `G[x]`, hence `+1` lower-bounds its treedepth. Ties break to the lowest
/// index.
pub fn mmd_plus_lb(g: &Graph, x: &VertexSet) -> usize {
    let mut adj: Vec<VertexSet> = (0..g.n())
        .map(|v| {
            if x.contains(v) {
                g.adjacency(v).intersection(x)
            } else {
                VertexSet::empty(g.n())
            }
        })
        .collect();
    let mut active = x.clone();
    let mut best = 0usize;
    while let Some(lowest) = active.first() {
        let mut v = lowest;
        let mut dv = usize::MAX;
        for u in &active {
            let d = adj[u].len();
            if d < dv {
                dv = d;
                v = u;
            }
        }
        best = best.max(dv);
        if dv == 0 {
            active.remove(v);
            continue;
        }
        let mut target = usize::MAX;
        let mut common = usize::MAX;
        for w in &adj[v] {
            let c = adj[v].intersection(&adj[w]).len();
            if c < common {
                common = c;
                target = w;
            }
        }
        // contract v into target
        let nv = adj[v].clone();
        for w in &nv {
            adj[w].remove(v);
        }
        for w in &nv {
            if w != target {
                adj[target].insert(w);
                adj[w].insert(target);
            }
        }
        adj[v] = VertexSet::empty(g.n());
        active.remove(v);
    }
    best + 1
}

/// Lower bound from the longest simple path and cycle found by greedy
/// depth-first walks: one walk per root, stepping to the unvisited neighbor
/// of highest inner degree, then scanning the walk for chords closing long
/// cycles. `td(P_L) = ceil(log2(L+1))` and `td(C_c) = ceil(log2(c)) + 1`.
pub fn dfs_path_cycle_lb(g: &Graph, x: &VertexSet) -> usize {
    let mut pos = vec![usize::MAX; g.n()];
    let mut best_path = 0usize;
    let mut best_cycle = 0usize;
    for root in x {
        let mut walk = vec![root];
        pos[root] = 0;
        loop {
            let cur = *walk.last().unwrap();
            let mut next = None;
            let mut next_deg = 0usize;
            for w in &g.adjacency(cur).intersection(x) {
                if pos[w] == usize::MAX {
                    let d = g.adjacency(w).intersection(x).len();
                    if next.is_none() || d > next_deg {
                        next = Some(w);
                        next_deg = d;
                    }
                }
            }
            match next {
                Some(w) => {
                    pos[w] = walk.len();
                    walk.push(w);
                }
                None => break,
            }
        }
        best_path = best_path.max(walk.len());
        for (j, &v) in walk.iter().enumerate() {
            for w in &g.adjacency(v).intersection(x) {
                let p = pos[w];
                if p != usize::MAX && p + 2 <= j {
                    best_cycle = best_cycle.max(j - p + 1);
                }
            }
        }
        for &v in &walk {
            pos[v] = usize::MAX;
        }
    }
    let mut lb = 1;
    if best_path >= 1 {
        lb = lb.max(ceil_log2(best_path + 1));
    }
    if best_cycle >= 3 {
        lb = lb.max(ceil_log2(best_cycle) + 1);
    }
    lb
}

const ISO_MAX_VERTICES: usize = 64;
const ISO_VERIFY_BUDGET: usize = 100_000;

/// Transfers lower bounds between isomorphic induced subgraphs.
///
/// Candidates are grouped by an isomorphism-invariant fingerprint (size,
/// edge count, degree multiset, two rounds of color refinement); a hit is
/// only used after an exact backtracking isomorphism check, so transfers are
/// always sound. Upper bounds are not transferred: that would require
/// remapping the witness.
pub struct IsoTable {
    map: FxHashMap<u64, Vec<(VertexSet, u32)>>,
}

impl IsoTable {
    pub fn new() -> Self {
        IsoTable {
            map: FxHashMap::default(),
        }
    }

    pub fn insert(&mut self, g: &Graph, x: &VertexSet, lower: u32) {
        if x.len() > ISO_MAX_VERTICES {
            return;
        }
        let key = fingerprint(g, x);
        let bucket = self.map.entry(key).or_default();
        for (stored, bound) in bucket.iter_mut() {
            if stored == x {
                *bound = (*bound).max(lower);
                return;
            }
        }
        bucket.push((x.clone(), lower));
    }

    /// Best transferable lower bound from a verified isomorphic twin.
    pub fn lookup(&self, g: &Graph, x: &VertexSet) -> Option<u32> {
        if x.len() > ISO_MAX_VERTICES {
            return None;
        }
        let key = fingerprint(g, x);
        let bucket = self.map.get(&key)?;
        let (adj_x, colors_x) = local_profile(g, x);
        let mut best = None;
        for (stored, lower) in bucket {
            if stored == x {
                best = Some(best.map_or(*lower, |b: u32| b.max(*lower)));
                continue;
            }
            if best.is_some_and(|b| b >= *lower) {
                continue;
            }
            let (adj_s, colors_s) = local_profile(g, stored);
            if isomorphic(&adj_x, &colors_x, &adj_s, &colors_s) {
                best = Some(*lower);
            }
        }
        best
    }
}

impl Default for IsoTable {
    fn default() -> Self {
        Self::new()
    }
}

fn local_adj(g: &Graph, x: &VertexSet) -> Vec<u64> {
    let verts: Vec<usize> = x.iter().collect();
    let mut rows = vec![0u64; verts.len()];
    for (i, &v) in verts.iter().enumerate() {
        for (j, &w) in verts.iter().enumerate() {
            if g.adjacency(v).contains(w) {
                rows[i] |= 1 << j;
            }
        }
    }
    rows
}

fn wl_colors(adj: &[u64], rounds: usize) -> Vec<u64> {
    let n = adj.len();
    let mut colors: Vec<u64> = adj.iter().map(|r| r.count_ones() as u64).collect();
    for _ in 0..rounds {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut neigh: Vec<u64> = (0..n)
                .filter(|&w| adj[v] >> w & 1 != 0)
                .map(|w| colors[w])
                .collect();
            neigh.sort_unstable();
            let mut h = colors[v].wrapping_mul(0x9E37_79B9_7F4A_7C15);
            for c in neigh {
                h ^= c.wrapping_mul(0xBF58_476D_1CE4_E5B9);
                h = h.rotate_left(23).wrapping_mul(0x94D0_49BB_1331_11EB);
            }
            next.push(h);
        }
        colors = next;
    }
    colors
}

fn local_profile(g: &Graph, x: &VertexSet) -> (Vec<u64>, Vec<u64>) {
    let adj = local_adj(g, x);
    let colors = wl_colors(&adj, 2);
    (adj, colors)
}

fn fingerprint(g: &Graph, x: &VertexSet) -> u64 {
    let (adj, colors) = local_profile(g, x);
    let mut degs: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    degs.sort_unstable();
    let edges: u32 = degs.iter().sum::<u32>() / 2;
    let mut hist = colors;
    hist.sort_unstable();
    let mut h = (adj.len() as u64) << 32 | edges as u64;
    for d in degs {
        h ^= (d as u64).wrapping_mul(0xD6E8_FEB8_6659_FD93);
        h = h.rotate_left(17);
    }
    for c in hist {
        h ^= c.wrapping_mul(0xA076_1D64_78BD_642F);
        h = h.rotate_left(29).wrapping_mul(0xE703_7ED1_A0B4_28DB);
    }
    h
}

/// Exact isomorphism test between two small graphs with precomputed vertex
/// colors; gives up (returns false) past a node budget.
fn isomorphic(adj_a: &[u64], col_a: &[u64], adj_b: &[u64], col_b: &[u64]) -> bool {
    let n = adj_a.len();
    if adj_b.len() != n {
        return false;
    }
    let mut sa = col_a.to_vec();
    let mut sb = col_b.to_vec();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }
    // order A's vertices by color rarity, then degree
    let mut freq: FxHashMap<u64, usize> = FxHashMap::default();
    for &c in col_a {
        *freq.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        (
            freq[&col_a[v]],
            usize::MAX - adj_a[v].count_ones() as usize,
            v,
        )
    });

    struct Search<'a> {
        order: &'a [usize],
        adj_a: &'a [u64],
        col_a: &'a [u64],
        adj_b: &'a [u64],
        col_b: &'a [u64],
        mapping: Vec<usize>,
        used: u64,
        budget: usize,
    }

    impl Search<'_> {
        fn rec(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for j in 0..self.adj_b.len() {
                if self.used >> j & 1 != 0 || self.col_b[j] != self.col_a[v] {
                    continue;
                }
                if self.budget == 0 {
                    return false;
                }
                self.budget -= 1;
                let ok = self.order[..depth]
                    .iter()
                    .all(|&p| (self.adj_a[v] >> p & 1) == (self.adj_b[j] >> self.mapping[p] & 1));
                if !ok {
                    continue;
                }
                self.mapping[v] = j;
                self.used |= 1 << j;
                if self.rec(depth + 1) {
                    return true;
                }
                self.mapping[v] = usize::MAX;
                self.used &= !(1 << j);
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        adj_a,
        col_a,
        adj_b,
        col_b,
        mapping: vec![usize::MAX; n],
        used: 0,
        budget: ISO_VERIFY_BUDGET,
    };
    search.rec(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_td;

    fn vs(n: usize, vals: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vals.iter().copied())
    }

    #[test]
    fn memo_merge_tightens() {
        let mut memo = MemoTable::new();
        let x = vs(8, &[1, 2, 5]);
        memo.put(&x, 2, 4, None);
        memo.put(&x, 3, 4, None);
        let e = memo.get(&x).unwrap();
        assert_eq!((e.lower, e.upper), (3, 4));
        assert!(memo.get(&vs(8, &[0])).is_none());
    }

    #[test]
    #[should_panic(expected = "crossed bounds")]
    fn memo_crossed_bounds_abort() {
        let mut memo = MemoTable::new();
        let x = vs(8, &[1, 2]);
        memo.put(&x, 2, 3, None);
        memo.put(&x, 4, 3, None);
    }

    #[test]
    fn memo_survives_growth() {
        let mut memo = MemoTable::new();
        for i in 0..500usize {
            let key = VertexSet::from_indices(32, [i % 32, (i * 7) % 32, (i * 13) % 31]);
            memo.put(&key, 1, 20, None);
        }
        for i in 0..500usize {
            let key = VertexSet::from_indices(32, [i % 32, (i * 7) % 32, (i * 13) % 31]);
            assert!(memo.get(&key).is_some());
        }
    }

    #[test]
    fn subset_store_examples() {
        let mut store = SubsetStore::new(8);
        store.insert(&vs(8, &[0, 1]), 2);
        assert_eq!(store.query(&vs(8, &[0, 1, 2])), 2);

        let mut store = SubsetStore::new(8);
        store.insert(&vs(8, &[0, 3]), 3);
        assert_eq!(
            store.query(&vs(8, &[0, 1, 2])),
            1,
            "{{a,d}} is not a subset"
        );

        let store = SubsetStore::new(8);
        assert_eq!(store.query(&vs(8, &[4, 5])), 1);
    }

    #[test]
    fn subset_store_finds_all_subsets_with_forced_sample() {
        let mut store = SubsetStore::new(6);
        store.force_sample(vec![0, 2, 4]);
        // every nonempty subset of {0..5} gets its size stored as "lower"
        for mask in 1u32..64 {
            let set = VertexSet::from_indices(6, (0..6).filter(|&v| mask >> v & 1 != 0));
            store.insert(&set, set.len() as u32);
        }
        for mask in 1u32..64 {
            let set = VertexSet::from_indices(6, (0..6).filter(|&v| mask >> v & 1 != 0));
            // the best subset of `set` is `set` itself
            assert_eq!(store.query(&set), set.len() as u32);
        }
    }

    #[test]
    fn mmd_plus_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(mmd_plus_lb(&k4, &k4.vertex_set()), 4);
        let p6 = Graph::path(6);
        assert_eq!(mmd_plus_lb(&p6, &p6.vertex_set()), 2);
        let e = Graph::edgeless(5);
        assert_eq!(mmd_plus_lb(&e, &e.vertex_set()), 1);
    }

    #[test]
    fn dfs_examples() {
        let p8 = Graph::path(8);
        assert_eq!(dfs_path_cycle_lb(&p8, &p8.vertex_set()), 4);
        assert_eq!(oracle_td(&p8, &p8.vertex_set()), 4, "bound is tight here");
        let c4 = Graph::cycle(4);
        assert_eq!(dfs_path_cycle_lb(&c4, &c4.vertex_set()), 3);
        let k2 = Graph::complete(2);
        assert_eq!(dfs_path_cycle_lb(&k2, &k2.vertex_set()), 2);
    }

    #[test]
    fn bounds_never_exceed_oracle_td() {
        // a few assorted graphs
        let graphs = vec![
            Graph::path(7),
            Graph::cycle(6),
            Graph::complete(5),
            Graph::star(4),
            Graph::new(
                7,
                [
                    (0, 1),
                    (1, 2),
                    (2, 0),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 3),
                    (0, 6),
                ],
            ),
        ];
        for g in &graphs {
            let x = g.vertex_set();
            let td = oracle_td(g, &x);
            assert!(mmd_plus_lb(g, &x) <= td, "mmd+ too high on {g:?}");
            assert!(
                dfs_path_cycle_lb(g, &x) <= td,
                "dfs bound too high on {g:?}"
            );
        }
    }

    #[test]
    fn iso_transfer_between_disjoint_cycles() {
        // two disjoint copies of C5
        let edges: Vec<(usize, usize)> = (0..5)
            .map(|v| (v, (v + 1) % 5))
            .chain((0..5).map(|v| (5 + v, 5 + (v + 1) % 5)))
            .collect();
        let g = Graph::new(10, edges);
        let copy1 = vs(10, &[0, 1, 2, 3, 4]);
        let copy2 = vs(10, &[5, 6, 7, 8, 9]);
        let mut table = IsoTable::new();
        table.insert(&g, &copy1, 4);
        assert_eq!(table.lookup(&g, &copy2), Some(4));
    }

    #[test]
    fn iso_rejects_non_isomorphic() {
        // P4 (degrees 1,2,2,1) vs K_{1,3} (degrees 3,1,1,1) inside one graph
        let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (4, 5), (4, 6), (4, 7)]);
        let path = vs(8, &[0, 1, 2, 3]);
        let star = vs(8, &[4, 5, 6, 7]);
        let mut table = IsoTable::new();
        table.insert(&g, &path, 3);
        assert_eq!(table.lookup(&g, &star), None);
        let empty = IsoTable::new();
        assert_eq!(empty.lookup(&g, &path), None);
    }
}
