//! Exhaustive reference implementations used by the test suites.
//!
//! `oracle_td` evaluates the treedepth recurrence directly over subsets and
//! is deliberately independent of the separator-based search path; it is the
//! ground truth every solver result is checked against on small instances.

use crate::graph::Graph;
use crate::separators::is_minimal_separator;
use crate::vset::VertexSet;

/// Hard cap for `oracle_td`: the memo table is `2^|X|` entries.
pub const ORACLE_TD_MAX: usize = 15;

/// Hard cap for `oracle_minseps`: every subset of the host is scanned.
pub const ORACLE_MINSEPS_MAX: usize = 12;

/// Treedepth of `G[x]` by definition: 0 for the empty set, the maximum over
/// components when disconnected, otherwise `1 + min_v td(G[x \ v])`.
pub fn oracle_td(g: &Graph, x: &VertexSet) -> usize {
    let t = x.len();
    assert!(
        t <= ORACLE_TD_MAX,
        "oracle_td is capped at {ORACLE_TD_MAX} vertices"
    );
    let verts: Vec<usize> = x.iter().collect();
    let mut local_adj = vec![0u32; t];
    for (i, &v) in verts.iter().enumerate() {
        for (j, &w) in verts.iter().enumerate() {
            if g.adjacency(v).contains(w) {
                local_adj[i] |= 1 << j;
            }
        }
    }
    let mut memo = vec![u8::MAX; 1usize << t];
    td_rec(&local_adj, (1u32 << t) - 1, &mut memo) as usize
}

fn td_rec(adj: &[u32], mask: u32, memo: &mut [u8]) -> u8 {
    if mask == 0 {
        return 0;
    }
    if memo[mask as usize] != u8::MAX {
        return memo[mask as usize];
    }
    let result;
    let comp = mask_component(adj, mask, mask.trailing_zeros() as usize);
    if comp != mask {
        // disconnected: maximum over the pieces
        let mut best = td_rec(adj, comp, memo);
        let mut rest = mask & !comp;
        while rest != 0 {
            let c = mask_component(adj, rest, rest.trailing_zeros() as usize);
            best = best.max(td_rec(adj, c, memo));
            rest &= !c;
        }
        result = best;
    } else {
        let mut best = u8::MAX;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros();
            scan &= scan - 1;
            best = best.min(1 + td_rec(adj, mask & !(1 << v), memo));
        }
        result = best;
    }
    memo[mask as usize] = result;
    result
}

fn mask_component(adj: &[u32], mask: u32, start: usize) -> u32 {
    let mut comp = 1u32 << start;
    loop {
        let mut next = comp;
        let mut scan = comp;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            next |= adj[v] & mask;
        }
        if next == comp {
            return comp;
        }
        comp = next;
    }
}

/// Every minimal separator of `G[host]` with at most `k` vertices, found by
/// scanning all subsets of the host. Output is sorted by (size, bit pattern).
pub fn oracle_minseps(g: &Graph, host: &VertexSet, k: usize) -> Vec<VertexSet> {
    let t = host.len();
    assert!(
        t <= ORACLE_MINSEPS_MAX,
        "oracle_minseps is capped at {ORACLE_MINSEPS_MAX} vertices"
    );
    let verts: Vec<usize> = host.iter().collect();
    let mut out = Vec::new();
    for mask in 0..(1usize << t) {
        if (mask.count_ones() as usize) > k {
            continue;
        }
        let s = VertexSet::from_indices(
            g.n(),
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 != 0)
                .map(|(_, &v)| v),
        );
        if is_minimal_separator(g, host, &s) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}
