//! Enumeration of minimal separators.
//!
//! All enumerators are variants of one closure scheme: seed with the
//! separators close to a vertex (`N(C)` for components `C` of the host minus
//! a closed neighborhood) and grow the family with the generation step that
//! takes `N(C)` for components of `host \ (S ∪ N(v))`, `v ∈ S`. The exact
//! enumerator runs the closure untruncated and filters by size afterwards;
//! the heuristic enumerator discards oversized separators immediately, which
//! is faster but may miss members of `Δ_k`; the star-constrained enumerator
//! prunes by the shape of the anchor-side component instead of by size.

use std::collections::BTreeSet;

use rustc_hash::FxHashSet;

use crate::graph::Graph;
use crate::vset::VertexSet;

/// Default cap on the number of distinct separators one closure may collect.
pub const DEFAULT_SEPARATOR_BUDGET: usize = 2_000_000;

/// Raised when a closure would exceed its family-size budget. Callers must
/// treat the affected subproblem as unresolved rather than as a "no".
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("separator enumeration exceeded the budget of {limit} separators")]
pub struct BudgetExceeded {
    pub limit: usize,
}

/// A vertex set certified minimal within `host`: `G[host \ vertices]` has at
/// least two components whose boundary is exactly `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separator {
    pub vertices: VertexSet,
    pub host: VertexSet,
}

/// A deduplicated family of minimal separators over one host, every member
/// of size at most `size_bound`.
#[derive(Clone, Debug)]
pub struct SeparatorFamily {
    host: VertexSet,
    size_bound: usize,
    sets: Vec<VertexSet>,
}

impl SeparatorFamily {
    fn new(host: VertexSet, size_bound: usize, mut sets: Vec<VertexSet>) -> Self {
        sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SeparatorFamily {
            host,
            size_bound,
            sets,
        }
    }

    pub fn host(&self) -> &VertexSet {
        &self.host
    }

    pub fn size_bound(&self) -> usize {
        self.size_bound
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.sets.iter()
    }

    pub fn separators(&self) -> impl Iterator<Item = Separator> + '_ {
        self.sets.iter().map(|s| Separator {
            vertices: s.clone(),
            host: self.host.clone(),
        })
    }
}

/// True iff at least two components of `G[host \ s]` have boundary exactly
/// `s`. For a disconnected host this accepts the empty set, matching the
/// subset-scan oracle.
pub fn is_minimal_separator(g: &Graph, host: &VertexSet, s: &VertexSet) -> bool {
    debug_assert!(s.is_subset_of(host));
    let rest = host.difference(s);
    if rest.is_empty() {
        return false;
    }
    let mut full = 0;
    for comp in g.components(host, &rest) {
        if comp.boundary == *s {
            full += 1;
            if full >= 2 {
                return true;
            }
        }
    }
    false
}

enum OnBudget {
    Truncate,
    Error,
}

struct Closure<'g> {
    g: &'g Graph,
    host: VertexSet,
    budget: usize,
    on_budget: OnBudget,
    seen: FxHashSet<VertexSet>,
    queue: BTreeSet<(usize, VertexSet)>,
    out: Vec<VertexSet>,
    hit_budget: bool,
}

impl<'g> Closure<'g> {
    fn new(g: &'g Graph, host: &VertexSet, budget: usize, on_budget: OnBudget) -> Self {
        Closure {
            g,
            host: host.clone(),
            budget,
            on_budget,
            seen: FxHashSet::default(),
            queue: BTreeSet::new(),
            out: Vec::new(),
            hit_budget: false,
        }
    }

    /// Offers `N(C)` of every component of `host \ removed` to the family.
    fn offer_components(
        &mut self,
        removed: &VertexSet,
        accept: &mut impl FnMut(&VertexSet) -> bool,
    ) {
        let rest = self.host.difference(removed);
        for comp in self.g.components(&self.host, &rest) {
            self.offer(comp.boundary, accept);
            if self.hit_budget {
                return;
            }
        }
    }

    fn offer(&mut self, cand: VertexSet, accept: &mut impl FnMut(&VertexSet) -> bool) {
        if self.seen.contains(&cand) {
            return;
        }
        if !is_minimal_separator(self.g, &self.host, &cand) {
            return;
        }
        if !accept(&cand) {
            return;
        }
        if self.out.len() + self.queue.len() >= self.budget {
            self.hit_budget = true;
            return;
        }
        self.seen.insert(cand.clone());
        self.queue.insert((cand.len(), cand));
    }

    fn run(
        mut self,
        anchors: impl IntoIterator<Item = usize>,
        mut accept: impl FnMut(&VertexSet) -> bool,
    ) -> Result<(Vec<VertexSet>, u64), BudgetExceeded> {
        // seeds: separators close to each anchor
        for a in anchors {
            let mut closed = self.g.adjacency(a).intersection(&self.host);
            closed.insert(a);
            self.offer_components(&closed, &mut accept);
            if self.hit_budget {
                break;
            }
        }
        let mut generated = 0u64;
        while !self.hit_budget {
            let Some((_, sep)) = self.queue.pop_first() else {
                break;
            };
            generated += 1;
            for v in &sep {
                let mut removed = self.g.adjacency(v).intersection(&self.host);
                removed.union_with(&sep);
                self.offer_components(&removed, &mut accept);
                if self.hit_budget {
                    break;
                }
            }
            self.out.push(sep);
        }
        if self.hit_budget {
            match self.on_budget {
                OnBudget::Truncate => {
                    // drain whatever was already certified
                    self.out.extend(self.queue.into_iter().map(|(_, s)| s));
                    Ok((self.out, generated))
                }
                OnBudget::Error => Err(BudgetExceeded { limit: self.budget }),
            }
        } else {
            Ok((self.out, generated))
        }
    }
}

/// The separators close to `a`: `{N(C) : C ∈ components(host \ N[a])}`,
/// filtered to minimal separators.
pub fn close_separators(g: &Graph, host: &VertexSet, a: usize) -> SeparatorFamily {
    debug_assert!(host.contains(a));
    let mut closed = g.adjacency(a).intersection(host);
    closed.insert(a);
    let rest = host.difference(&closed);
    let mut seen = FxHashSet::default();
    let mut sets = Vec::new();
    for comp in g.components(host, &rest) {
        if seen.contains(&comp.boundary) {
            continue;
        }
        if is_minimal_separator(g, host, &comp.boundary) {
            seen.insert(comp.boundary.clone());
            sets.push(comp.boundary);
        }
    }
    let bound = host.len();
    SeparatorFamily::new(host.clone(), bound, sets)
}

/// Truncated closure: discards every generated separator larger than `k`
/// before expanding it. Returns a subset of `Δ_k(G[host])`; completeness is
/// not guaranteed. Hitting the budget truncates the family silently, which
/// keeps the subset contract.
pub fn enumerate_heuristic(
    g: &Graph,
    host: &VertexSet,
    k: usize,
    budget: usize,
) -> SeparatorFamily {
    let closure = Closure::new(g, host, budget, OnBudget::Truncate);
    let (sets, _) = closure
        .run(host.iter(), |s| s.len() <= k)
        .expect("truncating closure cannot fail");
    SeparatorFamily::new(host.clone(), k, sets)
}

/// Exactly `Δ_k(G[host])`. The closure is run untruncated (every minimal
/// separator is expanded regardless of size) and filtered by size at the
/// end, so the answer is complete whenever it is returned at all.
pub fn enumerate_exact(
    g: &Graph,
    host: &VertexSet,
    k: usize,
    budget: usize,
) -> Result<SeparatorFamily, BudgetExceeded> {
    let closure = Closure::new(g, host, budget, OnBudget::Error);
    let (sets, _) = closure.run(host.iter(), |_| true)?;
    let sets = sets.into_iter().filter(|s| s.len() <= k).collect();
    Ok(SeparatorFamily::new(host.clone(), k, sets))
}

/// Projects a parent family onto a branch component: `{S' ∩ child}`,
/// deduplicated and filtered to minimal separators of `G[child]` of size at
/// most `parent.size_bound - |N(child)|`. When the parent family was exact
/// for its bound, the result is exactly `Δ_k(G[child])` for that reduced
/// bound.
pub fn induce_separators(
    parent: &SeparatorFamily,
    g: &Graph,
    child: &VertexSet,
) -> SeparatorFamily {
    debug_assert!(child.is_subset_of(parent.host()));
    let offset = g.neighborhood_in(parent.host(), child).len();
    let k = parent.size_bound().saturating_sub(offset);
    let mut seen = FxHashSet::default();
    let mut sets = Vec::new();
    for s in parent.iter() {
        let t = s.intersection(child);
        if t.len() > k || seen.contains(&t) {
            continue;
        }
        seen.insert(t.clone());
        if is_minimal_separator(g, child, &t) {
            sets.push(t);
        }
    }
    SeparatorFamily::new(child.clone(), k, sets)
}

/// All minimal separators `S` of `G[host]` with `|S| <= k` such that `a`
/// lies in a full component `C_a ⊆ N[a]` that induces a star.
///
/// The closure is seeded from `a` only and prunes every intermediate
/// separator whose anchor-side component fails the shape test; sizes are
/// only filtered at the end, since an oversized intermediate may still
/// generate small members. If some component of `host \ (N[a] ∪ N(N[a]))`
/// is not a star, no such separator can have all-star components, and the
/// family is returned empty immediately.
pub fn star_constrained_enumeration(
    g: &Graph,
    host: &VertexSet,
    a: usize,
    k: usize,
    budget: usize,
) -> Result<SeparatorFamily, BudgetExceeded> {
    debug_assert!(host.contains(a));
    let mut closed = g.adjacency(a).intersection(host);
    closed.insert(a);

    let mut far = host.difference(&closed);
    far.subtract(&g.neighborhood_in(host, &closed));
    if g.components(host, &far)
        .iter()
        .any(|c| !g.is_star(&c.vertices))
    {
        return Ok(SeparatorFamily::new(host.clone(), k, Vec::new()));
    }

    let closure = Closure::new(g, host, budget, OnBudget::Error);
    let (sets, _) = closure.run([a], |s| {
        if s.contains(a) {
            return false;
        }
        let side = host.difference(s);
        let comp_a = g.component_of(&side, a);
        comp_a.is_subset_of(&closed) && g.neighborhood_in(host, &comp_a) == *s && g.is_star(&comp_a)
    })?;
    let sets = sets.into_iter().filter(|s| s.len() <= k).collect();
    Ok(SeparatorFamily::new(host.clone(), k, sets))
}
