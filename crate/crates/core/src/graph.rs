//! Undirected simple graphs with bit-set adjacency.
//!
//! Vertices are indices `0..n`. Self-loops are stripped at construction and
//! the bit-set rows make multi-edges unrepresentable. The graph is immutable
//! for the whole search; only preprocessing works on mutable copies.

use crate::vset::VertexSet;

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

/// A connected piece of some induced subgraph, together with its boundary
/// `N(vertices)` inside the host set it was computed against.
#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: VertexSet,
    pub boundary: VertexSet,
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Self {
        let mut adj = vec![VertexSet::empty(n); n];
        let mut m = 0;
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            if u == v || adj[u].contains(v) {
                continue;
            }
            adj[u].insert(v);
            adj[v].insert(u);
            m += 1;
        }
        Graph { n, adj, m }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `N(X)`: the union of the members' neighborhoods, minus `X` itself.
    pub fn neighborhood_set(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in x {
            out.union_with(&self.adj[v]);
        }
        out.subtract(x);
        out
    }

    /// `N(X)` restricted to a host set.
    pub fn neighborhood_in(&self, host: &VertexSet, x: &VertexSet) -> VertexSet {
        let mut out = self.neighborhood_set(x);
        out.intersect_with(host);
        out
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut out = self.adj[v].clone();
        out.insert(v);
        out
    }

    /// Connected components of `G[x]`, each with its boundary `N(C) ∩ host`.
    ///
    /// `x` must be a subset of `host`. Pieces are ordered by their smallest
    /// contained vertex.
    pub fn components(&self, host: &VertexSet, x: &VertexSet) -> Vec<Component> {
        debug_assert!(x.is_subset_of(host));
        let mut out = Vec::new();
        let mut remaining = x.clone();
        while let Some(start) = remaining.first() {
            let comp = self.spread(x, start);
            remaining.subtract(&comp);
            let boundary = self.neighborhood_in(host, &comp);
            out.push(Component {
                vertices: comp,
                boundary,
            });
        }
        out
    }

    /// The connected component of `G[x]` containing `v`.
    pub fn component_of(&self, x: &VertexSet, v: usize) -> VertexSet {
        debug_assert!(x.contains(v));
        self.spread(x, v)
    }

    /// Vertex sets of the components of `G[x]`, without boundaries. Cheaper
    /// than `components` on hot paths that only branch on the pieces.
    pub fn pieces(&self, x: &VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut remaining = x.clone();
        while let Some(start) = remaining.first() {
            let comp = self.spread(&remaining, start);
            remaining.subtract(&comp);
            out.push(comp);
        }
        out
    }

    /// Sizes only: the largest component of `G[x]`.
    pub fn largest_piece(&self, x: &VertexSet) -> usize {
        let mut best = 0;
        let mut remaining = x.clone();
        while let Some(start) = remaining.first() {
            let comp = self.spread(&remaining, start);
            best = best.max(comp.len());
            remaining.subtract(&comp);
        }
        best
    }

    fn spread(&self, x: &VertexSet, start: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(self.n, start);
        let mut frontier = comp.clone();
        loop {
            let mut next = VertexSet::empty(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(x);
            next.subtract(&comp);
            if next.is_empty() {
                return comp;
            }
            comp.union_with(&next);
            frontier = next;
        }
    }

    pub fn is_connected(&self, x: &VertexSet) -> bool {
        match x.first() {
            None => true,
            Some(v) => self.spread(x, v) == *x,
        }
    }

    /// True iff every pair of vertices in `x` is adjacent.
    pub fn is_clique(&self, x: &VertexSet) -> bool {
        for v in x {
            // x \ N[v] must be exactly {v}
            let mut rest = x.difference(&self.adj[v]);
            rest.remove(v);
            if !rest.is_empty() {
                return false;
            }
        }
        true
    }

    /// Number of edges of `G[x]`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        let total: usize = x.iter().map(|v| self.adj[v].intersection(x).len()).sum();
        total / 2
    }

    /// True iff `G[x]` is a star `K_{1,t}` for some `t >= 0`.
    ///
    /// A single vertex and a single edge both count. Assumes `G[x]` is
    /// connected: a connected graph is a star exactly when it has `|x| - 1`
    /// edges and at most one vertex of inner degree at least two.
    pub fn is_star(&self, x: &VertexSet) -> bool {
        let size = x.len();
        if size == 0 {
            return false;
        }
        if self.edges_within(x) != size - 1 {
            return false;
        }
        let high = x
            .iter()
            .filter(|&v| self.adj[v].intersection(x).len() >= 2)
            .count();
        high <= 1
    }

    /// The induced subgraph `G[x]` on compacted indices, plus the map from
    /// local index back to the original vertex.
    pub fn induced(&self, x: &VertexSet) -> (Graph, Vec<usize>) {
        let verts: Vec<usize> = x.iter().collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in verts.iter().enumerate() {
            for w in &self.adj[v].intersection(x) {
                let j = local[w];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        (Graph::new(verts.len(), edges), verts)
    }

    /// Adds an edge to a working copy during preprocessing. Returns false if
    /// the edge already existed or is a self-loop.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        true
    }

    // Families used all over the test suites.

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Star with the center at index 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::new(
            a + b,
            (0..a).flat_map(move |u| (a..a + b).map(move |v| (u, v))),
        )
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::new(n, std::iter::empty())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=[", self.n, self.m)?;
        let mut first = true;
        for u in 0..self.n {
            for v in &self.adj[u] {
                if u < v {
                    if !first {
                        write!(f, ", ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(n: usize, vals: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, vals.iter().copied())
    }

    #[test]
    fn construction_normalizes() {
        let g = Graph::new(3, [(0, 1), (1, 0), (2, 2), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.adjacency(2).contains(2));
    }

    #[test]
    fn neighborhood_of_path() {
        // P4: 0-1-2-3
        let g = Graph::path(4);
        assert_eq!(
            g.neighborhood_set(&vs(4, &[0])),
            vs(4, &[1]),
            "single-vertex neighborhood"
        );
        assert_eq!(g.neighborhood_set(&vs(4, &[1, 2])), vs(4, &[0, 3]));
    }

    #[test]
    fn neighborhood_of_clique_vertex() {
        let g = Graph::complete(4);
        assert_eq!(g.neighborhood_set(&vs(4, &[2])), vs(4, &[0, 1, 3]));
    }

    #[test]
    fn neighborhood_disjoint_from_input() {
        let g = Graph::cycle(6);
        for v in 0..6 {
            for w in v..6 {
                let x = vs(6, &[v, w]);
                assert!(g.neighborhood_set(&x).is_disjoint(&x));
            }
        }
    }

    #[test]
    fn components_split_of_path() {
        let g = Graph::path(4);
        let host = g.vertex_set();
        let comps = g.components(&host, &vs(4, &[0, 2, 3]));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vs(4, &[0]));
        assert_eq!(comps[0].boundary, vs(4, &[1]));
        assert_eq!(comps[1].vertices, vs(4, &[2, 3]));
        assert_eq!(comps[1].boundary, vs(4, &[1]));
    }

    #[test]
    fn components_of_clique_and_cycle() {
        let g = Graph::complete(4);
        let comps = g.components(&g.vertex_set(), &g.vertex_set());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, g.vertex_set());

        // C6 minus two opposite vertices splits symmetrically.
        let c6 = Graph::cycle(6);
        let x = vs(6, &[1, 2, 4, 5]);
        let comps = c6.components(&c6.vertex_set(), &x);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vs(6, &[1, 2]));
        assert_eq!(comps[1].vertices, vs(6, &[4, 5]));
    }

    #[test]
    fn components_partition_property() {
        let g = Graph::new(7, [(0, 1), (1, 2), (3, 4), (5, 6), (2, 0)]);
        let x = g.vertex_set();
        let comps = g.components(&x, &x);
        let mut union = VertexSet::empty(7);
        for c in &comps {
            assert!(union.is_disjoint(&c.vertices));
            union.union_with(&c.vertices);
            // a component cannot grow
            assert!(g.neighborhood_in(&x, &c.vertices).is_empty());
        }
        assert_eq!(union, x);
    }

    #[test]
    fn clique_predicate() {
        let g = Graph::complete(4);
        assert!(g.is_clique(&g.vertex_set()));
        let p = Graph::path(4);
        assert!(p.is_clique(&vs(4, &[0, 1])), "an edge is K2");
        assert!(!p.is_clique(&vs(4, &[0, 1, 2])));
    }

    #[test]
    fn star_predicate() {
        let s = Graph::star(3);
        assert!(s.is_star(&s.vertex_set()));
        let p = Graph::path(4);
        assert!(!p.is_star(&p.vertex_set()), "P4 has two inner vertices");
        assert!(p.is_star(&vs(4, &[2])), "a single vertex is K_{{1,0}}");
        assert!(p.is_star(&vs(4, &[1, 2])), "a single edge is K_{{1,1}}");
        // P3 is K_{1,2}
        assert!(p.is_star(&vs(4, &[0, 1, 2])));
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = Graph::cycle(5);
        let (h, map) = g.induced(&vs(5, &[0, 1, 3]));
        assert_eq!(h.n(), 3);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(map, vec![0, 1, 3]);
        assert!(h.adjacency(0).contains(1));
    }
}
