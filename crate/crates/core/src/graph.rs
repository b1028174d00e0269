//! Immutable simple undirected graphs over dense vertex indices `[0, n)`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;

/// Upper bound on the order of any graph this crate will build.
///
/// Adjacency is stored as one bitset per vertex, so memory grows as `n²/8`
/// bytes.
pub const MAX_ORDER: usize = 8192;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {{{u},{v}}} has an endpoint outside [0, {n})")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is outside [0, {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order {requested} exceeds the supported maximum of {max}")]
    Capacity { requested: usize, max: usize },
}

/// A set of unordered vertex pairs, stored normalized (`u < v`), sorted and
/// deduplicated.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    /// Vertices touched by at least one pair.
    pub fn vertices(&self) -> VertexSet {
        self.0.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// True iff no two pairs share an endpoint.
    pub fn is_matching(&self) -> bool {
        let mut seen = VertexSet::new();
        self.0.iter().all(|&(u, v)| seen.insert(u) && seen.insert(v))
    }
}

impl FromIterator<(usize, usize)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut pairs: Vec<_> = iter.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        Self(pairs)
    }
}

/// Simple undirected graph. Immutable once built.
///
/// Adjacency is symmetric and loop-free; every construction path goes
/// through [`Graph::new`] or the checked builders in this module.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(GraphError::Capacity { requested: n, max: MAX_ORDER });
        }
        let mut adj = vec![VertexSet::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].insert(v) {
                adj[v].insert(u);
                edge_count += 1;
            }
        }
        let g = Self { adj, edge_count };
        debug_assert!(g.is_well_formed());
        Ok(g)
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, [])
    }

    /// Builds from one adjacency mask per vertex. Callers guarantee symmetry
    /// and an empty diagonal.
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let adj: Vec<VertexSet> = masks.iter().map(|&m| VertexSet::from_u64(m)).collect();
        let edge_count = masks.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2;
        let g = Self { adj, edge_count };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let n = self.order();
        self.adj.iter().enumerate().all(|(v, nbrs)| {
            !nbrs.contains(v) && nbrs.last().is_none_or(|m| m < n) && nbrs.iter().all(|u| self.adj[u].contains(v))
        })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Open neighborhood `N(v)`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(VertexSet::len).min()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(VertexSet::is_empty)
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges().collect())
    }

    fn check_members(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(v) if v >= self.order() => Err(GraphError::VertexOutOfRange { vertex: v, n: self.order() }),
            _ => Ok(()),
        }
    }

    /// Open neighborhood of a set: the union of `N(v)` over `v ∈ s`.
    ///
    /// This may intersect `s` when `s` is not independent.
    pub fn neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_members(s)?;
        let mut out = VertexSet::new();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        Ok(out)
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_members(s)?;
        Ok(s.iter().all(|v| self.adj[v].is_disjoint(s)))
    }

    pub fn is_vertex_cover(&self, s: &VertexSet) -> Result<bool, GraphError> {
        self.check_members(s)?;
        Ok(self.edges().all(|(u, v)| s.contains(u) || s.contains(v)))
    }

    /// Every pair is an edge here and no two share an endpoint.
    pub fn is_matching(&self, m: &EdgeSet) -> bool {
        m.iter().all(|(u, v)| self.has_edge(u, v)) && m.is_matching()
    }

    /// Every pair is an edge here and every vertex is covered.
    pub fn is_edge_cover(&self, c: &EdgeSet) -> bool {
        c.iter().all(|(u, v)| self.has_edge(u, v)) && c.vertices() == VertexSet::full(self.order())
    }

    /// One component. The graphs of order 0 and 1 count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::from([0]);
        let mut frontier = vec![0];
        while let Some(v) = frontier.pop() {
            for u in &self.adj[v] {
                if seen.insert(u) {
                    frontier.push(u);
                }
            }
        }
        seen.len() == n
    }

    /// Subgraph induced on `[0, k)`.
    pub fn induced_prefix(&self, k: usize) -> Result<Graph, GraphError> {
        if k > self.order() {
            return Err(GraphError::VertexOutOfRange { vertex: k, n: self.order() });
        }
        let keep = VertexSet::full(k);
        let adj = self.adj[..k].iter().map(|nbrs| nbrs.intersection(&keep)).collect::<Vec<_>>();
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Ok(Graph { adj, edge_count })
    }

    /// Adjacency rows as `u64` masks, when the order allows it.
    pub(crate) fn masks_u64(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        self.adj.iter().map(VertexSet::to_u64).collect()
    }

    pub(crate) fn masks_u128(&self) -> Option<Vec<u128>> {
        if self.order() > 128 {
            return None;
        }
        self.adj.iter().map(VertexSet::to_u128).collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph").field("n", &self.order()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn construction_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert_eq!(c4().degrees(), vec![2, 2, 2, 2]);
        let p3 = Graph::new(3, [(0, 1), (0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(2, [(0, 2)]), Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 }));
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::empty(MAX_ORDER + 1), Err(GraphError::Capacity { .. })));
    }

    #[test]
    fn neighborhood_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.neighborhood(&VertexSet::from([0, 2])).unwrap(), VertexSet::from([1]));
        assert_eq!(p3.neighborhood(&VertexSet::new()).unwrap(), VertexSet::new());
        // open neighborhood: a non-independent set meets its own neighborhood
        assert_eq!(p3.neighborhood(&VertexSet::from([0, 1])).unwrap(), VertexSet::from([0, 1, 2]));
        assert!(p3.neighborhood(&VertexSet::from([3])).is_err());

        // K5 on 0..5 with pendants 5 and 6 at hub 0
        let mut edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        edges.extend([(0, 5), (0, 6)]);
        let g = Graph::new(7, edges).unwrap();
        let s = VertexSet::from([5, 6]);
        let scan: VertexSet = (0..7).filter(|&u| s.iter().any(|p| g.has_edge(u, p))).collect();
        assert_eq!(scan, VertexSet::from([0]));
        assert_eq!(g.neighborhood(&s).unwrap(), scan);
    }

    #[test]
    fn predicate_examples() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert!(c4().is_independent(&VertexSet::from([0, 2])).unwrap());
        assert!(!k2.is_independent(&VertexSet::from([0, 1])).unwrap());
        assert!(c4().is_independent(&VertexSet::new()).unwrap());
        assert!(k2.is_vertex_cover(&VertexSet::from([0])).unwrap());
        assert!(c4().is_vertex_cover(&VertexSet::from([0, 2])).unwrap());
        assert!(!c4().is_vertex_cover(&VertexSet::from([0])).unwrap());
        assert!(c4().is_independent(&VertexSet::from([9])).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::new(2, [(0, 1)]).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    fn random_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    #[test]
    fn cover_iff_complement_independent_exhaustive() {
        for n in 1..=5usize {
            let pairs: Vec<_> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for emask in 0u32..1 << pairs.len() {
                let g = Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| emask >> i & 1 == 1).map(|(_, &e)| e))
                    .unwrap();
                for smask in 0u64..1 << n {
                    let s = VertexSet::from_u64(smask);
                    assert_eq!(g.is_vertex_cover(&s).unwrap(), g.is_independent(&s.complement(n)).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn neighborhood_distributes_over_disjoint_union(g in random_graph(10), x in any::<u64>(), y in any::<u64>()) {
            let n = g.order();
            let a = VertexSet::from_u64(x & ((1 << n) - 1));
            let b = VertexSet::from_u64(y & !x & ((1 << n) - 1));
            let lhs = g.neighborhood(&a.union(&b)).unwrap();
            prop_assert_eq!(lhs, g.neighborhood(&a).unwrap().union(&g.neighborhood(&b).unwrap()));
        }

        #[test]
        fn cover_iff_complement_independent(g in random_graph(12), s in any::<u64>()) {
            let n = g.order();
            let s = VertexSet::from_u64(s & ((1 << n) - 1));
            prop_assert_eq!(g.is_vertex_cover(&s).unwrap(), g.is_independent(&s.complement(n)).unwrap());
        }

        #[test]
        fn adjacency_is_symmetric_and_loop_free(g in random_graph(12)) {
            for v in 0..g.order() {
                prop_assert!(!g.has_edge(v, v));
                for u in g.neighbors(v) {
                    prop_assert!(g.has_edge(u, v));
                }
            }
            prop_assert_eq!(g.edges().count(), g.edge_count());
        }
    }
}
