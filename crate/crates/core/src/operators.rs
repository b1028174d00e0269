//! Graph constructions: splitting graph, bipartite double cover, the
//! pendant-at-a-clique family, standard generators and exhaustive labeled
//! enumeration.

use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::format::{write_dot, DotLabels};
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("family parameters need n >= 2 and n <= k <= 2n-2, got n={n}, k={k}")]
    FamilyRange { n: usize, k: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// A splitting graph together with its provenance.
///
/// Vertex `v < base_order` is the original vertex `v`; vertex `base_order + v`
/// is its copy `v'`, adjacent exactly to the original neighbors of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    graph: Graph,
    base_order: usize,
}

impl SplitGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    pub fn copy_of(&self, v: usize) -> usize {
        debug_assert!(v < self.base_order);
        self.base_order + v
    }

    pub fn is_copy(&self, v: usize) -> bool {
        v >= self.base_order
    }

    /// The original vertex a copy stands for; identity on originals.
    pub fn original_of(&self, v: usize) -> usize {
        if self.is_copy(v) {
            v - self.base_order
        } else {
            v
        }
    }

    /// `V`, the originals.
    pub fn originals(&self) -> VertexSet {
        VertexSet::full(self.base_order)
    }

    /// `V'`, the copies.
    pub fn copies(&self) -> VertexSet {
        VertexSet::range(self.base_order, 2 * self.base_order)
    }

    /// `{v' : v ∈ s}` for a set of originals.
    pub fn copies_of(&self, s: &VertexSet) -> VertexSet {
        s.shifted(self.base_order)
    }

    /// The base graph, recovered as the subgraph induced on `V`.
    pub fn base_graph(&self) -> Graph {
        self.graph.induced_prefix(self.base_order).expect("prefix within order")
    }

    pub fn to_dot(&self) -> String {
        write_dot(&self.graph, DotLabels::Split { base_order: self.base_order })
    }
}

fn check_doubled(n: usize) -> Result<(), GraphError> {
    if 2 * n > MAX_ORDER {
        return Err(GraphError::Capacity { requested: 2 * n, max: MAX_ORDER });
    }
    Ok(())
}

/// Builds `S(G)`: one copy `v'` per vertex, joined to every `u` with `uv ∈ E`.
pub fn splitting_graph(g: &Graph) -> Result<SplitGraph, GraphError> {
    let n = g.order();
    check_doubled(n)?;
    let edges = g.edges().flat_map(|(u, v)| [(u, v), (u, n + v), (v, n + u)]);
    let graph = Graph::new(2 * n, edges)?;
    Ok(SplitGraph { graph, base_order: n })
}

/// Bipartite double cover: parts `[0, n)` and `[n, 2n)`, with `u ~ n+v` and
/// `v ~ n+u` for each edge `uv`.
pub fn bipartite_double_cover(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.order();
    check_doubled(n)?;
    Graph::new(2 * n, g.edges().flat_map(|(u, v)| [(u, n + v), (v, n + u)]))
}

/// Parameters of the pendant family: order `n` and target `k` with
/// `n ≤ k ≤ 2n − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    n: usize,
    k: usize,
}

impl FamilySpec {
    pub fn new(n: usize, k: usize) -> Result<Self, OperatorError> {
        if n < 2 || k < n || k > 2 * n - 2 {
            return Err(OperatorError::FamilyRange { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// All valid specs of order `n`, by increasing `k`.
    pub fn all_for_order(n: usize) -> Result<Vec<Self>, OperatorError> {
        if n < 2 {
            return Err(OperatorError::FamilyRange { n, k: n });
        }
        (n..=2 * n - 2).map(|k| Self::new(n, k)).collect()
    }
}

/// A member of the pendant family with its structural roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    /// Clique vertices, always `[0, c)`.
    pub clique: VertexSet,
    /// The clique vertex carrying the pendants (vertex 0); `None` for `k = n`.
    pub hub: Option<usize>,
    /// Pendant vertices, always the trailing block.
    pub pendants: VertexSet,
}

/// For `k = n` this is `K_n`. Otherwise it is `K_c` with `c = 2n − k − 1`
/// plus `k − n + 1` pendant vertices attached to clique vertex 0.
pub fn counterexample_graph(spec: FamilySpec) -> FamilyGraph {
    let FamilySpec { n, k } = spec;
    if k == n {
        return FamilyGraph {
            spec,
            graph: complete(n),
            clique: VertexSet::full(n),
            hub: None,
            pendants: VertexSet::new(),
        };
    }
    let c = 2 * n - k - 1;
    let clique_edges = (0..c).flat_map(|u| (u + 1..c).map(move |v| (u, v)));
    let pendant_edges = (c..n).map(|p| (0, p));
    let graph = Graph::new(n, clique_edges.chain(pendant_edges)).expect("family edges are in range");
    FamilyGraph { spec, graph, clique: VertexSet::full(c), hub: Some(0), pendants: VertexSet::range(c, n) }
}

/// Panics if `n` exceeds [`MAX_ORDER`], as do the other simple generators.
pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph")
}

/// `K_{1,leaves}` with the center at 0.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path")
}

pub fn cycle(n: usize) -> Result<Graph, OperatorError> {
    if n < 3 {
        return Err(OperatorError::Parameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Ok(Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))?)
}

/// `G(n, p)`: each pair `u < v`, visited in lexicographic order, is an edge
/// with probability `p`, drawn from ChaCha8 seeded with `seed`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph, OperatorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(OperatorError::Parameter(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph whose edge bits are `index`, with bit `t` standing for
/// the `t`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`.
/// `None` if it is disconnected.
pub fn connected_graph_from_index(n: usize, index: u64) -> Option<Graph> {
    let mut masks = [0u64; MAX_ENUMERATION_ORDER];
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if index >> t & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            t += 1;
        }
    }
    let masks = &masks[..n];
    if n > 1 {
        let (mut seen, mut frontier) = (1u64, 1u64);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = masks[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        if seen.count_ones() as usize != n {
            return None;
        }
    }
    Some(Graph::from_masks(masks))
}

/// Every connected labeled graph on `n` vertices, by increasing edge-subset
/// index. No isomorphism reduction.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs, OperatorError> {
    ConnectedGraphs::with_range(n, 0..labeled_graph_count(n.min(MAX_ENUMERATION_ORDER)))
}

/// Stream over a slice of the edge-subset index space; slices can be handed
/// to separate workers.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    n: usize,
    indices: Range<u64>,
}

impl ConnectedGraphs {
    pub fn with_range(n: usize, indices: Range<u64>) -> Result<Self, OperatorError> {
        if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
            return Err(OperatorError::Parameter(format!(
                "enumeration supports 2 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
            )));
        }
        let end = indices.end.min(labeled_graph_count(n));
        Ok(Self { n, indices: indices.start.min(end)..end })
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.indices.by_ref().find_map(|i| connected_graph_from_index(self.n, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_graph6;

    fn is_two_colored(g: &Graph, left: &VertexSet) -> bool {
        g.edges().all(|(u, v)| left.contains(u) != left.contains(v))
    }

    fn components(g: &Graph) -> usize {
        let mut seen = VertexSet::new();
        let mut count = 0;
        for s in 0..g.order() {
            if seen.insert(s) {
                count += 1;
                let mut stack = vec![s];
                while let Some(v) = stack.pop() {
                    stack.extend(g.neighbors(v).iter().filter(|&u| seen.insert(u)));
                }
            }
        }
        count
    }

    #[test]
    fn split_of_k2_is_p4() {
        let s = splitting_graph(&complete(2)).unwrap();
        assert_eq!(s.graph().edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
        // b'-a-b-a' is a path: degrees 2,2,1,1 and connected
        assert_eq!(s.graph().degrees(), vec![2, 2, 1, 1]);
        assert_eq!(components(s.graph()), 1);
        assert_eq!(s.copy_of(1), 3);
        assert_eq!(s.original_of(3), 1);
    }

    #[test]
    fn split_edge_counts() {
        for g in [complete(5), star(4), path(6), cycle(5).unwrap()] {
            let s = splitting_graph(&g).unwrap();
            assert_eq!(s.graph().edge_count(), 3 * g.edge_count());
        }
        let s = splitting_graph(&Graph::empty(4).unwrap()).unwrap();
        assert_eq!((s.graph().order(), s.graph().edge_count()), (8, 0));
    }

    #[test]
    fn split_capacity_error() {
        let g = Graph::empty(MAX_ORDER / 2 + 1).unwrap();
        assert!(matches!(splitting_graph(&g), Err(GraphError::Capacity { .. })));
        assert!(matches!(bipartite_double_cover(&g), Err(GraphError::Capacity { .. })));
    }

    #[test]
    fn double_cover_examples() {
        let b = bipartite_double_cover(&complete(2)).unwrap();
        assert_eq!(b.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
        assert!(is_two_colored(&b, &VertexSet::full(2)));
        assert_eq!(bipartite_double_cover(&Graph::empty(3).unwrap()).unwrap().edge_count(), 0);

        let b = bipartite_double_cover(&cycle(4).unwrap()).unwrap();
        assert_eq!(components(&b), 2);
        // two 4-cycles: 2-regular with 8 edges
        assert_eq!(b.degrees(), vec![2; 8]);
        assert_eq!(b.edge_count(), 8);
    }

    #[test]
    fn family_examples() {
        let k6 = counterexample_graph(FamilySpec::new(6, 6).unwrap());
        assert_eq!(k6.graph, complete(6));
        assert_eq!(k6.hub, None);

        let g = counterexample_graph(FamilySpec::new(6, 10).unwrap());
        assert_eq!(g.graph, star(5));
        assert_eq!(g.pendants, VertexSet::range(1, 6));

        let g = counterexample_graph(FamilySpec::new(6, 8).unwrap());
        assert_eq!(g.clique, VertexSet::from([0, 1, 2]));
        assert_eq!(g.pendants, VertexSet::from([3, 4, 5]));
        assert_eq!(g.graph.edge_count(), 3 + 3);
        assert_eq!(g.graph.neighborhood(&g.pendants).unwrap(), VertexSet::from([0]));
    }

    #[test]
    fn family_range_errors() {
        assert!(FamilySpec::new(1, 1).is_err());
        assert!(FamilySpec::new(6, 5).is_err());
        assert!(FamilySpec::new(6, 11).is_err());
        assert_eq!(FamilySpec::all_for_order(2).unwrap().len(), 1);
    }

    #[test]
    fn family_members_are_connected_of_order_n() {
        for n in 2..=10 {
            for spec in FamilySpec::all_for_order(n).unwrap() {
                let fam = counterexample_graph(spec);
                assert_eq!(fam.graph.order(), n);
                assert!(fam.graph.is_connected(), "{spec:?}");
                assert_eq!(fam.pendants.len(), if spec.k() == n { 0 } else { spec.k() - n + 1 });
            }
        }
    }

    #[test]
    fn generators() {
        assert_eq!(complete(2), Graph::new(2, [(0, 1)]).unwrap());
        assert_eq!(star(3).degrees(), vec![3, 1, 1, 1]);
        assert_eq!(path(4).edge_count(), 3);
        assert!(cycle(2).is_err());
        assert!(erdos_renyi(5, 1.5, 0).is_err());
        let a = erdos_renyi(10, 0.5, 42).unwrap();
        assert_eq!(write_graph6(&a), write_graph6(&erdos_renyi(10, 0.5, 42).unwrap()));
        assert_ne!(a, erdos_renyi(10, 0.5, 43).unwrap());
        assert_eq!(erdos_renyi(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(erdos_renyi(6, 1.0, 1).unwrap(), complete(6));
    }

    // Frozen stream for the seeded generator; changing the RNG or the pair
    // order is a breaking change for recorded campaigns.
    #[test]
    fn erdos_renyi_stream_is_frozen() {
        assert_eq!(write_graph6(&erdos_renyi(10, 0.5, 42).unwrap()), ERDOS_RENYI_10_05_42);
    }
    const ERDOS_RENYI_10_05_42: &str = "ILMtTXLG?";

    /// Independent count of connected labeled graphs: union-find over an
    /// explicit edge list.
    fn brute_connected_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len())
            .filter(|mask| {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(p: &mut [usize], x: usize) -> usize {
                    if p[x] != x {
                        let r = find(p, p[x]);
                        p[x] = r;
                    }
                    p[x]
                }
                for (t, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> t & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        parent[a] = b;
                    }
                }
                let root = find(&mut parent, 0);
                (0..n).all(|v| find(&mut parent, v) == root)
            })
            .count()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(brute_connected_count(3), 4);
        assert_eq!(brute_connected_count(4), 38);
        for n in 2..=5 {
            assert_eq!(enumerate_connected_graphs(n).unwrap().count(), brute_connected_count(n), "n={n}");
        }
        assert_eq!(enumerate_connected_graphs(2).unwrap().next().unwrap(), complete(2));
        assert!(enumerate_connected_graphs(1).is_err());
        assert!(enumerate_connected_graphs(9).is_err());
    }

    #[test]
    fn enumeration_index_matches_graph6_bits() {
        // index bits are the graph6 body bits, so the edge sets line up
        let g = connected_graph_from_index(4, 0b101101).unwrap();
        assert_eq!(g, cycle(4).unwrap());
    }

    #[test]
    fn enumeration_partitions_cover_the_stream() {
        let whole: Vec<Graph> = enumerate_connected_graphs(5).unwrap().collect();
        let halves: Vec<Graph> = ConnectedGraphs::with_range(5, 0..300)
            .unwrap()
            .chain(ConnectedGraphs::with_range(5, 300..u64::MAX).unwrap())
            .collect();
        assert_eq!(whole, halves);
    }

    #[test]
    fn split_invariants_exhaustive() {
        for n in 2..=6 {
            for g in enumerate_connected_graphs(n).unwrap() {
                let s = splitting_graph(&g).unwrap();
                let sg = s.graph();
                assert_eq!(sg.order(), 2 * n);
                assert_eq!(sg.edge_count(), 3 * g.edge_count());
                assert!(sg.is_independent(&s.copies()).unwrap());
                assert_eq!(s.base_graph(), g);
                for v in 0..n {
                    assert_eq!(sg.degree(v), 2 * g.degree(v));
                    assert_eq!(sg.degree(s.copy_of(v)), g.degree(v));
                    assert_eq!(sg.neighbors(s.copy_of(v)), g.neighbors(v));
                }
                let b = bipartite_double_cover(&g).unwrap();
                assert!(is_two_colored(&b, &VertexSet::full(n)));
            }
        }
    }
}
