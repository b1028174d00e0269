//! Exact solvers for the independence, vertex cover, matching and edge cover
//! numbers, each returning an optimal witness.
//!
//! Witness ties are broken by the [`VertexSet`] order (for edge sets: the
//! lexicographically smallest sorted pair list), so reports are stable under
//! changes to pruning.

use std::collections::VecDeque;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{EdgeSet, Graph};

/// Largest order the exact solvers accept.
pub const MAX_SOLVER_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("order {order} exceeds the exact solver bound of {max}")]
    TooLarge { order: usize, max: usize },
    #[error("edge cover number is undefined: vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not bipartite with the given part: edge {{{0},{1}}} stays on one side")]
    NotBipartite(usize, usize),
    #[error("vertex {vertex} is outside [0, {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Fixed-width bit masks the branch-and-bound kernels run on.
pub(crate) trait Mask:
    Copy + Eq + BitAnd<Output = Self> + BitOr<Output = Self> + Not<Output = Self> + BitAndAssign + BitOrAssign
{
    const ZERO: Self;
    fn bit(i: usize) -> Self;
    fn count(self) -> usize;
    fn lowest(self) -> usize;
    fn is_zero(self) -> bool {
        self == Self::ZERO
    }
    fn into_set(self) -> VertexSet;
}

macro_rules! impl_mask {
    ($t:ty, $from:ident) => {
        impl Mask for $t {
            const ZERO: Self = 0;
            fn bit(i: usize) -> Self {
                1 << i
            }
            fn count(self) -> usize {
                self.count_ones() as usize
            }
            fn lowest(self) -> usize {
                self.trailing_zeros() as usize
            }
            fn into_set(self) -> VertexSet {
                VertexSet::$from(self)
            }
        }
    };
}

impl_mask!(u64, from_u64);
impl_mask!(u128, from_u128);

/// Runs `f` on the narrowest mask width that fits the graph.
macro_rules! with_masks {
    ($g:expr, |$adj:ident| $body:expr) => {{
        let g: &Graph = $g;
        if let Some($adj) = g.masks_u64() {
            Ok($body)
        } else if let Some($adj) = g.masks_u128() {
            Ok($body)
        } else {
            Err(SolveError::TooLarge { order: g.order(), max: MAX_SOLVER_ORDER })
        }
    }};
}

fn full_mask<M: Mask>(n: usize) -> M {
    (0..n).fold(M::ZERO, |m, v| m | M::bit(v))
}

/// Greedy clique cover of `cand`: the number of cliques bounds how many
/// candidates an independent set can still take.
fn clique_cover_bound<M: Mask>(adj: &[M], mut cand: M) -> usize {
    let mut cliques = 0;
    while !cand.is_zero() {
        let v = cand.lowest();
        let mut clique = M::bit(v);
        let mut common = cand & adj[v];
        while !common.is_zero() {
            let u = common.lowest();
            clique |= M::bit(u);
            common &= adj[u];
        }
        cand &= !clique;
        cliques += 1;
    }
    cliques
}

/// Size of a maximum independent set inside `cand`.
///
/// Branches on the candidate of highest remaining degree: exclude it, or
/// take it and drop its neighbors. Candidates without remaining neighbors
/// are taken outright.
fn mis_size<M: Mask>(adj: &[M], cand: M, taken: usize, best: &mut usize) {
    let mut cand = cand;
    let mut taken = taken;
    let mut pick = None;
    let mut pick_degree = 0;
    let mut rest = cand;
    while !rest.is_zero() {
        let v = rest.lowest();
        rest &= !M::bit(v);
        let d = (adj[v] & cand).count();
        if d == 0 {
            cand &= !M::bit(v);
            taken += 1;
        } else if d > pick_degree {
            pick = Some(v);
            pick_degree = d;
        }
    }
    let Some(v) = pick else {
        *best = (*best).max(taken);
        return;
    };
    if taken + clique_cover_bound(adj, cand) <= *best {
        return;
    }
    mis_size(adj, cand & !M::bit(v), taken, best);
    mis_size(adj, cand & !adj[v] & !M::bit(v), taken + 1, best);
}

/// First independent set of exactly `target` vertices in include-first,
/// ascending-vertex order, i.e. the smallest one in [`VertexSet`] order.
fn first_independent_of_size<M: Mask>(adj: &[M], cand: M, chosen: M, target: usize) -> Option<M> {
    let have = chosen.count();
    if have == target {
        return Some(chosen);
    }
    if cand.is_zero() || have + clique_cover_bound(adj, cand) < target {
        return None;
    }
    let v = cand.lowest();
    let without_v = cand & !M::bit(v);
    first_independent_of_size(adj, without_v & !adj[v], chosen | M::bit(v), target)
        .or_else(|| first_independent_of_size(adj, without_v, chosen, target))
}

fn mis_with<M: Mask>(adj: &[M]) -> (usize, M) {
    let all = full_mask::<M>(adj.len());
    let mut best = 0;
    mis_size(adj, all, 0, &mut best);
    let witness = first_independent_of_size(adj, all, M::ZERO, best).expect("a set of the optimal size exists");
    (best, witness)
}

/// An optimal vertex set with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexSolution {
    pub size: usize,
    pub witness: VertexSet,
}

/// An optimal edge set with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSolution {
    pub size: usize,
    pub witness: EdgeSet,
}

/// Maximum independent set by branch and bound.
///
/// The returned witness is the smallest maximum independent set in
/// [`VertexSet`] order.
pub fn max_independent_set(g: &Graph) -> Result<VertexSolution, SolveError> {
    let (size, witness) = with_masks!(g, |adj| {
        let (size, m) = mis_with(&adj);
        (size, m.into_set())
    })?;
    debug_assert!(g.is_independent(&witness).unwrap_or(false) && witness.len() == size);
    Ok(VertexSolution { size, witness })
}

pub fn independence_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(max_independent_set(g)?.size)
}

/// Minimum vertex cover as the complement of the maximum independent set.
pub fn min_vertex_cover(g: &Graph) -> Result<VertexSolution, SolveError> {
    let mis = max_independent_set(g)?;
    let witness = mis.witness.complement(g.order());
    Ok(VertexSolution { size: g.order() - mis.size, witness })
}

pub fn vertex_cover_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(min_vertex_cover(g)?.size)
}

/// Matching search over `free` vertices. Branches on the lowest free vertex
/// that still has a free neighbor: pair it with each such neighbor in
/// ascending order, then leave it unmatched.
fn matching_search<M: Mask>(adj: &[M], free: M, current: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
    let mut free = free;
    let mut active = 0;
    let mut first = None;
    let mut rest = free;
    while !rest.is_zero() {
        let v = rest.lowest();
        rest &= !M::bit(v);
        if (adj[v] & free).is_zero() {
            free &= !M::bit(v);
        } else {
            active += 1;
            first.get_or_insert(v);
        }
    }
    let Some(v) = first else {
        if current.len() > best.len() {
            best.clone_from(current);
        }
        return;
    };
    if current.len() + active / 2 <= best.len() {
        return;
    }
    let without_v = free & !M::bit(v);
    let mut partners = adj[v] & free;
    while !partners.is_zero() {
        let u = partners.lowest();
        partners &= !M::bit(u);
        current.push((v, u));
        matching_search(adj, without_v & !M::bit(u), current, best);
        current.pop();
    }
    matching_search(adj, without_v, current, best);
}

/// Maximum matching by branch and bound over edges, with the `⌊active/2⌋`
/// bound. Exponential in the worst case; sized for graphs of a few dozen
/// vertices.
pub fn maximum_matching(g: &Graph) -> Result<EdgeSolution, SolveError> {
    let pairs = with_masks!(g, |adj| {
        let mut best = Vec::new();
        matching_search(&adj, full_mask(adj.len()), &mut Vec::new(), &mut best);
        best
    })?;
    let witness: EdgeSet = pairs.into_iter().collect();
    debug_assert!(g.is_matching(&witness));
    Ok(EdgeSolution { size: witness.len(), witness })
}

pub fn matching_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(maximum_matching(g)?.size)
}

/// Minimum edge cover: a maximum matching plus, for each unmatched vertex,
/// its edge to the lowest-indexed neighbor.
pub fn min_edge_cover(g: &Graph) -> Result<EdgeSolution, SolveError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
        return Err(SolveError::IsolatedVertex(v));
    }
    let matching = maximum_matching(g)?;
    let matched = matching.witness.vertices();
    let extra = (0..g.order())
        .filter(|v| !matched.contains(*v))
        .map(|v| (v, g.neighbors(v).first().expect("no isolated vertices")));
    let witness: EdgeSet = matching.witness.iter().chain(extra).collect();
    debug_assert!(g.is_edge_cover(&witness));
    Ok(EdgeSolution { size: witness.len(), witness })
}

pub fn edge_cover_number(g: &Graph) -> Result<usize, SolveError> {
    Ok(min_edge_cover(g)?.size)
}

/// Maximum matching of a bipartite graph by Hopcroft–Karp, `O(E √V)`.
///
/// `left` names one side; every edge must cross between `left` and its
/// complement.
pub fn bipartite_matching(g: &Graph, left: &VertexSet) -> Result<usize, SolveError> {
    let n = g.order();
    if let Some(v) = left.last().filter(|&v| v >= n) {
        return Err(SolveError::VertexOutOfRange { vertex: v, n });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| left.contains(u) == left.contains(v)) {
        return Err(SolveError::NotBipartite(u, v));
    }
    let lefts: Vec<usize> = left.to_vec();
    let adj: Vec<Vec<usize>> = lefts.iter().map(|&u| g.neighbors(u).to_vec()).collect();
    Ok(HopcroftKarp::new(n, &adj).run())
}

const UNMATCHED: usize = usize::MAX;

struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    /// partner of each left index, as a vertex id
    left_mate: Vec<usize>,
    /// partner of each vertex id on the right, as a left index
    right_mate: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(n: usize, adj: &'a [Vec<usize>]) -> Self {
        Self { adj, left_mate: vec![UNMATCHED; adj.len()], right_mate: vec![UNMATCHED; n], dist: vec![0; adj.len()] }
    }

    fn run(mut self) -> usize {
        let mut size = 0;
        while self.layer() {
            for u in 0..self.adj.len() {
                if self.left_mate[u] == UNMATCHED && self.augment(u) {
                    size += 1;
                }
            }
        }
        size
    }

    /// BFS from free left vertices; true if some free right vertex is reached.
    fn layer(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adj.len() {
            if self.left_mate[u] == UNMATCHED {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = UNMATCHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                match self.right_mate[v] {
                    UNMATCHED => found = true,
                    w if self.dist[w] == UNMATCHED => {
                        self.dist[w] = self.dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn augment(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let v = self.adj[u][i];
            let w = self.right_mate[v];
            if w == UNMATCHED || (self.dist[w] == self.dist[u] + 1 && self.augment(w)) {
                self.left_mate[u] = v;
                self.right_mate[v] = u;
                return true;
            }
        }
        self.dist[u] = UNMATCHED;
        false
    }
}

/// Brute-force references for the solvers above. They enumerate subsets
/// directly and share no code with the branch-and-bound kernels.
pub mod oracle {
    use super::*;

    /// Largest order the subset-enumeration oracles accept.
    pub const ORACLE_MAX_ORDER: usize = 20;

    fn smaller(a: u64, b: u64) -> bool {
        let diff = a ^ b;
        diff != 0 && a & diff & diff.wrapping_neg() != 0
    }

    /// Maximum independent set by scanning all `2^n` subsets. Ties go to
    /// the smallest set in [`VertexSet`] order.
    pub fn max_independent_set(g: &Graph) -> Result<VertexSolution, SolveError> {
        let n = g.order();
        if n > ORACLE_MAX_ORDER {
            return Err(SolveError::TooLarge { order: n, max: ORACLE_MAX_ORDER });
        }
        let edges: Vec<u64> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
        let mut best = (0usize, 0u64);
        for s in 0u64..1 << n {
            if edges.iter().any(|&e| e & !s == 0) {
                continue;
            }
            let size = s.count_ones() as usize;
            if size > best.0 || (size == best.0 && smaller(s, best.1)) {
                best = (size, s);
            }
        }
        Ok(VertexSolution { size: best.0, witness: VertexSet::from_u64(best.1) })
    }

    /// Maximum matching by scanning all subsets of at most `max_edges` edges.
    pub fn matching_number(g: &Graph, max_edges: usize) -> Result<usize, SolveError> {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        if edges.len() > max_edges {
            return Err(SolveError::TooLarge { order: edges.len(), max: max_edges });
        }
        let mut best = 0;
        for s in 0u64..1 << edges.len() {
            let mut used = 0u128;
            let ok = edges.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).all(|(_, &(u, v))| {
                let m = 1u128 << u | 1u128 << v;
                let fresh = used & m == 0;
                used |= m;
                fresh
            });
            if ok {
                best = best.max(s.count_ones() as usize);
            }
        }
        Ok(best)
    }

    /// Every maximum independent set of `g`, by scanning all subsets.
    pub fn all_maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
        let n = g.order();
        if n > ORACLE_MAX_ORDER {
            return Err(SolveError::TooLarge { order: n, max: ORACLE_MAX_ORDER });
        }
        let edges: Vec<u64> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
        let independent: Vec<u64> = (0u64..1 << n).filter(|s| edges.iter().all(|&e| s & e != e)).collect();
        let best = independent.iter().map(|s| s.count_ones()).max().unwrap_or(0);
        Ok(independent.into_iter().filter(|s| s.count_ones() == best).map(VertexSet::from_u64).collect())
    }
}

/// Every maximum independent set of `g`, in [`VertexSet`] order.
///
/// Enumerates independent sets include-first, pruned by the clique-cover
/// bound against the known optimum.
pub fn all_maximum_independent_sets(g: &Graph) -> Result<Vec<VertexSet>, SolveError> {
    fn walk<M: Mask>(adj: &[M], cand: M, chosen: M, target: usize, out: &mut Vec<VertexSet>) {
        let have = chosen.count();
        if have == target {
            out.push(chosen.into_set());
            return;
        }
        if cand.is_zero() || have + clique_cover_bound(adj, cand) < target {
            return;
        }
        let v = cand.lowest();
        let without_v = cand & !M::bit(v);
        walk(adj, without_v & !adj[v], chosen | M::bit(v), target, out);
        walk(adj, without_v, chosen, target, out);
    }
    with_masks!(g, |adj| {
        let (size, _) = mis_with(&adj);
        let mut out = Vec::new();
        walk(&adj, full_mask(adj.len()), Default::default(), size, &mut out);
        out
    })
}

/// Calls `f` on every independent set of `g`, include-first in ascending
/// vertex order. Stops early if `f` returns `false`.
pub fn for_each_independent_set<F>(g: &Graph, mut f: F) -> Result<(), SolveError>
where
    F: FnMut(&VertexSet) -> bool,
{
    fn walk<M: Mask>(adj: &[M], cand: M, chosen: M, f: &mut dyn FnMut(&VertexSet) -> bool) -> bool {
        if cand.is_zero() {
            return f(&chosen.into_set());
        }
        let v = cand.lowest();
        let without_v = cand & !M::bit(v);
        walk(adj, without_v & !adj[v], chosen | M::bit(v), f) && walk(adj, without_v, chosen, f)
    }
    with_masks!(g, |adj| {
        walk(&adj, full_mask(adj.len()), Default::default(), &mut f);
    })
}
