//! The deficiency parameter `β₀*(G) = max |S| − |N(S)|` over independent
//! sets `S`, with an exhaustive certifying oracle and a matching-based fast
//! path.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};
use crate::operators::{bipartite_double_cover, complete};
use crate::solvers::{bipartite_matching, independence_number, SolveError};

/// Default largest order for the exhaustive oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 20;

/// Hard ceiling for the oracle; independent-set enumeration runs on `u64`
/// masks.
pub const ORACLE_HARD_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeficiencyError {
    #[error("order {order} exceeds the oracle bound {bound}; use the matching-based fast path")]
    OverOracleBound { order: usize, bound: usize },
    #[error("set {0} is not independent")]
    NotIndependent(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// An independent set `s` with its neighborhood and `|s| − |N(s)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyCertificate {
    pub s: VertexSet,
    pub n_of_s: VertexSet,
    pub value: i64,
}

impl DeficiencyCertificate {
    /// Certificate for a caller-chosen set; fails unless `s` is independent.
    pub fn for_set(g: &Graph, s: VertexSet) -> Result<Self, DeficiencyError> {
        if !g.is_independent(&s)? {
            return Err(DeficiencyError::NotIndependent(s));
        }
        let n_of_s = g.neighborhood(&s)?;
        let value = s.len() as i64 - n_of_s.len() as i64;
        Ok(Self { s, n_of_s, value })
    }

    /// Re-checks independence, the neighborhood and the arithmetic against `g`.
    pub fn is_sound_for(&self, g: &Graph) -> bool {
        g.is_independent(&self.s).unwrap_or(false)
            && g.neighborhood(&self.s).as_ref() == Ok(&self.n_of_s)
            && self.s.is_disjoint(&self.n_of_s)
            && self.value == self.s.len() as i64 - self.n_of_s.len() as i64
    }
}

/// `|s| − |N(s)|` for any vertex set.
pub fn deficiency(g: &Graph, s: &VertexSet) -> Result<i64, GraphError> {
    Ok(s.len() as i64 - g.neighborhood(s)?.len() as i64)
}

/// Exact `β₀*` with a witness, enumerating independent sets only, up to
/// [`DEFAULT_ORACLE_BOUND`] vertices.
pub fn beta0_star_bruteforce(g: &Graph) -> Result<DeficiencyCertificate, DeficiencyError> {
    beta0_star_bruteforce_bounded(g, DEFAULT_ORACLE_BOUND)
}

/// As [`beta0_star_bruteforce`] with an explicit order bound.
///
/// Independent sets are visited include-first in ascending vertex order and
/// only a strictly better value replaces the incumbent, so the witness is
/// the smallest optimal set in [`VertexSet`] order.
pub fn beta0_star_bruteforce_bounded(g: &Graph, bound: usize) -> Result<DeficiencyCertificate, DeficiencyError> {
    let n = g.order();
    let bound = bound.min(ORACLE_HARD_LIMIT);
    if n > bound {
        return Err(DeficiencyError::OverOracleBound { order: n, bound });
    }
    let adj = g.masks_u64().expect("order checked against the u64 limit");

    struct Search<'a> {
        adj: &'a [u64],
        best: i64,
        best_set: u64,
    }

    impl Search<'_> {
        fn walk(&mut self, v: usize, chosen: u64, blocked: u64, nbhd: u64) {
            if v == self.adj.len() {
                let value = chosen.count_ones() as i64 - nbhd.count_ones() as i64;
                if value > self.best {
                    self.best = value;
                    self.best_set = chosen;
                }
                return;
            }
            // chosen plus every remaining unblocked vertex, with N(S) only
            // growing, bounds what this subtree can reach
            let free = (blocked | ((1u64 << v) - 1)).count_zeros() as i64 - (64 - self.adj.len() as i64);
            if chosen.count_ones() as i64 + free - nbhd.count_ones() as i64 <= self.best {
                return;
            }
            if blocked >> v & 1 == 0 {
                let bit = 1u64 << v;
                self.walk(v + 1, chosen | bit, blocked | self.adj[v] | bit, nbhd | self.adj[v]);
            }
            self.walk(v + 1, chosen, blocked, nbhd);
        }
    }

    let mut search = Search { adj: &adj, best: i64::MIN, best_set: 0 };
    search.walk(0, 0, 0, 0);
    let cert = DeficiencyCertificate::for_set(g, VertexSet::from_u64(search.best_set))?;
    debug_assert_eq!(cert.value, search.best);
    Ok(cert)
}

/// `β₀*` as `n − μ(B(G))`, the matching deficiency of the bipartite double
/// cover. Value only; no witness.
pub fn beta0_star_fast(g: &Graph) -> Result<i64, DeficiencyError> {
    let n = g.order();
    let cover = bipartite_double_cover(g)?;
    let mu = bipartite_matching(&cover, &VertexSet::full(n))?;
    Ok(n as i64 - mu as i64)
}

/// `β₀*(G) = 0`, via the fast path.
pub fn hall_condition(g: &Graph) -> Result<bool, DeficiencyError> {
    Ok(beta0_star_fast(g)? == 0)
}

/// The defining form of [`hall_condition`]: every independent `S` has
/// `|N(S)| ≥ |S|`, checked set by set up to `bound` vertices.
pub fn hall_condition_exhaustive(g: &Graph, bound: usize) -> Result<bool, DeficiencyError> {
    let n = g.order();
    let bound = bound.min(ORACLE_HARD_LIMIT);
    if n > bound {
        return Err(DeficiencyError::OverOracleBound { order: n, bound });
    }
    let adj = g.masks_u64().expect("order checked against the u64 limit");
    fn holds(adj: &[u64], v: usize, chosen: u64, blocked: u64, nbhd: u64) -> bool {
        if nbhd.count_ones() < chosen.count_ones() {
            return false;
        }
        if v == adj.len() {
            return true;
        }
        let bit = 1u64 << v;
        (blocked & bit != 0 || holds(adj, v + 1, chosen | bit, blocked | adj[v] | bit, nbhd | adj[v]))
            && holds(adj, v + 1, chosen, blocked, nbhd)
    }
    Ok(holds(&adj, 0, 0, 0, 0))
}

/// A graph with positive deficiency whose independence number is at most
/// half its order, with both facts computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveDeficiencyWitness {
    pub graph: Graph,
    pub beta0: usize,
    pub beta0_star: DeficiencyCertificate,
}

/// `K₅` on `0..5` with two pendants, 5 and 6, attached to vertex 0.
pub fn observation_iv_witness() -> PositiveDeficiencyWitness {
    let k5 = complete(5);
    let graph = Graph::new(7, k5.edges().chain([(0, 5), (0, 6)])).expect("witness edges");
    let beta0 = independence_number(&graph).expect("small graph");
    let beta0_star = beta0_star_bruteforce(&graph).expect("small graph");
    assert!(beta0_star.value > 0 && 2 * beta0 <= graph.order());
    PositiveDeficiencyWitness { graph, beta0, beta0_star }
}
