//! Machine checks of the splitting-graph identities on concrete graphs, and
//! campaigns that run every check over exhaustive, random, family or
//! file-supplied graph sets.
//!
//! Each check computes the two sides of its identity through separate code
//! paths: quantities of `S(G)` come from the exact solvers run on the split
//! graph, while `β₀*(G)` and the Hall-type condition come from the oracles
//! run on `G` itself.

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::deficiency::{
    beta0_star_bruteforce_bounded, beta0_star_fast, deficiency, hall_condition_exhaustive, DeficiencyCertificate,
    DeficiencyError, DEFAULT_ORACLE_BOUND,
};
use crate::format::{parse_graph6, write_graph6, FormatError};
use crate::graph::{Graph, GraphError};
use crate::operators::{
    counterexample_graph, erdos_renyi, labeled_graph_count, splitting_graph, ConnectedGraphs, FamilyGraph, FamilySpec,
    OperatorError, SplitGraph,
};
use crate::solvers::{
    all_maximum_independent_sets, for_each_independent_set, independence_number, matching_number, max_independent_set,
    min_edge_cover, min_vertex_cover, SolveError, VertexSolution,
};

pub const REPORT_SCHEMA_VERSION: &str = "1.0.0";

/// Default largest base order for checks that enumerate every (maximum)
/// independent set of `S(G)`.
pub const DEFAULT_STRUCTURE_BOUND: usize = 6;

/// Largest exhaustive order without `long_run`.
pub const EXHAUSTIVE_MAX_ORDER: usize = 7;
pub const EXHAUSTIVE_LONG_RUN_MAX_ORDER: usize = 8;

/// Largest order for random, family and file campaigns: `S(G)` must fit the
/// exact solvers.
pub const CAMPAIGN_MAX_ORDER: usize = 64;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Deficiency(#[from] DeficiencyError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("{path}:{line}: {source}")]
    Input { path: String, line: usize, source: FormatError },
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid campaign configuration: {0}")]
    Config(String),
    #[error("set {0} is not independent")]
    NotIndependent(VertexSet),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "THM1")]
    MainTheorem,
    #[serde(rename = "PROP2_GALLAI")]
    GallaiOnSplit,
    #[serde(rename = "COR1_ALPHA")]
    CoverFormula,
    #[serde(rename = "COR2_CHAR")]
    Characterization,
    #[serde(rename = "COR3_MAXSETS")]
    MaxSetStructure,
    #[serde(rename = "COR3_LITERAL_CONVERSE")]
    MaxSetLiteralConverse,
    #[serde(rename = "COR4_RANGE")]
    Range,
    #[serde(rename = "COR4_FAMILY")]
    FamilyValue,
    #[serde(rename = "OBS1_I")]
    DeficiencyNonNegative,
    #[serde(rename = "OBS1_II")]
    DeficiencyRange,
    #[serde(rename = "OBS1_III")]
    DeficiencyHall,
    #[serde(rename = "OBS1_IV")]
    LargeIndependenceForcesDeficiency,
    #[serde(rename = "PROP1_I")]
    ClassicalCoverIndependence,
    #[serde(rename = "PROP1_II")]
    ClassicalEdgeInvariants,
    #[serde(rename = "BETA0_STAR_AGREEMENT")]
    DeficiencyMethodsAgree,
}

impl ClaimId {
    /// Claims whose truth is reported rather than required. Their failures
    /// never affect the campaign exit status.
    pub fn is_audit(self) -> bool {
        matches!(self, Self::ClassicalCoverIndependence | Self::ClassicalEdgeInvariants | Self::MaxSetLiteralConverse)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::MainTheorem => "THM1",
            Self::GallaiOnSplit => "PROP2_GALLAI",
            Self::CoverFormula => "COR1_ALPHA",
            Self::Characterization => "COR2_CHAR",
            Self::MaxSetStructure => "COR3_MAXSETS",
            Self::MaxSetLiteralConverse => "COR3_LITERAL_CONVERSE",
            Self::Range => "COR4_RANGE",
            Self::FamilyValue => "COR4_FAMILY",
            Self::DeficiencyNonNegative => "OBS1_I",
            Self::DeficiencyRange => "OBS1_II",
            Self::DeficiencyHall => "OBS1_III",
            Self::LargeIndependenceForcesDeficiency => "OBS1_IV",
            Self::ClassicalCoverIndependence => "PROP1_I",
            Self::ClassicalEdgeInvariants => "PROP1_II",
            Self::DeficiencyMethodsAgree => "BETA0_STAR_AGREEMENT",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Holds
        } else {
            Self::Fails
        }
    }
}

/// The quantities behind a verdict. Only the fields a claim looks at are
/// filled in; on failure they are enough to redo the check by hand.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    pub n: usize,
    pub edge_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta0: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta0_split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha0_split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta0_star: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta0_star_fast: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<DeficiencyCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_mis_witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_cover_witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constructed_witness: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hall_condition: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classical_equalities: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha1_split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta1: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta1_split: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha1_clause: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta1_clause: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sets_checked: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub graph_id: String,
    pub claim_id: ClaimId,
    pub verdict: Verdict,
    pub payload: Payload,
}

/// Knobs shared by all checks on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckSettings {
    /// Largest order for which `β₀*` comes from the exhaustive oracle.
    pub oracle_bound: usize,
    /// Largest base order for the max-set structure checks.
    pub structure_bound: usize,
}

impl Default for CheckSettings {
    fn default() -> Self {
        Self { oracle_bound: DEFAULT_ORACLE_BOUND, structure_bound: DEFAULT_STRUCTURE_BOUND }
    }
}

/// `X = S ∪ (V' ∖ N')` in `S(G)`, with `N' = {v' : v ∈ N(S)}` and copies
/// numbered `n + v`.
pub fn witness_construction(g: &Graph, s: &VertexSet) -> Result<VertexSet, HarnessError> {
    if !g.is_independent(s)? {
        return Err(HarnessError::NotIndependent(s.clone()));
    }
    let n = g.order();
    let n_prime = g.neighborhood(s)?.shifted(n);
    Ok(s.union(&VertexSet::range(n, 2 * n).difference(&n_prime)))
}

/// Lazily computed quantities for one graph, shared by all checks on it.
pub struct GraphAnalysis<'a> {
    g: &'a Graph,
    settings: CheckSettings,
    graph_id: OnceCell<String>,
    connected: OnceCell<bool>,
    split: OnceCell<SplitGraph>,
    split_mis: OnceCell<VertexSolution>,
    split_cover: OnceCell<VertexSolution>,
    certificate: OnceCell<Option<DeficiencyCertificate>>,
    fast: OnceCell<i64>,
    hall: OnceCell<bool>,
    beta0: OnceCell<usize>,
}

type Checked<T> = Result<T, HarnessError>;

fn cached<T: Clone>(cell: &OnceCell<T>, f: impl FnOnce() -> Checked<T>) -> Checked<T> {
    if let Some(v) = cell.get() {
        return Ok(v.clone());
    }
    let v = f()?;
    Ok(cell.get_or_init(|| v).clone())
}

fn cached_ref<T>(cell: &OnceCell<T>, f: impl FnOnce() -> Checked<T>) -> Checked<&T> {
    if cell.get().is_none() {
        let v = f()?;
        let _ = cell.set(v);
    }
    Ok(cell.get().expect("just set"))
}

impl<'a> GraphAnalysis<'a> {
    pub fn new(g: &'a Graph, settings: CheckSettings) -> Self {
        Self {
            g,
            settings,
            graph_id: OnceCell::new(),
            connected: OnceCell::new(),
            split: OnceCell::new(),
            split_mis: OnceCell::new(),
            split_cover: OnceCell::new(),
            certificate: OnceCell::new(),
            fast: OnceCell::new(),
            hall: OnceCell::new(),
            beta0: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn graph_id(&self) -> &str {
        self.graph_id.get_or_init(|| write_graph6(self.g))
    }

    fn n(&self) -> usize {
        self.g.order()
    }

    fn connected(&self) -> bool {
        *self.connected.get_or_init(|| self.g.is_connected())
    }

    /// Connected and of order at least 2.
    fn in_scope(&self) -> bool {
        self.n() >= 2 && self.connected()
    }

    pub fn split(&self) -> Checked<&SplitGraph> {
        cached_ref(&self.split, || Ok(splitting_graph(self.g)?))
    }

    fn split_mis(&self) -> Checked<&VertexSolution> {
        cached_ref(&self.split_mis, || Ok(max_independent_set(self.split()?.graph())?))
    }

    fn split_cover(&self) -> Checked<&VertexSolution> {
        cached_ref(&self.split_cover, || Ok(min_vertex_cover(self.split()?.graph())?))
    }

    /// The oracle certificate, or `None` above the oracle bound.
    fn certificate(&self) -> Checked<Option<&DeficiencyCertificate>> {
        let cert = cached_ref(&self.certificate, || {
            if self.n() > self.settings.oracle_bound {
                return Ok(None);
            }
            Ok(Some(beta0_star_bruteforce_bounded(self.g, self.settings.oracle_bound)?))
        })?;
        Ok(cert.as_ref())
    }

    fn fast(&self) -> Checked<i64> {
        cached(&self.fast, || Ok(beta0_star_fast(self.g)?))
    }

    /// `β₀*` from the oracle when the order permits, else the fast path.
    fn beta0_star(&self) -> Checked<i64> {
        match self.certificate()? {
            Some(c) => Ok(c.value),
            None => self.fast(),
        }
    }

    /// The Hall-type condition, set by set when the order permits.
    fn hall(&self) -> Checked<bool> {
        cached(&self.hall, || {
            if self.n() <= self.settings.oracle_bound {
                Ok(hall_condition_exhaustive(self.g, self.settings.oracle_bound)?)
            } else {
                Ok(self.fast()? == 0)
            }
        })
    }

    fn beta0(&self) -> Checked<usize> {
        cached(&self.beta0, || Ok(independence_number(self.g)?))
    }

    fn base_payload(&self) -> Payload {
        Payload { n: self.n(), edge_count: self.g.edge_count(), ..Payload::default() }
    }

    fn outcome(&self, claim_id: ClaimId, verdict: Verdict, payload: Payload) -> VerificationOutcome {
        VerificationOutcome { graph_id: self.graph_id().to_owned(), claim_id, verdict, payload }
    }

    fn not_applicable(&self, claim: ClaimId, note: &str) -> VerificationOutcome {
        let payload = Payload { note: Some(note.to_owned()), ..self.base_payload() };
        self.outcome(claim, Verdict::NotApplicable, payload)
    }

    fn scope_note(&self) -> &'static str {
        if self.n() < 2 {
            "order below 2"
        } else {
            "disconnected"
        }
    }

    /// `β₀(S(G)) = n + β₀*(G)`, with the fast path as a second opinion and
    /// both proof directions checked: the constructed set is independent of
    /// size `n + β₀*`, and the solver's optimum does not exceed it.
    pub fn main_theorem(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::MainTheorem;
        if !self.in_scope() {
            return Ok(self.not_applicable(claim, self.scope_note()));
        }
        let n = self.n();
        let mis = self.split_mis()?;
        let star = self.beta0_star()?;
        let fast = self.fast()?;
        let expected = n as i64 + star;
        let mut payload = Payload {
            beta0_split: Some(mis.size),
            beta0_star: Some(star),
            beta0_star_fast: Some(fast),
            split_mis_witness: Some(mis.witness.clone()),
            ..self.base_payload()
        };
        let mut ok = mis.size as i64 == expected && fast == star;
        if let Some(cert) = self.certificate()? {
            let x = witness_construction(self.g, &cert.s)?;
            ok &= x.len() as i64 == expected && self.split()?.graph().is_independent(&x)?;
            payload.certificate = Some(cert.clone());
            payload.constructed_witness = Some(x);
        }
        Ok(self.outcome(claim, Verdict::from_bool(ok), payload))
    }

    /// `α₀(S(G)) + β₀(S(G)) = 2n`, with both witnesses checked.
    pub fn gallai_on_split(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::GallaiOnSplit;
        if self.n() < 2 {
            return Ok(self.not_applicable(claim, "order below 2"));
        }
        let split = self.split()?.graph();
        let (mis, cover) = (self.split_mis()?, self.split_cover()?);
        let ok = mis.size + cover.size == 2 * self.n()
            && split.is_vertex_cover(&cover.witness)?
            && split.is_independent(&mis.witness)?;
        let payload = Payload {
            beta0_split: Some(mis.size),
            alpha0_split: Some(cover.size),
            split_mis_witness: Some(mis.witness.clone()),
            split_cover_witness: Some(cover.witness.clone()),
            ..self.base_payload()
        };
        Ok(self.outcome(claim, Verdict::from_bool(ok), payload))
    }

    /// `α₀(S(G)) = n − β₀*(G)`.
    pub fn cover_formula(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::CoverFormula;
        if !self.in_scope() {
            return Ok(self.not_applicable(claim, self.scope_note()));
        }
        let cover = self.split_cover()?;
        let star = self.beta0_star()?;
        let payload = Payload {
            alpha0_split: Some(cover.size),
            beta0_star: Some(star),
            split_cover_witness: Some(cover.witness.clone()),
            ..self.base_payload()
        };
        Ok(self.outcome(claim, Verdict::from_bool(cover.size as i64 == self.n() as i64 - star), payload))
    }

    /// `α₀(S(G)) = n = β₀(S(G))` exactly when every independent `S` has
    /// `|N(S)| ≥ |S|`; the right side is checked on `G` set by set.
    pub fn characterization(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::Characterization;
        if !self.in_scope() {
            return Ok(self.not_applicable(claim, self.scope_note()));
        }
        let n = self.n();
        let (mis, cover) = (self.split_mis()?, self.split_cover()?);
        let classical = mis.size == n && cover.size == n;
        let hall = self.hall()?;
        let payload = Payload {
            beta0_split: Some(mis.size),
            alpha0_split: Some(cover.size),
            classical_equalities: Some(classical),
            hall_condition: Some(hall),
            ..self.base_payload()
        };
        Ok(self.outcome(claim, Verdict::from_bool(classical == hall), payload))
    }

    fn structure_in_scope(&self, claim: ClaimId) -> Option<VerificationOutcome> {
        if !self.in_scope() {
            return Some(self.not_applicable(claim, self.scope_note()));
        }
        if self.n() > self.settings.structure_bound.min(self.settings.oracle_bound) {
            return Some(self.not_applicable(claim, "order above the structure enumeration bound"));
        }
        None
    }

    /// (a) every maximum independent `X` of `S(G)` has `A = X ∩ V` optimal
    /// for `β₀*` and `(X ∩ V') ∩ N' = ∅`; (b) the construction from every
    /// optimal deficiency set is a maximum independent set.
    pub fn max_set_structure(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::MaxSetStructure;
        if let Some(out) = self.structure_in_scope(claim) {
            return Ok(out);
        }
        let n = self.n();
        let split = self.split()?;
        let star = self.beta0_star()?;
        let beta0_split = self.split_mis()?.size;
        let mut payload = Payload { beta0_star: Some(star), beta0_split: Some(beta0_split), ..self.base_payload() };

        let max_sets = all_maximum_independent_sets(split.graph())?;
        let mut checked = max_sets.len();
        for x in &max_sets {
            let a = x.intersection(&split.originals());
            let b_prime = x.intersection(&split.copies());
            let n_of_a = self.g.neighborhood(&a)?;
            if deficiency(self.g, &a)? != star || !b_prime.is_disjoint(&split.copies_of(&n_of_a)) {
                payload.offending_set = Some(x.clone());
                payload.note = Some("maximum independent set of S(G) whose trace on V is not optimal".into());
                payload.sets_checked = Some(checked);
                return Ok(self.outcome(claim, Verdict::Fails, payload));
            }
        }

        let mut optimal = Vec::new();
        for_each_independent_set(self.g, |s| {
            if s.len() as i64 - self.g.neighborhood(s).map(|x| x.len()).unwrap_or(0) as i64 == star {
                optimal.push(s.clone());
            }
            true
        })?;
        checked += optimal.len();
        for s in optimal {
            let x = witness_construction(self.g, &s)?;
            if x.len() != beta0_split || !split.graph().is_independent(&x)? {
                payload.offending_set = Some(s);
                payload.constructed_witness = Some(x);
                payload.note = Some("construction from an optimal deficiency set is not maximum".into());
                payload.sets_checked = Some(checked);
                return Ok(self.outcome(claim, Verdict::Fails, payload));
            }
        }
        debug_assert!(n >= 2);
        payload.sets_checked = Some(checked);
        Ok(self.outcome(claim, Verdict::Holds, payload))
    }

    /// The unqualified converse: every independent `X` of `S(G)` whose trace
    /// `A = X ∩ V` reaches `β₀*` is maximum. Reported, not required.
    pub fn max_set_literal_converse(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::MaxSetLiteralConverse;
        if let Some(out) = self.structure_in_scope(claim) {
            return Ok(out);
        }
        let split = self.split()?;
        let originals = split.originals();
        let star = self.beta0_star()?;
        let beta0_split = self.split_mis()?.size;
        let mut checked = 0;
        let mut offending = None;
        for_each_independent_set(split.graph(), |x| {
            let a = x.intersection(&originals);
            if deficiency(self.g, &a).unwrap_or(i64::MIN) == star {
                checked += 1;
                if x.len() != beta0_split {
                    offending = Some(x.clone());
                    return false;
                }
            }
            true
        })?;
        let payload = Payload {
            beta0_star: Some(star),
            beta0_split: Some(beta0_split),
            sets_checked: Some(checked),
            offending_set: offending.clone(),
            ..self.base_payload()
        };
        Ok(self.outcome(claim, Verdict::from_bool(offending.is_none()), payload))
    }

    /// `n ≤ β₀(S(G)) ≤ 2n − 2`.
    pub fn range(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::Range;
        if !self.in_scope() {
            return Ok(self.not_applicable(claim, self.scope_note()));
        }
        let n = self.n();
        let size = self.split_mis()?.size;
        let payload = Payload { beta0_split: Some(size), ..self.base_payload() };
        Ok(self.outcome(claim, Verdict::from_bool(n <= size && size + 2 <= 2 * n), payload))
    }

    /// Four facts about `β₀*`: non-negative; `n` when edgeless and at most
    /// `n − 2` otherwise; zero exactly under the Hall-type condition;
    /// positive whenever `β₀ > n/2`.
    pub fn deficiency_facts(&self) -> Checked<[VerificationOutcome; 4]> {
        let claims = [
            ClaimId::DeficiencyNonNegative,
            ClaimId::DeficiencyRange,
            ClaimId::DeficiencyHall,
            ClaimId::LargeIndependenceForcesDeficiency,
        ];
        if self.n() < 2 {
            return Ok(claims.map(|c| self.not_applicable(c, "order below 2")));
        }
        let n = self.n() as i64;
        let star = self.beta0_star()?;
        let hall = self.hall()?;
        let beta0 = self.beta0()?;
        let payload = Payload {
            beta0: Some(beta0),
            beta0_star: Some(star),
            hall_condition: Some(hall),
            certificate: self.certificate()?.cloned(),
            ..self.base_payload()
        };
        let range_ok = if self.g.edge_count() == 0 { star == n } else { star <= n - 2 };
        let verdicts = [star >= 0, range_ok, (star == 0) == hall, 2 * beta0 as i64 <= n || star > 0];
        Ok([0, 1, 2, 3].map(|i| self.outcome(claims[i], Verdict::from_bool(verdicts[i]), payload.clone())))
    }

    /// Oracle and fast path give the same `β₀*`.
    pub fn deficiency_methods_agree(&self) -> Checked<VerificationOutcome> {
        let claim = ClaimId::DeficiencyMethodsAgree;
        let Some(cert) = self.certificate()? else {
            return Ok(self.not_applicable(claim, "order above the oracle bound"));
        };
        let fast = self.fast()?;
        let payload = Payload { beta0_star: Some(cert.value), beta0_star_fast: Some(fast), ..self.base_payload() };
        Ok(self.outcome(claim, Verdict::from_bool(cert.value == fast), payload))
    }

    /// The classical statements: `α₀(S(G)) = n = β₀(S(G))`, and
    /// `α₁(S(G)) = 2α₁(G)`, `β₁(S(G)) = 2β₁(G)`.
    pub fn classical_statements(&self) -> Checked<[VerificationOutcome; 2]> {
        let (c1, c2) = (ClaimId::ClassicalCoverIndependence, ClaimId::ClassicalEdgeInvariants);
        if self.n() < 2 {
            return Ok([self.not_applicable(c1, "order below 2"), self.not_applicable(c2, "order below 2")]);
        }
        let n = self.n();
        let (mis, cover) = (self.split_mis()?, self.split_cover()?);
        let first = self.outcome(
            c1,
            Verdict::from_bool(mis.size == n && cover.size == n),
            Payload { beta0_split: Some(mis.size), alpha0_split: Some(cover.size), ..self.base_payload() },
        );

        let split = self.split()?.graph();
        let (beta1, beta1_split) = (matching_number(self.g)?, matching_number(split)?);
        let beta1_clause = Verdict::from_bool(beta1_split == 2 * beta1);
        let mut payload = Payload {
            beta1: Some(beta1),
            beta1_split: Some(beta1_split),
            beta1_clause: Some(beta1_clause),
            ..self.base_payload()
        };
        let alpha1_clause = if self.g.has_isolated_vertex() {
            Verdict::NotApplicable
        } else {
            let (alpha1, alpha1_split) = (min_edge_cover(self.g)?.size, min_edge_cover(split)?.size);
            payload.alpha1 = Some(alpha1);
            payload.alpha1_split = Some(alpha1_split);
            Verdict::from_bool(alpha1_split == 2 * alpha1)
        };
        payload.alpha1_clause = Some(alpha1_clause);
        let verdict = Verdict::from_bool(beta1_clause == Verdict::Holds && alpha1_clause != Verdict::Fails);
        Ok([first, self.outcome(c2, verdict, payload)])
    }

    /// Every per-graph check in claim order.
    pub fn all_checks(&self) -> Checked<Vec<VerificationOutcome>> {
        let mut out = vec![
            self.main_theorem()?,
            self.gallai_on_split()?,
            self.cover_formula()?,
            self.characterization()?,
            self.max_set_structure()?,
            self.max_set_literal_converse()?,
            self.range()?,
        ];
        out.extend(self.deficiency_facts()?);
        out.extend(self.classical_statements()?);
        out.push(self.deficiency_methods_agree()?);
        Ok(out)
    }
}

/// `β₀(S(G_k)) = k` for a member of the pendant family.
pub fn verify_family_member(fam: &FamilyGraph) -> Checked<VerificationOutcome> {
    let analysis = GraphAnalysis::new(&fam.graph, CheckSettings::default());
    let size = analysis.split_mis()?.size;
    let payload = Payload {
        beta0_split: Some(size),
        alpha0_split: Some(analysis.split_cover()?.size),
        beta0_star: Some(analysis.beta0_star()?),
        family_k: Some(fam.spec.k()),
        ..analysis.base_payload()
    };
    Ok(analysis.outcome(ClaimId::FamilyValue, Verdict::from_bool(size == fam.spec.k()), payload))
}

fn with_defaults<'g, T>(g: &'g Graph, f: impl FnOnce(&GraphAnalysis<'g>) -> Checked<T>) -> Checked<T> {
    f(&GraphAnalysis::new(g, CheckSettings::default()))
}

pub fn verify_main_theorem(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::main_theorem)
}

pub fn verify_gallai_on_split(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::gallai_on_split)
}

pub fn verify_corollary_alpha(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::cover_formula)
}

pub fn verify_characterization(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::characterization)
}

pub fn verify_max_set_structure(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::max_set_structure)
}

pub fn verify_range(g: &Graph) -> Checked<VerificationOutcome> {
    with_defaults(g, GraphAnalysis::range)
}

pub fn verify_deficiency_facts(g: &Graph) -> Checked<[VerificationOutcome; 4]> {
    with_defaults(g, GraphAnalysis::deficiency_facts)
}

/// Outcomes for `PROP1_I` and `PROP1_II`, in that order.
pub fn audit_proposition1(g: &Graph) -> Checked<[VerificationOutcome; 2]> {
    with_defaults(g, GraphAnalysis::classical_statements)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CampaignMode {
    Exhaustive,
    Random,
    Family,
    File,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub mode: CampaignMode,
    pub min_order: usize,
    pub max_order: usize,
    /// Random mode only.
    pub samples: usize,
    /// Random mode only.
    pub edge_probability: f64,
    pub seed: Option<u64>,
    /// File mode only: one graph6 line per graph.
    pub file: Option<PathBuf>,
    pub jobs: usize,
    pub oracle_bound: usize,
    pub structure_bound: usize,
    /// Per audit claim, how many counterexamples the report keeps.
    pub max_examples: usize,
    /// Allows exhaustive runs at order 8.
    pub long_run: bool,
}

impl CampaignConfig {
    fn base(mode: CampaignMode, min_order: usize, max_order: usize) -> Self {
        Self {
            mode,
            min_order,
            max_order,
            samples: 0,
            edge_probability: 0.0,
            seed: None,
            file: None,
            jobs: rayon::current_num_threads().max(1),
            oracle_bound: DEFAULT_ORACLE_BOUND,
            structure_bound: DEFAULT_STRUCTURE_BOUND,
            max_examples: 20,
            long_run: false,
        }
    }

    /// All connected labeled graphs with `2 ≤ n ≤ max_order`.
    pub fn exhaustive(max_order: usize) -> Self {
        Self::base(CampaignMode::Exhaustive, 2, max_order)
    }

    pub fn random(order: usize, edge_probability: f64, samples: usize, seed: u64) -> Self {
        Self { samples, edge_probability, seed: Some(seed), ..Self::base(CampaignMode::Random, order, order) }
    }

    pub fn family(min_order: usize, max_order: usize) -> Self {
        Self::base(CampaignMode::Family, min_order, max_order)
    }

    pub fn file(path: impl Into<PathBuf>) -> Self {
        Self { file: Some(path.into()), ..Self::base(CampaignMode::File, 0, CAMPAIGN_MAX_ORDER) }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let err = |m: String| Err(HarnessError::Config(m));
        if self.jobs == 0 {
            return err("parallelism width must be at least 1".into());
        }
        if self.min_order > self.max_order {
            return err(format!("order range {}..={} is empty", self.min_order, self.max_order));
        }
        match self.mode {
            CampaignMode::Exhaustive => {
                let cap = if self.long_run { EXHAUSTIVE_LONG_RUN_MAX_ORDER } else { EXHAUSTIVE_MAX_ORDER };
                if self.min_order < 2 || self.max_order > cap {
                    return err(format!(
                        "exhaustive mode needs 2 <= n <= {cap}, got {}..={}",
                        self.min_order, self.max_order
                    ));
                }
            }
            CampaignMode::Random => {
                if self.seed.is_none() {
                    return err("random mode requires a seed".into());
                }
                if self.samples == 0 {
                    return err("random mode needs at least one sample".into());
                }
                if !(0.0..=1.0).contains(&self.edge_probability) {
                    return err(format!("edge probability {} is outside [0, 1]", self.edge_probability));
                }
                if self.min_order < 2 || self.max_order > CAMPAIGN_MAX_ORDER {
                    return err(format!("random mode needs 2 <= n <= {CAMPAIGN_MAX_ORDER}"));
                }
            }
            CampaignMode::Family => {
                if self.min_order < 2 || self.max_order > CAMPAIGN_MAX_ORDER {
                    return err(format!("family mode needs 2 <= n <= {CAMPAIGN_MAX_ORDER}"));
                }
            }
            CampaignMode::File => {
                if self.file.is_none() {
                    return err("file mode requires a path".into());
                }
            }
        }
        Ok(())
    }

    fn settings(&self) -> CheckSettings {
        CheckSettings { oracle_bound: self.oracle_bound, structure_bound: self.structure_bound }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub holds: u64,
    pub fails: u64,
    pub not_applicable: u64,
}

impl VerdictCounts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
        }
    }

    fn merge(&mut self, other: &Self) {
        self.holds += other.holds;
        self.fails += other.fails;
        self.not_applicable += other.not_applicable;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub n: usize,
    pub k: usize,
    pub graph6: String,
    pub beta0_star: i64,
    pub beta0_split: usize,
    pub alpha0_split: usize,
    pub realized: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema_version: String,
    pub config: CampaignConfig,
    pub graphs_checked: u64,
    pub graphs_by_order: BTreeMap<usize, u64>,
    pub claims: BTreeMap<ClaimId, VerdictCounts>,
    /// Every failure of a required claim, sorted by graph then claim.
    pub failures: Vec<VerificationOutcome>,
    /// The first `max_examples` failures of each audit claim, by graph.
    pub audit_examples: BTreeMap<ClaimId, Vec<VerificationOutcome>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<Vec<FamilyRow>>,
    /// Wall-clock time; only present when timing was requested, so that
    /// reports are otherwise byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CampaignReport {
    pub fn unexpected_failures(&self) -> usize {
        self.failures.len()
    }

    /// 0 when every required claim held, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn counts(&self, claim: ClaimId) -> VerdictCounts {
        self.claims.get(&claim).copied().unwrap_or_default()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct Tally {
    graphs: u64,
    by_order: BTreeMap<usize, u64>,
    claims: BTreeMap<ClaimId, VerdictCounts>,
    failures: Vec<VerificationOutcome>,
    examples: BTreeMap<ClaimId, Vec<VerificationOutcome>>,
    family: Vec<FamilyRow>,
}

fn outcome_order(a: &VerificationOutcome, b: &VerificationOutcome) -> std::cmp::Ordering {
    (a.payload.n, &a.graph_id, a.claim_id).cmp(&(b.payload.n, &b.graph_id, b.claim_id))
}

impl Tally {
    fn record(&mut self, outcome: VerificationOutcome, max_examples: usize) {
        self.claims.entry(outcome.claim_id).or_default().add(outcome.verdict);
        if outcome.verdict != Verdict::Fails {
            return;
        }
        if outcome.claim_id.is_audit() {
            let list = self.examples.entry(outcome.claim_id).or_default();
            list.push(outcome);
            if list.len() > max_examples.max(1).saturating_mul(2) {
                list.sort_by(outcome_order);
                list.truncate(max_examples);
            }
        } else {
            self.failures.push(outcome);
        }
    }

    fn merge(mut self, other: Self, max_examples: usize) -> Self {
        self.graphs += other.graphs;
        for (n, c) in other.by_order {
            *self.by_order.entry(n).or_default() += c;
        }
        for (claim, counts) in other.claims {
            self.claims.entry(claim).or_default().merge(&counts);
        }
        self.failures.extend(other.failures);
        for (claim, list) in other.examples {
            let mine = self.examples.entry(claim).or_default();
            mine.extend(list);
            mine.sort_by(outcome_order);
            mine.truncate(max_examples);
        }
        self.family.extend(other.family);
        self
    }
}

fn check_graph(g: &Graph, config: &CampaignConfig, tally: &mut Tally) -> Result<(), HarnessError> {
    let analysis = GraphAnalysis::new(g, config.settings());
    tally.graphs += 1;
    *tally.by_order.entry(g.order()).or_default() += 1;
    for outcome in analysis.all_checks()? {
        tally.record(outcome, config.max_examples);
    }
    Ok(())
}

fn check_family_member(fam: &FamilyGraph, config: &CampaignConfig, tally: &mut Tally) -> Result<(), HarnessError> {
    check_graph(&fam.graph, config, tally)?;
    let outcome = verify_family_member(fam)?;
    let p = &outcome.payload;
    tally.family.push(FamilyRow {
        n: fam.spec.n(),
        k: fam.spec.k(),
        graph6: outcome.graph_id.clone(),
        beta0_star: p.beta0_star.unwrap_or_default(),
        beta0_split: p.beta0_split.unwrap_or_default(),
        alpha0_split: p.alpha0_split.unwrap_or_default(),
        realized: outcome.verdict == Verdict::Holds,
    });
    tally.record(outcome, config.max_examples);
    Ok(())
}

/// Indices per exhaustive work unit.
const CHUNK: u64 = 1 << 12;

fn run_items<T, F>(items: Vec<T>, config: &CampaignConfig, f: F) -> Result<Tally, HarnessError>
where
    T: Send + Sync,
    F: Fn(&T, &mut Tally) -> Result<(), HarnessError> + Send + Sync,
{
    let max = config.max_examples;
    items
        .par_iter()
        .try_fold(Tally::default, |mut tally, item| {
            f(item, &mut tally)?;
            Ok(tally)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b, max)))
}

fn read_graph_file(path: &PathBuf) -> Result<Vec<Graph>, HarnessError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: shown.clone(), source })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_graph6(l.trim()).map_err(|source| HarnessError::Input { path: shown.clone(), line: i + 1, source })
        })
        .collect()
}

/// `(order, seed)` for each random sample. The master seed drives a single
/// stream, so sample `i` does not depend on the worker that checks it.
fn random_draws(config: &CampaignConfig) -> Vec<(usize, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.unwrap_or_default());
    (0..config.samples).map(|_| (rng.random_range(config.min_order..=config.max_order), rng.random())).collect()
}

/// The graphs a random campaign checks, in sample order.
pub fn random_campaign_graphs(config: &CampaignConfig) -> Result<Vec<Graph>, HarnessError> {
    if config.mode != CampaignMode::Random {
        return Err(HarnessError::Config("not a random campaign".into()));
    }
    config.validate()?;
    random_draws(config).into_iter().map(|(n, seed)| Ok(erdos_renyi(n, config.edge_probability, seed)?)).collect()
}

/// Runs every per-graph check over the configured graph source.
///
/// Work is spread over a pool of `config.jobs` threads; aggregation is
/// order-independent, so the report depends only on the configuration.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, HarnessError> {
    run_campaign_timed(config, false)
}

pub fn run_campaign_timed(config: &CampaignConfig, timing: bool) -> Result<CampaignReport, HarnessError> {
    config.validate()?;
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| HarnessError::Config(format!("cannot start worker pool: {e}")))?;
    let tally = pool.install(|| -> Result<Tally, HarnessError> {
        match config.mode {
            CampaignMode::Exhaustive => {
                let chunks: Vec<(usize, u64)> = (config.min_order..=config.max_order)
                    .flat_map(|n| (0..labeled_graph_count(n).div_ceil(CHUNK)).map(move |c| (n, c * CHUNK)))
                    .collect();
                run_items(chunks, config, |&(n, start), tally| {
                    for g in ConnectedGraphs::with_range(n, start..start + CHUNK)? {
                        check_graph(&g, config, tally)?;
                    }
                    Ok(())
                })
            }
            CampaignMode::Random => run_items(random_draws(config), config, |&(n, seed), tally| {
                check_graph(&erdos_renyi(n, config.edge_probability, seed)?, config, tally)
            }),
            CampaignMode::Family => {
                let mut specs = Vec::new();
                for n in config.min_order..=config.max_order {
                    specs.extend(FamilySpec::all_for_order(n)?);
                }
                run_items(specs, config, |&spec, tally| check_family_member(&counterexample_graph(spec), config, tally))
            }
            CampaignMode::File => {
                let graphs = read_graph_file(config.file.as_ref().expect("validated"))?;
                if let Some(g) = graphs.iter().find(|g| g.order() > CAMPAIGN_MAX_ORDER) {
                    return Err(HarnessError::Config(format!(
                        "file contains a graph of order {} above {CAMPAIGN_MAX_ORDER}",
                        g.order()
                    )));
                }
                run_items(graphs, config, |g, tally| check_graph(g, config, tally))
            }
        }
    })?;

    let mut failures = tally.failures;
    failures.sort_by(outcome_order);
    let mut family = tally.family;
    family.sort_by_key(|r| (r.n, r.k));
    let mut examples = tally.examples;
    for list in examples.values_mut() {
        list.sort_by(outcome_order);
        list.truncate(config.max_examples);
    }
    Ok(CampaignReport {
        schema_version: REPORT_SCHEMA_VERSION.to_owned(),
        config: config.clone(),
        graphs_checked: tally.graphs,
        graphs_by_order: tally.by_order,
        claims: tally.claims,
        failures,
        audit_examples: examples,
        family: (config.mode == CampaignMode::Family).then_some(family),
        elapsed_ms: timing.then(|| started.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{complete, cycle, path, star};

    fn holds(o: &VerificationOutcome) -> bool {
        o.verdict == Verdict::Holds
    }

    #[test]
    fn main_theorem_examples() {
        let o = verify_main_theorem(&complete(6)).unwrap();
        assert!(holds(&o));
        assert_eq!(o.payload.beta0_split, Some(6));

        let fam = counterexample_graph(FamilySpec::new(6, 8).unwrap());
        let o = verify_main_theorem(&fam.graph).unwrap();
        assert!(holds(&o));
        assert_eq!(o.payload.beta0_split, Some(8));

        let o = verify_main_theorem(&path(3)).unwrap();
        assert!(holds(&o));
        assert_eq!((o.payload.beta0_split, o.payload.beta0_star), (Some(4), Some(1)));

        let o = verify_main_theorem(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(o.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn family_member_at_two_n_minus_three_is_a_star() {
        // K2 with four pendants at one end is K_{1,5}; β₀(S) is 10, not 9
        let fam = counterexample_graph(FamilySpec::new(6, 9).unwrap());
        assert_eq!(fam.graph, star(5));
        let o = verify_family_member(&fam).unwrap();
        assert_eq!(o.verdict, Verdict::Fails);
        assert_eq!(o.payload.beta0_split, Some(10));
        assert!(holds(&verify_main_theorem(&fam.graph).unwrap()));
    }

    #[test]
    fn split_independence_never_reaches_two_n_minus_three() {
        for n in 4..=6 {
            let mut seen = std::collections::BTreeSet::new();
            for g in crate::operators::enumerate_connected_graphs(n).unwrap() {
                seen.insert(independence_number(splitting_graph(&g).unwrap().graph()).unwrap());
            }
            let expected: std::collections::BTreeSet<usize> = (n..=2 * n - 2).filter(|&k| k != 2 * n - 3).collect();
            assert_eq!(seen, expected, "n = {n}");
            let family: std::collections::BTreeSet<usize> = FamilySpec::all_for_order(n)
                .unwrap()
                .into_iter()
                .map(|spec| verify_family_member(&counterexample_graph(spec)).unwrap().payload.beta0_split.unwrap())
                .collect();
            assert_eq!(family, expected, "n = {n}");
        }
    }

    #[test]
    fn witness_construction_examples() {
        let k2 = complete(2);
        assert_eq!(witness_construction(&k2, &VertexSet::new()).unwrap(), VertexSet::from([2, 3]));
        let p3 = path(3);
        let x = witness_construction(&p3, &VertexSet::from([0, 2])).unwrap();
        assert_eq!(x, VertexSet::from([0, 2, 3, 5]));
        let split = splitting_graph(&p3).unwrap();
        assert!(split.graph().is_independent(&x).unwrap());
        assert_eq!(x.len(), max_independent_set(split.graph()).unwrap().size);

        let fam = counterexample_graph(FamilySpec::new(6, 8).unwrap());
        assert_eq!(witness_construction(&fam.graph, &fam.pendants).unwrap().len(), 8);
        assert!(matches!(witness_construction(&k2, &VertexSet::from([0, 1])), Err(HarnessError::NotIndependent(_))));
    }

    #[test]
    fn gallai_examples() {
        let o = verify_gallai_on_split(&complete(2)).unwrap();
        assert!(holds(&o));
        assert_eq!((o.payload.alpha0_split, o.payload.beta0_split), (Some(2), Some(2)));
        let o = verify_gallai_on_split(&star(5)).unwrap();
        assert!(holds(&o));
        assert_eq!((o.payload.alpha0_split, o.payload.beta0_split), (Some(2), Some(10)));
    }

    #[test]
    fn cover_formula_examples() {
        for n in 2..=6 {
            let o = verify_corollary_alpha(&complete(n)).unwrap();
            assert!(holds(&o));
            assert_eq!(o.payload.alpha0_split, Some(n));
        }
        assert_eq!(verify_corollary_alpha(&star(5)).unwrap().payload.alpha0_split, Some(2));
        let fam = counterexample_graph(FamilySpec::new(6, 10).unwrap());
        assert_eq!(verify_corollary_alpha(&fam.graph).unwrap().payload.alpha0_split, Some(2));
    }

    #[test]
    fn characterization_examples() {
        let o = verify_characterization(&complete(5)).unwrap();
        assert!(holds(&o));
        assert_eq!((o.payload.classical_equalities, o.payload.hall_condition), (Some(true), Some(true)));
        let o = verify_characterization(&star(3)).unwrap();
        assert!(holds(&o));
        assert_eq!((o.payload.classical_equalities, o.payload.hall_condition), (Some(false), Some(false)));
        assert_eq!(o.payload.beta0_split, Some(6));
    }

    #[test]
    fn max_set_structure_examples() {
        for g in [complete(2), path(3), star(3), cycle(5).unwrap()] {
            let o = verify_max_set_structure(&g).unwrap();
            assert!(holds(&o), "{o:?}");
        }
        // S(K2) is the path 2-1-0-3
        let split = splitting_graph(&complete(2)).unwrap();
        assert_eq!(
            all_maximum_independent_sets(split.graph()).unwrap(),
            vec![VertexSet::from([0, 2]), VertexSet::from([1, 3]), VertexSet::from([2, 3])]
        );
        let big = crate::operators::path(8);
        assert_eq!(verify_max_set_structure(&big).unwrap().verdict, Verdict::NotApplicable);
    }

    #[test]
    fn literal_converse_fails_on_k2() {
        // X = {0} has trace A = {0} with |A| - |N(A)| = 0 = β₀*, yet |X| = 1 < 2
        let k2 = complete(2);
        let a = GraphAnalysis::new(&k2, CheckSettings::default());
        let o = a.max_set_literal_converse().unwrap();
        assert_eq!(o.verdict, Verdict::Fails);
        assert!(o.payload.offending_set.as_ref().unwrap().len() < 2);
    }

    #[test]
    fn classical_statement_audit_examples() {
        let [first, _] = audit_proposition1(&star(3)).unwrap();
        assert_eq!(first.verdict, Verdict::Fails);
        assert_eq!((first.payload.beta0_split, first.payload.alpha0_split), (Some(6), Some(2)));
        let [first, _] = audit_proposition1(&complete(4)).unwrap();
        assert!(holds(&first));
        let [_, second] = audit_proposition1(&path(3)).unwrap();
        assert_eq!((second.payload.beta1, second.payload.beta1_split), (Some(1), Some(2)));
        assert_eq!(second.payload.beta1_clause, Some(Verdict::Holds));
        // K3: S(K3) has the perfect matching a'b, b'c, c'a
        let [_, second] = audit_proposition1(&complete(3)).unwrap();
        assert_eq!((second.payload.beta1, second.payload.beta1_split), (Some(1), Some(3)));
        assert_eq!(second.verdict, Verdict::Fails);
        let [_, second] = audit_proposition1(&Graph::new(3, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(second.payload.alpha1_clause, Some(Verdict::NotApplicable));
    }

    #[test]
    fn deficiency_facts_on_witness() {
        let w = crate::deficiency::observation_iv_witness();
        let outs = verify_deficiency_facts(&w.graph).unwrap();
        assert!(outs.iter().all(holds));
        assert_eq!(outs[3].payload.beta0, Some(3));
        assert_eq!(outs[3].payload.beta0_star, Some(1));
        let outs = verify_deficiency_facts(&Graph::empty(4).unwrap()).unwrap();
        assert!(outs.iter().all(holds));
        assert_eq!(outs[1].payload.beta0_star, Some(4));
    }

    #[test]
    fn range_examples() {
        for leaves in 2..=7 {
            let o = verify_range(&star(leaves)).unwrap();
            assert!(holds(&o));
            assert_eq!(o.payload.beta0_split, Some(2 * (leaves + 1) - 2));
        }
    }

    #[test]
    fn config_validation() {
        assert!(CampaignConfig::exhaustive(7).validate().is_ok());
        assert!(CampaignConfig::exhaustive(8).validate().is_err());
        assert!(CampaignConfig { long_run: true, ..CampaignConfig::exhaustive(8) }.validate().is_ok());
        assert!(CampaignConfig { seed: None, ..CampaignConfig::random(8, 0.3, 10, 1) }.validate().is_err());
        assert!(CampaignConfig::random(8, 1.3, 10, 1).validate().is_err());
        assert!(CampaignConfig { jobs: 0, ..CampaignConfig::family(2, 4) }.validate().is_err());
        assert!(CampaignConfig::family(5, 4).validate().is_err());
        assert!(CampaignConfig { file: None, ..CampaignConfig::file("x") }.validate().is_err());
    }

    #[test]
    fn small_exhaustive_campaign() {
        let report = run_campaign(&CampaignConfig::exhaustive(5)).unwrap();
        assert_eq!(report.graphs_by_order, BTreeMap::from([(2, 1), (3, 4), (4, 38), (5, 728)]));
        assert_eq!(report.exit_code(), 0, "{:?}", report.failures);
        assert_eq!(report.counts(ClaimId::MainTheorem).holds, 771);
        assert!(report.counts(ClaimId::ClassicalCoverIndependence).fails > 0);
        assert_eq!(report.audit_examples[&ClaimId::ClassicalCoverIndependence].len(), 20);
    }

    #[test]
    fn family_campaign_reports_the_unreachable_value() {
        let report = run_campaign(&CampaignConfig::family(6, 6)).unwrap();
        let rows = report.family.as_ref().unwrap();
        assert_eq!(rows.iter().map(|r| r.k).collect::<Vec<_>>(), vec![6, 7, 8, 9, 10]);
        assert_eq!(rows.iter().map(|r| r.beta0_split).collect::<Vec<_>>(), vec![6, 7, 8, 10, 10]);
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].claim_id, ClaimId::FamilyValue);
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn random_campaign_is_deterministic_and_width_independent() {
        let a = run_campaign(&CampaignConfig { jobs: 1, ..CampaignConfig::random(9, 0.3, 60, 7) }).unwrap();
        let b = run_campaign(&CampaignConfig { jobs: 4, ..CampaignConfig::random(9, 0.3, 60, 7) }).unwrap();
        let strip = |mut r: CampaignReport| {
            r.config.jobs = 0;
            r.to_json()
        };
        assert_eq!(strip(a), strip(b));
    }
}
