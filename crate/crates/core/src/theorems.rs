//! Recurrences for pdG polynomials of plane ribbon graphs, and seeded audits
//! that hold each one against brute-force enumeration.
//!
//! Every recurrence takes the polynomials of the smaller graphs it refers to
//! from brute force, so a recurrence is checked on its own and errors do not
//! compound.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::dsu::Dsu;
use crate::enumerate::{
    correction_sum, genus_sum, pdg_polynomial, subset_family, xi, EnumError, EnumOptions,
    FamilyKind, GenusMethod,
};
use crate::map::{Corner, EdgeSubset, MapError, RibbonGraph};
use crate::poly::{pow2, IntPolynomial, PolyError};
use crate::random::{random_planar_with, random_ribbon_with, trial_rng};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not planar (genus 0 required)")]
    NonPlanar,
    #[error("graph is not orientable")]
    NonOrientable,
    #[error("deleting edge {0} disconnects the graph")]
    DeletionDisconnects(usize),
    #[error("parallel class size must be at least 2, got {0}")]
    BadParallelCount(usize),
    #[error("a ring needs at least one part")]
    EmptyRing,
    #[error("part {part}: roots {a} and {b} share no face")]
    NoSharedFace { part: usize, a: usize, b: usize },
    #[error("part {0}: closing the roots leaves the plane")]
    NonPlanarClosure(usize),
    #[error("part {part}: {source}")]
    Division { part: usize, source: PolyError },
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error(transparent)]
    Map(#[from] MapError),
}

fn brute(g: &RibbonGraph) -> Result<IntPolynomial, TheoremError> {
    Ok(pdg_polynomial(
        g,
        GenusMethod::Formula,
        &EnumOptions::default(),
    )?)
}

fn require_connected_planar(g: &RibbonGraph) -> Result<(), TheoremError> {
    let s = g.surface_stats();
    if !s.orientable {
        return Err(TheoremError::NonOrientable);
    }
    if s.components > 1 {
        return Err(TheoremError::Disconnected);
    }
    if !s.is_planar() {
        return Err(TheoremError::NonPlanar);
    }
    Ok(())
}

fn minus_one_plus(a: i64, b: i64) -> IntPolynomial {
    IntPolynomial::from_i64s(&[a, b])
}

/// `G − e`, required to stay connected.
fn connected_deletion(g: &RibbonGraph, e: usize) -> Result<RibbonGraph, TheoremError> {
    let rest = g.delete_edge(e)?;
    if !rest.is_connected() {
        return Err(TheoremError::DeletionDisconnects(e));
    }
    Ok(rest)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeletionForm {
    /// `2z Γ_{G−e} + (2 − 2z) Σ_{A ∪ e has a cycle through e}`.
    Cycle,
    /// `2 Γ_{G−e} + (2z − 2) Σ_{e is a cut ribbon of A ∪ e}`.
    Cut,
}

/// `Γ_G` from `Γ_{G−e}` and a correction sum over subsets of `E(G − e)`.
/// A loop is never a cut ribbon, so its cut family is empty.
pub fn deletion_recurrence(
    g: &RibbonGraph,
    e: usize,
    form: DeletionForm,
) -> Result<IntPolynomial, TheoremError> {
    require_connected_planar(g)?;
    g.check_edge(e)?;
    let rest = connected_deletion(g, e)?;
    let smaller = brute(&rest)?;
    Ok(match form {
        DeletionForm::Cycle => {
            let fam = subset_family(g, e, FamilyKind::CycleWithEdge)?;
            smaller.scale(2).shift(1) + minus_one_plus(2, -2) * correction_sum(&rest, &fam)?
        }
        DeletionForm::Cut => {
            let fam = subset_family(g, e, FamilyKind::CutInUnion)?;
            smaller.scale(2) + minus_one_plus(-2, 2) * correction_sum(&rest, &fam)?
        }
    })
}

/// `G` with `n − 1` extra ribbons parallel to `e1`.
pub fn with_parallels(g: &RibbonGraph, e1: usize, n: usize) -> Result<RibbonGraph, TheoremError> {
    if n < 1 {
        return Err(TheoremError::BadParallelCount(n));
    }
    let mut h = g.clone();
    for _ in 1..n {
        h = h.add_parallel_edge(e1)?;
    }
    Ok(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParallelCase {
    /// `e1` is a cut ribbon of `A^c` for every subset avoiding `e1` that
    /// joins its endpoints.
    AlwaysCut,
    /// The listed subsets join the endpoints of `e1` while `A^c` keeps a cycle through `e1`.
    Corrected(Vec<EdgeSubset>),
}

fn joins(g: &RibbonGraph, bits: u64, u: usize, w: usize) -> bool {
    let mut dsu = Dsu::new(g.vertex_count());
    for k in (0..g.edge_count()).filter(|k| bits >> k & 1 == 1) {
        let (a, b) = g.endpoints(k);
        dsu.union(a, b);
    }
    dsu.same(u, w)
}

/// Classifies `(G, e1)` by scanning the subsets `A ⊆ E(G) − e1` that join
/// the endpoints of `e1`.
pub fn parallel_case(g: &RibbonGraph, e1: usize) -> Result<ParallelCase, TheoremError> {
    g.check_edge(e1)?;
    EnumOptions::default().check_width(g.edge_count())?;
    let (u, w) = g.endpoints(e1);
    let width = g.edge_count();
    let without = EdgeSubset::full(width).without(e1);
    let mut corrected = Vec::new();
    for bits in 0..1u64 << width {
        if bits >> e1 & 1 == 1 {
            continue;
        }
        if !joins(g, bits, u, w) {
            continue;
        }
        if joins(g, without.bits() & !bits, u, w) {
            corrected.push(EdgeSubset::from_bits(bits, width)?);
        }
    }
    Ok(if corrected.is_empty() {
        ParallelCase::AlwaysCut
    } else {
        ParallelCase::Corrected(corrected)
    })
}

/// `Γ` of `G` with `e1` replaced by `n` parallel ribbons.
///
/// For `n = 2`: `(2z+1) Γ_G − 2z² Γ_{G−e1}`, plus `2(1−z)² Σ z^{γ(G^A)}`
/// over the corrected subsets when [`parallel_case`] finds any. For `n ≥ 3`:
/// `(2^{n−1} − 1) Γ_{G∪e2} − (2^{n−1} − 2) Γ_G` on top of the `n = 2` value.
pub fn parallel_recurrence(
    g: &RibbonGraph,
    e1: usize,
    n: usize,
) -> Result<IntPolynomial, TheoremError> {
    if n < 2 {
        return Err(TheoremError::BadParallelCount(n));
    }
    require_connected_planar(g)?;
    g.check_edge(e1)?;
    let rest = connected_deletion(g, e1)?;
    let whole = brute(g)?;
    let smaller = brute(&rest)?;
    let mut doubled = minus_one_plus(1, 2) * &whole - smaller.scale(2).shift(2);
    if let ParallelCase::Corrected(sets) = parallel_case(g, e1)? {
        let square = minus_one_plus(1, -1).pow(2).scale(2);
        doubled = doubled + square * genus_sum(g, sets)?;
    }
    if n == 2 {
        return Ok(doubled);
    }
    let p = pow2(n - 1);
    Ok(doubled.scale(&p - 1) - whole.scale(p - 2))
}

/// `Γ` of `G` with `e` subdivided: `2 Γ_G` when `e` is a cut ribbon,
/// `Γ_G + 2z Γ_{G−e}` otherwise.
pub fn subdivision_recurrence(g: &RibbonGraph, e: usize) -> Result<IntPolynomial, TheoremError> {
    if !g.is_connected() {
        return Err(TheoremError::Disconnected);
    }
    g.check_edge(e)?;
    let whole = brute(g)?;
    if g.is_bridge(e) {
        Ok(whole.scale(2))
    } else {
        Ok(whole + brute(&g.delete_edge(e)?)?.scale(2).shift(1))
    }
}

/// One bead of a ring-like graph; the ring enters at `root_a` and leaves at `root_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPart {
    pub graph: RibbonGraph,
    pub root_a: usize,
    pub root_b: usize,
}

/// A corner at `x` and a corner at `y` on one face, from the first such face.
fn shared_face_corners(g: &RibbonGraph, x: usize, y: usize) -> Option<(Corner, Corner)> {
    g.face_corners().into_iter().find_map(|face| {
        let cx = face.iter().find(|c| c.vertex == x)?;
        let cy = face.iter().find(|c| c.vertex == y)?;
        Some((*cx, *cy))
    })
}

fn check_part(i: usize, p: &RingPart) -> Result<(), TheoremError> {
    require_connected_planar(&p.graph)?;
    p.graph.check_vertex(p.root_a)?;
    p.graph.check_vertex(p.root_b)?;
    if shared_face_corners(&p.graph, p.root_a, p.root_b).is_none() {
        return Err(TheoremError::NoSharedFace {
            part: i,
            a: p.root_a,
            b: p.root_b,
        });
    }
    Ok(())
}

/// `Ḡ`: the part with a ribbon from `root_a` to `root_b` inserted across a
/// face holding both.
pub fn ring_closure(part: &RingPart) -> Result<RibbonGraph, TheoremError> {
    let (a, b) = shared_face_corners(&part.graph, part.root_a, part.root_b).ok_or(
        TheoremError::NoSharedFace {
            part: 0,
            a: part.root_a,
            b: part.root_b,
        },
    )?;
    Ok(part.graph.insert_edge(a, b)?)
}

/// The ring-like graph: parts in order, `root_b` of each part joined to
/// `root_a` of the next, and the last `root_b` joined back to the first
/// `root_a`. The connecting ribbons follow the parts' edges in ring order.
pub fn assemble_ring(parts: &[RingPart]) -> Result<RibbonGraph, TheoremError> {
    if parts.is_empty() {
        return Err(TheoremError::EmptyRing);
    }
    let mut g = parts[0].graph.clone();
    let mut offsets = vec![0];
    for p in &parts[1..] {
        offsets.push(g.vertex_count());
        g = g.disjoint_union(&p.graph);
    }
    let first_a = parts[0].root_a;
    let pick = |g: &RibbonGraph, x: usize, y: usize| shared_face_corners(g, x, y).map(|c| c.0);
    for i in 0..parts.len() - 1 {
        let b = offsets[i] + parts[i].root_b;
        let a = offsets[i + 1] + parts[i + 1].root_a;
        let next_b = offsets[i + 1] + parts[i + 1].root_b;
        let cb = pick(&g, b, first_a).ok_or(TheoremError::NoSharedFace {
            part: i,
            a: first_a,
            b,
        })?;
        let ca = pick(&g, a, next_b).ok_or(TheoremError::NoSharedFace {
            part: i + 1,
            a,
            b: next_b,
        })?;
        g = g.insert_edge(cb, ca)?;
    }
    let last = parts.len() - 1;
    let b = offsets[last] + parts[last].root_b;
    let (cb, ca) = shared_face_corners(&g, b, first_a).ok_or(TheoremError::NoSharedFace {
        part: last,
        a: first_a,
        b,
    })?;
    let ring = g.insert_edge(cb, ca)?;
    if !ring.surface_stats().is_planar() {
        return Err(TheoremError::NonPlanar);
    }
    Ok(ring)
}

/// `2^n z Π Γ_{G_i} + (2 − 2z) Π (Γ_{Ḡ_i} − 2z Γ_{G_i}) / (2 − 2z)`, each
/// quotient taken exactly.
pub fn ringlike_polynomial(parts: &[RingPart]) -> Result<IntPolynomial, TheoremError> {
    if parts.is_empty() {
        return Err(TheoremError::EmptyRing);
    }
    let two_minus = minus_one_plus(2, -2);
    let mut plain = IntPolynomial::one();
    let mut factors = IntPolynomial::one();
    for (i, part) in parts.iter().enumerate() {
        check_part(i, part)?;
        let closed = ring_closure(part)?;
        if !closed.surface_stats().is_planar() {
            return Err(TheoremError::NonPlanarClosure(i));
        }
        let gi = brute(&part.graph)?;
        let bar = brute(&closed)?;
        let factor = (bar - gi.scale(2).shift(1))
            .exact_div(&two_minus)
            .map_err(|source| TheoremError::Division { part: i, source })?;
        plain = plain * gi;
        factors = factors * factor;
    }
    Ok(plain.scale(pow2(parts.len())).shift(1) + two_minus * factors)
}

/// What an audit checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Deletion recurrence, cycle form.
    Deletion,
    /// Deletion recurrence, cut form.
    DeletionCut,
    Parallel,
    Subdivision,
    Ring,
    /// `c(A) + c(A^c) ≥ 1 + ξ(G)` for every subset.
    ComponentBound,
    /// Largest brute-force exponent equals `v − ξ`.
    MaxGenus,
    /// Vertex, edge, component and orientability relations of partial duals.
    DualInvariants,
    /// Spanning-subgraph genus formula against face-tracing the partial dual.
    GenusFormula,
    /// Maximum partial-dual genus unchanged by extra parallel ribbons.
    ParallelMaxGenus,
    /// Subsets containing a fixed edge carry half the pdG polynomial.
    HalfSum,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::Deletion,
        TheoremId::DeletionCut,
        TheoremId::Parallel,
        TheoremId::Subdivision,
        TheoremId::Ring,
        TheoremId::ComponentBound,
        TheoremId::MaxGenus,
        TheoremId::DualInvariants,
        TheoremId::GenusFormula,
        TheoremId::ParallelMaxGenus,
        TheoremId::HalfSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Deletion => "deletion",
            TheoremId::DeletionCut => "deletion_cut",
            TheoremId::Parallel => "parallel",
            TheoremId::Subdivision => "subdivision",
            TheoremId::Ring => "ring",
            TheoremId::ComponentBound => "component_bound",
            TheoremId::MaxGenus => "max_genus",
            TheoremId::DualInvariants => "dual_invariants",
            TheoremId::GenusFormula => "genus_formula",
            TheoremId::ParallelMaxGenus => "parallel_max_genus",
            TheoremId::HalfSum => "half_sum",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

/// One audited instance. For subset-wise checks `lhs` counts the passing
/// subsets and `rhs` the subsets examined; the witness is the first failing
/// subset. For recurrences the witness is the anchor edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub theorem: TheoremId,
    pub seed: u64,
    pub trial: u64,
    pub lhs: IntPolynomial,
    pub rhs: IntPolynomial,
    pub agree: bool,
    pub witness: Option<EdgeSubset>,
    pub note: Option<String>,
}

impl RecurrenceReport {
    fn compare(
        theorem: TheoremId,
        seed: u64,
        trial: u64,
        lhs: IntPolynomial,
        rhs: IntPolynomial,
        anchor: EdgeSubset,
    ) -> Self {
        let agree = lhs == rhs;
        RecurrenceReport {
            theorem,
            seed,
            trial,
            lhs,
            rhs,
            agree,
            witness: (!agree).then_some(anchor),
            note: None,
        }
    }

    fn failed(theorem: TheoremId, seed: u64, trial: u64, err: impl fmt::Display) -> Self {
        RecurrenceReport {
            theorem,
            seed,
            trial,
            lhs: IntPolynomial::zero(),
            rhs: IntPolynomial::one(),
            agree: false,
            witness: None,
            note: Some(err.to_string()),
        }
    }

    fn with_note(mut self, note: Option<String>) -> Self {
        self.note = note;
        self
    }
}

/// `theorem,seed,trial,agree,witness_subset`, witness edges separated by `;`.
pub fn reports_csv(reports: &[RecurrenceReport]) -> String {
    let mut out = String::from("theorem,seed,trial,agree,witness_subset\n");
    for r in reports {
        let witness = r
            .witness
            .map(|w| {
                w.iter()
                    .map(|k| k.to_string())
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.theorem, r.seed, r.trial, r.agree, witness
        );
    }
    out
}

/// A connected plane graph with at most `max_edges` edges and at least
/// `excess` edges beyond a spanning tree.
fn sized_planar(rng: &mut impl Rng, max_edges: usize, excess: usize) -> RibbonGraph {
    let max_edges = max_edges.max(excess);
    let v = rng.gen_range(1..=(max_edges + 1 - excess).min(6));
    let e = rng.gen_range(v - 1 + excess..=max_edges);
    random_planar_with(rng, v, e).expect("targets are satisfiable")
}

fn sized_general(rng: &mut impl Rng, max_edges: usize, twist: f64) -> RibbonGraph {
    let v = rng.gen_range(1..=(max_edges + 1).min(5));
    let e = rng.gen_range(v - 1..=max_edges);
    random_ribbon_with(rng, v, e, twist).expect("targets are satisfiable")
}

fn non_bridge(g: &RibbonGraph, rng: &mut impl Rng) -> Option<usize> {
    let candidates: Vec<usize> = (0..g.edge_count()).filter(|&k| !g.is_bridge(k)).collect();
    (!candidates.is_empty()).then(|| candidates[rng.gen_range(0..candidates.len())])
}

fn single(g: &RibbonGraph, k: usize) -> EdgeSubset {
    EdgeSubset::from_edges([k], g.edge_count()).expect("edge in range")
}

fn loop_note(g: &RibbonGraph, e: usize) -> Option<String> {
    g.is_loop(e)
        .then(|| format!("edge {e} is a loop: cycle family is every subset, cut family is empty"))
}

fn run_trials<F>(trials: u64, f: F) -> Vec<RecurrenceReport>
where
    F: Fn(u64) -> RecurrenceReport + Sync + Send,
{
    (0..trials).into_par_iter().map(f).collect()
}

/// Audits a deletion-style recurrence `r(G, e)` against brute force on
/// random plane graphs. `audit` uses this with the real recurrences; tests
/// pass deliberately broken ones.
pub fn audit_deletion_with<F>(
    theorem: TheoremId,
    seed: u64,
    trials: u64,
    max_edges: usize,
    r: F,
) -> Vec<RecurrenceReport>
where
    F: Fn(&RibbonGraph, usize) -> Result<IntPolynomial, TheoremError> + Sync + Send,
{
    run_trials(trials, |trial| {
        let mut rng = trial_rng(seed, trial);
        let g = sized_planar(&mut rng, max_edges, 1);
        let e = non_bridge(&g, &mut rng).expect("graph has a cycle");
        match (r(&g, e), brute(&g)) {
            (Ok(lhs), Ok(rhs)) => {
                RecurrenceReport::compare(theorem, seed, trial, lhs, rhs, single(&g, e))
                    .with_note(loop_note(&g, e))
            }
            (Err(err), _) | (_, Err(err)) => RecurrenceReport::failed(theorem, seed, trial, err),
        }
    })
}

fn subsetwise<F>(
    theorem: TheoremId,
    seed: u64,
    trial: u64,
    g: &RibbonGraph,
    check: F,
) -> RecurrenceReport
where
    F: Fn(EdgeSubset) -> bool,
{
    let mut passed = 0u64;
    let mut witness = None;
    for a in EdgeSubset::all(g.edge_count()) {
        if check(a) {
            passed += 1;
        } else if witness.is_none() {
            witness = Some(a);
        }
    }
    let total = 1u64 << g.edge_count();
    RecurrenceReport {
        theorem,
        seed,
        trial,
        lhs: IntPolynomial::constant(passed),
        rhs: IntPolynomial::constant(total),
        agree: passed == total,
        witness,
        note: None,
    }
}

/// Per-subset partial-dual relations: `v(G^A) = f(A)`; edges, components
/// and orientability preserved; `(G^A)^A` has the surface statistics and
/// face lengths of `G`. Also checks that `G^∅` is equivalent to `G` and `G^E` has the vertex
/// and face counts of `G*` swapped.
pub fn dual_invariants_hold(g: &RibbonGraph, a: EdgeSubset) -> bool {
    let s = g.surface_stats();
    let d = g.partial_dual(a);
    let sd = d.surface_stats();
    let ok = sd.vertices == g.spanning_stats(a).faces
        && sd.edges == s.edges
        && sd.components == s.components
        && sd.orientable == s.orientable
        && sd == g.partial_dual_stats(a);
    if !ok {
        return false;
    }
    let back = d.partial_dual(a);
    let mut lengths = back.to_gem().face_lengths();
    let mut want = g.to_gem().face_lengths();
    lengths.sort_unstable();
    want.sort_unstable();
    if back.surface_stats() != s || lengths != want {
        return false;
    }
    if a.is_empty() {
        return d.is_equivalent(g);
    }
    if a == EdgeSubset::full(g.edge_count()) {
        let dual = g.dual();
        return dual.is_equivalent(&d) && sd.vertices == s.faces && sd.faces == s.vertices;
    }
    true
}

fn audit_one(
    theorem: TheoremId,
    seed: u64,
    trial: u64,
    max_edges: usize,
) -> Result<RecurrenceReport, TheoremError> {
    let mut rng = trial_rng(seed, trial);
    let report = match theorem {
        TheoremId::Deletion | TheoremId::DeletionCut => {
            unreachable!("handled by audit_deletion_with")
        }
        TheoremId::Parallel => {
            let n = 2 + (trial % 3) as usize;
            let g = sized_planar(&mut rng, max_edges.saturating_sub(1).max(1), 1);
            let e1 = non_bridge(&g, &mut rng).expect("graph has a cycle");
            let lhs = parallel_recurrence(&g, e1, n)?;
            let rhs = brute(&with_parallels(&g, e1, n)?)?;
            let note = match parallel_case(&g, e1)? {
                ParallelCase::AlwaysCut => None,
                ParallelCase::Corrected(sets) => Some(format!("{} corrected subsets", sets.len())),
            };
            RecurrenceReport::compare(theorem, seed, trial, lhs, rhs, single(&g, e1))
                .with_note(note)
        }
        TheoremId::Subdivision => {
            let g = sized_planar(&mut rng, max_edges.saturating_sub(1).max(1), 0);
            if g.edge_count() == 0 {
                return Ok(RecurrenceReport::compare(
                    theorem,
                    seed,
                    trial,
                    IntPolynomial::one(),
                    IntPolynomial::one(),
                    EdgeSubset::empty(0),
                ));
            }
            let e = rng.gen_range(0..g.edge_count());
            let lhs = subdivision_recurrence(&g, e)?;
            let rhs = brute(&g.subdivide_edge(e)?)?;
            let kind = if g.is_bridge(e) {
                "cut ribbon"
            } else {
                "non-separating"
            };
            RecurrenceReport::compare(theorem, seed, trial, lhs, rhs, single(&g, e))
                .with_note(Some(kind.into()))
        }
        TheoremId::Ring => {
            let count = rng.gen_range(1..=3usize);
            let per_part = (max_edges / 3).clamp(1, 3);
            let parts: Vec<RingPart> = (0..count)
                .map(|_| {
                    let graph = sized_planar(&mut rng, per_part, 0);
                    let root_a = rng.gen_range(0..graph.vertex_count());
                    let root_b = rng.gen_range(0..graph.vertex_count());
                    RingPart {
                        graph,
                        root_a,
                        root_b,
                    }
                })
                .collect();
            let lhs = ringlike_polynomial(&parts)?;
            let rhs = brute(&assemble_ring(&parts)?)?;
            let width = parts.iter().map(|p| p.graph.edge_count()).sum::<usize>() + count;
            RecurrenceReport::compare(theorem, seed, trial, lhs, rhs, EdgeSubset::empty(width))
                .with_note(Some(format!("{count} parts")))
        }
        TheoremId::ComponentBound => {
            let g = sized_planar(&mut rng, max_edges, 0);
            let bound = 1 + xi(&g)?;
            subsetwise(theorem, seed, trial, &g, |a| {
                g.subset_components(a) + g.subset_components(a.complement()) >= bound
            })
        }
        TheoremId::MaxGenus => {
            let g = sized_planar(&mut rng, max_edges, 0);
            let top = brute(&g)?.degree().expect("nonzero");
            let lhs = IntPolynomial::monomial(1, top);
            let rhs = IntPolynomial::monomial(1, g.vertex_count() - xi(&g)?);
            RecurrenceReport::compare(
                theorem,
                seed,
                trial,
                lhs,
                rhs,
                EdgeSubset::empty(g.edge_count()),
            )
        }
        TheoremId::DualInvariants => {
            let g = match trial % 3 {
                0 => sized_planar(&mut rng, max_edges, 0),
                1 => sized_general(&mut rng, max_edges, 0.0),
                _ => sized_general(&mut rng, max_edges, 0.4),
            };
            let kind = if !g.surface_stats().orientable {
                "non-orientable"
            } else if g.surface_stats().is_planar() {
                "plane"
            } else {
                "orientable"
            };
            subsetwise(theorem, seed, trial, &g, |a| dual_invariants_hold(&g, a))
                .with_note(Some(kind.into()))
        }
        TheoremId::GenusFormula => {
            let g = sized_general(&mut rng, max_edges, 0.0);
            subsetwise(theorem, seed, trial, &g, |a| {
                g.genus_of_partial_dual(a).ok() == g.partial_dual(a).surface_stats().genus
            })
        }
        TheoremId::ParallelMaxGenus => {
            let g = sized_planar(&mut rng, max_edges, 0);
            if g.edge_count() == 0 {
                return Ok(RecurrenceReport::compare(
                    theorem,
                    seed,
                    trial,
                    IntPolynomial::zero(),
                    IntPolynomial::zero(),
                    EdgeSubset::empty(0),
                ));
            }
            let e = rng.gen_range(0..g.edge_count());
            let top = |k: usize| -> Result<usize, TheoremError> {
                Ok(brute(&with_parallels(&g, e, k)?)?
                    .degree()
                    .expect("nonzero"))
            };
            let base = top(2)?;
            let lhs: IntPolynomial = [3, 4, 5]
                .into_iter()
                .map(|k| top(k).map(|t| IntPolynomial::monomial(1, t)))
                .sum::<Result<IntPolynomial, _>>()?;
            RecurrenceReport::compare(
                theorem,
                seed,
                trial,
                lhs,
                IntPolynomial::monomial(3, base),
                single(&g, e),
            )
        }
        TheoremId::HalfSum => {
            let g = sized_planar(&mut rng, max_edges.max(1), 0);
            if g.edge_count() == 0 {
                return Ok(RecurrenceReport::compare(
                    theorem,
                    seed,
                    trial,
                    IntPolynomial::one(),
                    IntPolynomial::one(),
                    EdgeSubset::empty(0),
                ));
            }
            let e = rng.gen_range(0..g.edge_count());
            let with_e = EdgeSubset::all(g.edge_count()).filter(|a| a.contains(e));
            let lhs = genus_sum(&g, with_e)?.scale(2);
            RecurrenceReport::compare(theorem, seed, trial, lhs, brute(&g)?, single(&g, e))
        }
    };
    Ok(report)
}

/// Runs `trials` independent seeded instances of `theorem` on graphs with at
/// most `max_edges` edges (plus the extra ribbons a theorem adds).
pub fn audit(
    theorem: TheoremId,
    seed: u64,
    trials: u64,
    max_edges: usize,
) -> Vec<RecurrenceReport> {
    match theorem {
        TheoremId::Deletion => audit_deletion_with(theorem, seed, trials, max_edges, |g, e| {
            deletion_recurrence(g, e, DeletionForm::Cycle)
        }),
        TheoremId::DeletionCut => audit_deletion_with(theorem, seed, trials, max_edges, |g, e| {
            deletion_recurrence(g, e, DeletionForm::Cut)
        }),
        _ => run_trials(trials, |trial| {
            audit_one(theorem, seed, trial, max_edges)
                .unwrap_or_else(|err| RecurrenceReport::failed(theorem, seed, trial, err))
        }),
    }
}
