//! Brute-force partial-dual genus polynomials and spanning-tree statistics.
//!
//! Every sweep visits all `2^e` edge subsets. The index range is cut into
//! a fixed number of chunks by its high-order bits; inside a chunk subsets
//! are visited in reflected Gray-code order. Each chunk fills its own genus
//! histogram and the histograms are added in chunk order, so the result does
//! not depend on the thread count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::dsu::Dsu;
use crate::map::dual::DualScratch;
use crate::map::{EdgeSubset, MapError, RibbonGraph};
use crate::poly::{pow2, IntPolynomial};

/// Default cap on the number of edges for brute-force sweeps.
pub const DEFAULT_MAX_EDGES: usize = 30;

const CHUNK_BITS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error(
        "graph has {edges} edges, above the brute-force cap of {cap}; raise the cap to override"
    )]
    TooManyEdges { edges: usize, cap: usize },
    #[error("graph is not orientable; use the Euler-genus polynomial")]
    NonOrientable,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not planar (genus 0 required)")]
    NonPlanar,
    #[error("failed to start worker threads: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub max_edges: usize,
    /// Sweep graphs above `max_edges` anyway.
    pub allow_large: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            max_edges: DEFAULT_MAX_EDGES,
            allow_large: false,
            threads: None,
        }
    }
}

impl EnumOptions {
    pub fn with_threads(threads: usize) -> Self {
        EnumOptions {
            threads: Some(threads),
            ..Self::default()
        }
    }

    pub(crate) fn check_width(&self, edges: usize) -> Result<(), EnumError> {
        let hard = crate::map::MAX_SUBSET_WIDTH - 1;
        if (edges > self.max_edges && !self.allow_large) || edges > hard {
            return Err(EnumError::TooManyEdges {
                edges,
                cap: if self.allow_large {
                    hard
                } else {
                    self.max_edges
                },
            });
        }
        Ok(())
    }

    /// Runs `op` inside a pool with the requested thread count.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> Result<R, EnumError> {
        match self.threads {
            None => Ok(op()),
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| EnumError::ThreadPool(e.to_string()))?;
                Ok(pool.install(op))
            }
        }
    }
}

/// How the genus of each partial dual is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusMethod {
    /// From spanning-subgraph components and genera, without building `G^A`.
    Formula,
    /// From face-tracing the swapped flag model of `G^A`.
    Construct,
}

/// Histogram of `f(scratch, subset_bits)` over all subsets of `edges` edges.
fn histogram<S, M, F>(
    edges: usize,
    bins: usize,
    opts: &EnumOptions,
    make: M,
    f: F,
) -> Result<Vec<u64>, EnumError>
where
    M: Fn() -> S + Sync,
    F: Fn(&mut S, u64) -> usize + Sync,
{
    opts.check_width(edges)?;
    let split = edges.min(CHUNK_BITS);
    let low = edges - split;
    let run = || {
        (0..1u64 << split)
            .into_par_iter()
            .map(|chunk| {
                let mut scratch = make();
                let mut counts = vec![0u64; bins];
                let base = chunk << low;
                for i in base..base + (1u64 << low) {
                    let bits = i ^ (i >> 1);
                    counts[f(&mut scratch, bits)] += 1;
                }
                counts
            })
            .collect::<Vec<_>>()
    };
    let parts = opts.install(run)?;
    let mut total = vec![0u64; bins];
    for part in parts {
        for (t, c) in total.iter_mut().zip(part) {
            *t += c;
        }
    }
    Ok(total)
}

/// Shared data for evaluating `γ(G^A)` by the component/genus formula.
pub(crate) struct FormulaContext {
    ends: Vec<(usize, usize)>,
    s0: Vec<u32>,
    s1: Vec<u32>,
    vertex_of_flag: Vec<usize>,
    vertices: usize,
    edges: usize,
    components: usize,
    planar: bool,
}

pub(crate) struct FormulaScratch {
    dsu: Dsu,
    seen: Vec<bool>,
    touched: Vec<bool>,
}

impl FormulaContext {
    pub(crate) fn new(g: &RibbonGraph) -> Result<Self, EnumError> {
        let gem = g.to_gem();
        let stats = gem.surface_stats();
        if !stats.orientable {
            return Err(EnumError::NonOrientable);
        }
        let mut vertex_of_flag = vec![0; gem.flag_count()];
        for k in 0..g.edge_count() {
            let (u, w) = g.endpoints(k);
            vertex_of_flag[4 * k] = u;
            vertex_of_flag[4 * k + 1] = u;
            vertex_of_flag[4 * k + 2] = w;
            vertex_of_flag[4 * k + 3] = w;
        }
        Ok(FormulaContext {
            ends: (0..g.edge_count()).map(|k| g.endpoints(k)).collect(),
            s0: gem.s0_table().to_vec(),
            s1: gem.s1_table().to_vec(),
            vertex_of_flag,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            components: stats.components,
            planar: stats.is_planar(),
        })
    }

    pub(crate) fn scratch(&self) -> FormulaScratch {
        FormulaScratch {
            dsu: Dsu::new(self.vertices),
            seen: vec![false; self.s0.len()],
            touched: vec![false; self.vertices],
        }
    }

    pub(crate) fn components(&self, s: &mut FormulaScratch, bits: u64) -> usize {
        s.dsu.reset(self.vertices);
        let mut rest = bits;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (u, w) = self.ends[k];
            s.dsu.union(u, w);
        }
        s.dsu.sets()
    }

    /// Faces of the spanning subgraph `(V, A)`: boundary walks over the
    /// flags of `A`, where a corner step skips the ends of edges outside `A`.
    fn subgraph_faces(&self, s: &mut FormulaScratch, bits: u64) -> usize {
        let in_a = |f: usize| bits >> (f / 4) & 1 == 1;
        s.seen.iter_mut().for_each(|x| *x = false);
        s.touched.iter_mut().for_each(|x| *x = false);
        let mut faces = 0;
        for start in 0..self.s0.len() {
            if !in_a(start) {
                continue;
            }
            s.touched[self.vertex_of_flag[start]] = true;
            if s.seen[start] {
                continue;
            }
            faces += 1;
            let mut x = start;
            loop {
                s.seen[x] = true;
                let y = self.s0[x] as usize;
                s.seen[y] = true;
                let mut next = self.s1[y] as usize;
                while !in_a(next) {
                    next = self.s1[next ^ 1] as usize;
                }
                x = next;
                if x == start {
                    break;
                }
            }
        }
        faces + s.touched.iter().filter(|t| !**t).count()
    }

    /// Orientable genus of `(V, A)`.
    fn subgraph_genus(&self, s: &mut FormulaScratch, bits: u64, comps: usize) -> usize {
        let faces = self.subgraph_faces(s, bits);
        let twice = 2 * comps + bits.count_ones() as usize - self.vertices - faces;
        debug_assert!(twice.is_multiple_of(2));
        twice / 2
    }

    /// `γ(A) + γ(A^c) + c(G) + v(G) − c(A) − c(A^c)`.
    pub(crate) fn genus(&self, s: &mut FormulaScratch, bits: u64) -> usize {
        let comp_bits = !bits & mask(self.edges);
        let ca = self.components(s, bits);
        let cc = self.components(s, comp_bits);
        let (ga, gc) = if self.planar {
            (0, 0)
        } else {
            (
                self.subgraph_genus(s, bits, ca),
                self.subgraph_genus(s, comp_bits, cc),
            )
        };
        ga + gc + self.components + self.vertices - ca - cc
    }
}

fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// `(Σ_A z^{ε(G^A)})` computed by face-tracing each swapped flag model.
fn construct_histogram(
    g: &RibbonGraph,
    opts: &EnumOptions,
    euler: bool,
) -> Result<Vec<u64>, EnumError> {
    let gem = g.to_gem();
    let stats = gem.surface_stats();
    if !euler && !stats.orientable {
        return Err(EnumError::NonOrientable);
    }
    let (s0, s1) = (gem.s0_table(), gem.s1_table());
    let iso = gem.isolated_vertices();
    let e = g.edge_count();
    let c = stats.components;
    let bins = 2 * c + e + 1;
    histogram(
        e,
        bins,
        opts,
        || DualScratch::new(s0.len()),
        |scratch, bits| {
            let (v, f) = scratch.vertex_face_counts(s0, s1, bits);
            let eg = 2 * c + e - (v + iso) - (f + iso);
            if euler {
                eg
            } else {
                debug_assert!(eg.is_multiple_of(2));
                eg / 2
            }
        },
    )
}

fn finish(counts: Vec<u64>, edges: usize) -> IntPolynomial {
    let p = IntPolynomial::from_counts(&counts);
    assert_eq!(
        p.coeff_sum(),
        pow2(edges),
        "genus histogram does not cover all subsets"
    );
    p
}

/// `Σ_{A ⊆ E} z^{γ(G^A)}` for an orientable ribbon graph.
pub fn pdg_polynomial(
    g: &RibbonGraph,
    method: GenusMethod,
    opts: &EnumOptions,
) -> Result<IntPolynomial, EnumError> {
    let e = g.edge_count();
    opts.check_width(e)?;
    let counts = match method {
        GenusMethod::Formula => {
            let ctx = FormulaContext::new(g)?;
            let bins = ctx.components + ctx.vertices + e + 1;
            histogram(
                e,
                bins,
                opts,
                || ctx.scratch(),
                |s, bits| ctx.genus(s, bits),
            )?
        }
        GenusMethod::Construct => construct_histogram(g, opts, false)?,
    };
    Ok(finish(counts, e))
}

/// `Σ_{A ⊆ E} z^{ε(G^A)}`; works for any ribbon graph.
pub fn euler_polynomial(g: &RibbonGraph, opts: &EnumOptions) -> Result<IntPolynomial, EnumError> {
    let e = g.edge_count();
    opts.check_width(e)?;
    Ok(finish(construct_histogram(g, opts, true)?, e))
}

/// CSV rows `i,count` for every exponent up to the degree.
pub fn genus_csv(p: &IntPolynomial) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        let _ = writeln!(out, "{i},{c}");
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `A ∪ e` contains a cycle through `e`.
    CycleWithEdge,
    /// `e` is a cut ribbon of `A ∪ e`.
    CutInUnion,
}

/// Subsets of `E(G − e)` classified by how `e` closes on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    pub kind: FamilyKind,
    pub anchor_edge: usize,
    /// Subsets of the edges of `G − e`, numbered as in [`RibbonGraph::delete_edge`].
    pub members: Vec<EdgeSubset>,
}

/// Subsets `A ⊆ E(G − e)` by whether the endpoints of `e` are joined in `A`.
/// A loop closes a cycle with every `A`.
pub fn subset_family(
    g: &RibbonGraph,
    e: usize,
    kind: FamilyKind,
) -> Result<SubsetFamily, EnumError> {
    g.check_edge(e)?;
    let rest = g.delete_edge(e)?;
    let width = rest.edge_count();
    EnumOptions::default().check_width(width)?;
    let (u, w) = g.endpoints(e);
    let ends: Vec<(usize, usize)> = (0..width).map(|k| rest.endpoints(k)).collect();
    let mut dsu = Dsu::new(g.vertex_count());
    let mut members = Vec::new();
    for bits in 0..1u64 << width {
        dsu.reset(g.vertex_count());
        let mut r = bits;
        while r != 0 {
            let k = r.trailing_zeros() as usize;
            r &= r - 1;
            dsu.union(ends[k].0, ends[k].1);
        }
        let closes = dsu.same(u, w);
        if closes == (kind == FamilyKind::CycleWithEdge) {
            members.push(EdgeSubset::from_bits(bits, width)?);
        }
    }
    Ok(SubsetFamily {
        kind,
        anchor_edge: e,
        members,
    })
}

/// `Σ_{A ∈ family} z^{γ[(G−e)^A]}` by the genus formula.
pub fn correction_sum(
    g_minus_e: &RibbonGraph,
    family: &SubsetFamily,
) -> Result<IntPolynomial, EnumError> {
    genus_sum(g_minus_e, family.members.iter().copied())
}

/// `Σ z^{γ(G^A)}` over the given subsets, using the genus formula.
pub fn genus_sum<I: IntoIterator<Item = EdgeSubset>>(
    g: &RibbonGraph,
    subsets: I,
) -> Result<IntPolynomial, EnumError> {
    let ctx = FormulaContext::new(g)?;
    let mut scratch = ctx.scratch();
    let mut counts: Vec<u64> = Vec::new();
    for a in subsets {
        g.check_subset(a)?;
        let k = ctx.genus(&mut scratch, a.bits());
        if counts.len() <= k {
            counts.resize(k + 1, 0);
        }
        counts[k] += 1;
    }
    Ok(IntPolynomial::from_counts(&counts))
}

/// Which item of the top-coefficient classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopCoefficientCase {
    /// No tree has a spanning-tree complement, and every minimiser of
    /// `c(A) + c(A^c)` is a ξ-tree or the complement of one: top coefficient `2μ`.
    TreesOnly = 1,
    /// Some non-tree subset also attains the minimum: top coefficient exceeds `2μ`.
    Extra = 2,
    /// Some tree has a spanning-tree complement: top coefficient `|η|`.
    ComplementaryTrees = 3,
}

/// Largest edge count for which [`tree_stats`] classifies the top coefficient.
pub const CASE_SCAN_MAX_EDGES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    /// Minimum over spanning trees `T` of `c(T^c)`.
    pub xi: usize,
    /// Spanning trees attaining `xi`.
    pub mu: u64,
    /// Subsets `A` with `c(A) = xi` whose complement is a spanning tree.
    pub mu_c: u64,
    /// Spanning trees whose complement is also a spanning tree.
    pub eta: u64,
    /// Maximum partial-dual genus, `v − xi`.
    pub gamma_max: usize,
    /// Coefficient of `z^gamma_max` in the pdG polynomial.
    pub top_coeff: BigInt,
    /// `None` above [`CASE_SCAN_MAX_EDGES`] edges.
    pub case: Option<TopCoefficientCase>,
}

fn require_connected_planar(g: &RibbonGraph) -> Result<(), EnumError> {
    let s = g.surface_stats();
    if !s.orientable {
        return Err(EnumError::NonOrientable);
    }
    if s.components > 1 {
        return Err(EnumError::Disconnected);
    }
    if !s.is_planar() {
        return Err(EnumError::NonPlanar);
    }
    Ok(())
}

/// All spanning trees of a connected graph, by include/exclude recursion on
/// the edges in index order. Loops are never included.
pub fn spanning_trees(g: &RibbonGraph) -> Vec<EdgeSubset> {
    fn recurse(
        g: &RibbonGraph,
        i: usize,
        dsu: &Dsu,
        chosen: u64,
        need: usize,
        out: &mut Vec<EdgeSubset>,
    ) {
        if need == 0 {
            out.push(EdgeSubset::from_bits(chosen, g.edge_count()).expect("bits in range"));
            return;
        }
        let e = g.edge_count();
        if i == e {
            return;
        }
        // prune when the remaining edges cannot finish a tree
        let mut probe = dsu.clone();
        for k in i..e {
            let (u, w) = g.endpoints(k);
            probe.union(u, w);
        }
        if probe.sets() > 1 {
            return;
        }
        let (u, w) = g.endpoints(i);
        let mut with = dsu.clone();
        if with.union(u, w) {
            recurse(g, i + 1, &with, chosen | 1 << i, need - 1, out);
        }
        recurse(g, i + 1, dsu, chosen, need, out);
    }
    let mut out = Vec::new();
    if g.vertex_count() == 0 || !g.is_connected() {
        return out;
    }
    recurse(
        g,
        0,
        &Dsu::new(g.vertex_count()),
        0,
        g.vertex_count() - 1,
        &mut out,
    );
    out
}

/// `ξ(G)`: the minimum of `c(T^c)` over spanning trees.
pub fn xi(g: &RibbonGraph) -> Result<usize, EnumError> {
    if !g.is_connected() {
        return Err(EnumError::Disconnected);
    }
    Ok(spanning_trees(g)
        .into_iter()
        .map(|t| g.subset_components(t.complement()))
        .min()
        .expect("a connected graph has a spanning tree"))
}

fn is_spanning_tree(g: &RibbonGraph, a: EdgeSubset) -> bool {
    a.len() + 1 == g.vertex_count() && g.subset_components(a) == 1
}

pub fn tree_stats(g: &RibbonGraph, opts: &EnumOptions) -> Result<TreeStats, EnumError> {
    require_connected_planar(g)?;
    let trees = spanning_trees(g);
    let comp: Vec<usize> = trees
        .iter()
        .map(|t| g.subset_components(t.complement()))
        .collect();
    let xi = *comp
        .iter()
        .min()
        .expect("connected graph has a spanning tree");
    let mu = comp.iter().filter(|&&c| c == xi).count() as u64;
    let mu_c = trees
        .iter()
        .filter(|t| g.subset_components(t.complement()) == xi)
        .count() as u64;
    let eta = trees
        .iter()
        .filter(|t| is_spanning_tree(g, t.complement()))
        .count() as u64;
    let gamma_max = g.vertex_count() - xi;
    let pdg = pdg_polynomial(g, GenusMethod::Formula, opts)?;
    let top_coeff = pdg.coeff(gamma_max);

    let case = if eta > 0 {
        Some(TopCoefficientCase::ComplementaryTrees)
    } else if g.edge_count() <= CASE_SCAN_MAX_EDGES {
        let in_tau = |a: EdgeSubset| {
            (is_spanning_tree(g, a) && g.subset_components(a.complement()) == xi)
                || (is_spanning_tree(g, a.complement()) && g.subset_components(a) == xi)
        };
        let extra = EdgeSubset::all(g.edge_count()).any(|a| {
            g.subset_components(a) + g.subset_components(a.complement()) == 1 + xi && !in_tau(a)
        });
        Some(if extra {
            TopCoefficientCase::Extra
        } else {
            TopCoefficientCase::TreesOnly
        })
    } else {
        None
    };
    Ok(TreeStats {
        xi,
        mu,
        mu_c,
        eta,
        gamma_max,
        top_coeff,
        case,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaxGenusMethod {
    /// Largest exponent of the brute-force pdG polynomial.
    Brute,
    /// `v(G) − ξ(G)`; planar graphs only.
    Xi,
}

/// Maximum genus over all partial duals of a connected graph.
pub fn max_pd_genus(
    g: &RibbonGraph,
    method: MaxGenusMethod,
    opts: &EnumOptions,
) -> Result<usize, EnumError> {
    if !g.is_connected() {
        return Err(EnumError::Disconnected);
    }
    match method {
        MaxGenusMethod::Brute => Ok(pdg_polynomial(g, GenusMethod::Formula, opts)?
            .degree()
            .expect("pdG polynomial is nonzero")),
        MaxGenusMethod::Xi => {
            require_connected_planar(g)?;
            Ok(g.vertex_count() - xi(g)?)
        }
    }
}
