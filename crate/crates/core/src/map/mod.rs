//! Ribbon graphs as signed rotation systems.
//!
//! A [`RibbonGraph`] lists, for every vertex, the counterclockwise cyclic
//! order of the edge-ends incident to it, plus one twist bit per edge. All
//! topological computation happens on the flag model in [`gem`], where
//! vertices, edges, faces and components are orbits of three involutions.

pub(crate) mod dual;
mod edit;
pub mod gem;
mod io;
mod subset;

use std::fmt;

use thiserror::Error;

use crate::dsu::Dsu;

pub use gem::{GemMap, SpanningStats, SurfaceStats};
pub use io::ParseError;
pub use subset::{EdgeSubset, MAX_SUBSET_WIDTH};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("edge {edge} out of range (graph has {edges} edges)")]
    EdgeOutOfRange { edge: usize, edges: usize },
    #[error("vertex {vertex} out of range (graph has {vertices} vertices)")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("gap {gap} out of range at vertex {vertex} (degree {degree})")]
    GapOutOfRange {
        vertex: usize,
        gap: usize,
        degree: usize,
    },
    #[error("edge-end {0} appears more than once")]
    DuplicateEnd(EdgeEnd),
    #[error("edge-end {0} does not appear in any rotation")]
    MissingEnd(EdgeEnd),
    #[error("bad edge-end tag {0}, expected 0 or 1")]
    BadEndTag(u8),
    #[error("subsets are limited to {MAX_SUBSET_WIDTH} edges, got {0}")]
    SubsetTooWide(usize),
    #[error("subset has width {got}, graph has {expected} edges")]
    SubsetWidth { got: usize, expected: usize },
    #[error("bad subset entry `{0}`")]
    BadSubset(String),
    #[error("graph is not orientable; use the Euler-genus route")]
    NonOrientable,
}

/// One end of an edge: `end` is 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: u8,
}

impl EdgeEnd {
    pub const fn new(edge: usize, end: u8) -> Self {
        EdgeEnd { edge, end }
    }

    pub const fn other(self) -> Self {
        EdgeEnd {
            edge: self.edge,
            end: 1 - self.end,
        }
    }

    #[inline]
    pub(crate) const fn slot(self) -> usize {
        2 * self.edge + self.end as usize
    }
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

/// A gap between two consecutive edge-ends at a vertex.
///
/// Gap `i` sits immediately after position `i` of the rotation, so a vertex
/// of degree `d` has gaps `0..d`; a degree-0 vertex has the single gap 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub vertex: usize,
    pub gap: usize,
}

/// A signed rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonGraph {
    rotations: Vec<Vec<EdgeEnd>>,
    twisted: Vec<bool>,
    // (vertex, position) of every edge-end, indexed by `EdgeEnd::slot`.
    placement: Vec<(usize, usize)>,
}

impl RibbonGraph {
    /// Validates and builds a ribbon graph. The edge count is `twisted.len()`.
    pub fn new(rotations: Vec<Vec<EdgeEnd>>, twisted: Vec<bool>) -> Result<Self, MapError> {
        let edges = twisted.len();
        let mut placement = vec![(usize::MAX, 0); 2 * edges];
        for (v, rot) in rotations.iter().enumerate() {
            for (pos, &end) in rot.iter().enumerate() {
                if end.end > 1 {
                    return Err(MapError::BadEndTag(end.end));
                }
                if end.edge >= edges {
                    return Err(MapError::EdgeOutOfRange {
                        edge: end.edge,
                        edges,
                    });
                }
                let slot = &mut placement[end.slot()];
                if slot.0 != usize::MAX {
                    return Err(MapError::DuplicateEnd(end));
                }
                *slot = (v, pos);
            }
        }
        if let Some(i) = placement.iter().position(|p| p.0 == usize::MAX) {
            return Err(MapError::MissingEnd(EdgeEnd::new(i / 2, (i % 2) as u8)));
        }
        Ok(RibbonGraph {
            rotations,
            twisted,
            placement,
        })
    }

    /// Builds from `(edge, end)` pairs; convenient for tests and generators.
    pub fn from_pairs(rotations: &[&[(usize, u8)]], twisted: Vec<bool>) -> Result<Self, MapError> {
        let rotations = rotations
            .iter()
            .map(|rot| rot.iter().map(|&(k, t)| EdgeEnd::new(k, t)).collect())
            .collect();
        Self::new(rotations, twisted)
    }

    /// A graph with `n` isolated vertices.
    pub fn isolated(n: usize) -> Self {
        RibbonGraph {
            rotations: vec![Vec::new(); n],
            twisted: Vec::new(),
            placement: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn edge_count(&self) -> usize {
        self.twisted.len()
    }

    pub fn rotations(&self) -> &[Vec<EdgeEnd>] {
        &self.rotations
    }

    pub fn rotation(&self, v: usize) -> &[EdgeEnd] {
        &self.rotations[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotations[v].len()
    }

    pub fn twists(&self) -> &[bool] {
        &self.twisted
    }

    pub fn is_twisted(&self, k: usize) -> bool {
        self.twisted[k]
    }

    /// Vertex and rotation position of an edge-end.
    pub fn place(&self, end: EdgeEnd) -> (usize, usize) {
        self.placement[end.slot()]
    }

    /// The vertices carrying end 0 and end 1 of edge `k`.
    pub fn endpoints(&self, k: usize) -> (usize, usize) {
        (self.placement[2 * k].0, self.placement[2 * k + 1].0)
    }

    pub fn is_loop(&self, k: usize) -> bool {
        let (u, w) = self.endpoints(k);
        u == w
    }

    pub fn isolated_vertex_count(&self) -> usize {
        self.rotations.iter().filter(|r| r.is_empty()).count()
    }

    pub fn check_edge(&self, k: usize) -> Result<(), MapError> {
        if k < self.edge_count() {
            Ok(())
        } else {
            Err(MapError::EdgeOutOfRange {
                edge: k,
                edges: self.edge_count(),
            })
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), MapError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(MapError::VertexOutOfRange {
                vertex: v,
                vertices: self.vertex_count(),
            })
        }
    }

    pub fn check_subset(&self, a: EdgeSubset) -> Result<(), MapError> {
        if a.width() == self.edge_count() {
            Ok(())
        } else {
            Err(MapError::SubsetWidth {
                got: a.width(),
                expected: self.edge_count(),
            })
        }
    }

    /// Number of components of the spanning subgraph `(V, a)`.
    pub fn subset_components(&self, a: EdgeSubset) -> usize {
        let mut dsu = Dsu::new(self.vertex_count());
        for k in a.iter() {
            let (u, w) = self.endpoints(k);
            dsu.union(u, w);
        }
        dsu.sets()
    }

    /// c(G), isolated vertices included.
    pub fn component_count(&self) -> usize {
        self.subset_components(EdgeSubset::full(self.edge_count()))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Whether removing edge `k` increases the component count.
    pub fn is_bridge(&self, k: usize) -> bool {
        let e = self.edge_count();
        let without = EdgeSubset::full(e).without(k);
        let (u, w) = self.endpoints(k);
        let mut dsu = Dsu::new(self.vertex_count());
        for j in without.iter() {
            let (a, b) = self.endpoints(j);
            dsu.union(a, b);
        }
        !dsu.same(u, w)
    }

    /// The flag model of this graph.
    pub fn to_gem(&self) -> GemMap {
        GemMap::from_graph(self)
    }

    pub fn surface_stats(&self) -> SurfaceStats {
        self.to_gem().surface_stats()
    }

    /// Surface statistics of the spanning subgraph `(V, a)`.
    pub fn spanning_stats(&self, a: EdgeSubset) -> SpanningStats {
        assert_eq!(a.width(), self.edge_count(), "subset width mismatch");
        let sub = self.restrict(a);
        let s = sub.surface_stats();
        SpanningStats {
            components: s.components,
            faces: s.faces,
            genus: s.genus,
            euler_genus: s.euler_genus,
        }
    }

    /// The spanning subgraph `(V, a)` with edges renumbered in increasing order.
    pub fn restrict(&self, a: EdgeSubset) -> RibbonGraph {
        let mut renumber = vec![usize::MAX; self.edge_count()];
        let mut twisted = Vec::with_capacity(a.len());
        for (new, k) in a.iter().enumerate() {
            renumber[k] = new;
            twisted.push(self.twisted[k]);
        }
        let rotations = self
            .rotations
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|e| renumber[e.edge] != usize::MAX)
                    .map(|e| EdgeEnd::new(renumber[e.edge], e.end))
                    .collect()
            })
            .collect();
        RibbonGraph::new(rotations, twisted).expect("restriction of a valid graph is valid")
    }

    /// Rotation of vertex `v` started at its smallest edge-end.
    pub fn normalized_rotation(&self, v: usize) -> Vec<EdgeEnd> {
        let rot = &self.rotations[v];
        match rot.iter().enumerate().min_by_key(|(_, e)| **e) {
            None => Vec::new(),
            Some((start, _)) => rot[start..].iter().chain(&rot[..start]).copied().collect(),
        }
    }

    /// Vertex rotations normalized and sorted; equal for graphs that differ only in
    /// vertex numbering and rotation starting points.
    pub fn canonical_rotations(&self) -> Vec<Vec<EdgeEnd>> {
        let mut rots: Vec<_> = (0..self.vertex_count())
            .map(|v| self.normalized_rotation(v))
            .collect();
        rots.sort();
        rots
    }

    /// Whether `other` is the same ribbon graph up to vertex numbering,
    /// rotation starting points and vertex flips (reversing a rotation and
    /// toggling the twist of every non-loop edge at that vertex). Edge
    /// labels and end tags must match.
    pub fn is_equivalent(&self, other: &RibbonGraph) -> bool {
        if self.edge_count() != other.edge_count()
            || self.vertex_count() != other.vertex_count()
            || self.isolated_vertex_count() != other.isolated_vertex_count()
        {
            return false;
        }
        let (a, b) = (self.to_gem(), other.to_gem());
        let vertex_of = |f: usize| self.placement[f / 2].0;
        let mut flip: Vec<Option<usize>> = vec![None; self.vertex_count()];
        let phi = |flip: &[Option<usize>], f: usize| f ^ flip[vertex_of(f)].unwrap_or(0);
        for root in 0..self.vertex_count() {
            if flip[root].is_some() {
                continue;
            }
            let before = flip.clone();
            // a mirror image is not a flip, so both root orientations are tried
            let found = (0..2).any(|x| {
                flip.clone_from(&before);
                flip[root] = Some(x);
                let mut changed = true;
                while changed {
                    changed = false;
                    for k in 0..self.edge_count() {
                        let (u, w) = self.endpoints(k);
                        let (unknown, f) = match (flip[u], flip[w]) {
                            (Some(_), None) => (w, 4 * k),
                            (None, Some(_)) => (u, 4 * k + 2),
                            _ => continue,
                        };
                        flip[unknown] = Some(0);
                        if phi(&flip, a.s0(f)) != b.s0(phi(&flip, f)) {
                            flip[unknown] = Some(1);
                        }
                        changed = true;
                    }
                }
                (0..a.flag_count())
                    .filter(|&f| before[vertex_of(f)].is_none() && flip[vertex_of(f)].is_some())
                    .all(|f| {
                        let g = phi(&flip, f);
                        phi(&flip, a.s0(f)) == b.s0(g) && phi(&flip, a.s1(f)) == b.s1(g)
                    })
            });
            if !found {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests;
