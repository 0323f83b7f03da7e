//! Flag (graph-encoded map) model.
//!
//! Edge `k` owns flags `4k..4k+4`: flag `4k + 2t + s` is side `s` of end `t`.
//! Side 0 faces the previous end in the counterclockwise rotation, side 1 the
//! next one. The three involutions are
//!
//! * `s0`: across the ribbon, to the other end (same side when twisted,
//!   opposite side otherwise);
//! * `s1`: across a vertex corner, from side 1 of one end to side 0 of the
//!   next end in rotation;
//! * `s2`: between the two sides of one end, i.e. `f ^ 1`.
//!
//! Degree-0 vertices own no flags and are counted separately.

use super::{EdgeEnd, RibbonGraph};

#[inline]
pub(crate) const fn flag(end: EdgeEnd, side: usize) -> usize {
    2 * end.slot() + side
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GemMap {
    s0: Vec<u32>,
    s1: Vec<u32>,
    isolated: usize,
}

/// Counts for a ribbon graph and the surface it lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceStats {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub components: usize,
    pub orientable: bool,
    /// Orientable genus; `None` when the surface is non-orientable.
    pub genus: Option<usize>,
    pub euler_genus: usize,
}

/// Counts for a spanning subgraph `(V, A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpanningStats {
    pub components: usize,
    pub faces: usize,
    pub genus: Option<usize>,
    pub euler_genus: usize,
}

impl SurfaceStats {
    pub fn from_counts(
        vertices: usize,
        edges: usize,
        faces: usize,
        components: usize,
        orientable: bool,
    ) -> Self {
        let twice = 2 * components as i64 - vertices as i64 + edges as i64 - faces as i64;
        assert!(
            twice >= 0,
            "negative Euler genus: v={vertices} e={edges} f={faces} c={components}"
        );
        let euler_genus = twice as usize;
        let genus = if orientable {
            debug_assert!(
                euler_genus.is_multiple_of(2),
                "odd Euler genus on an orientable surface"
            );
            Some(euler_genus / 2)
        } else {
            None
        };
        SurfaceStats {
            vertices,
            edges,
            faces,
            components,
            orientable,
            genus,
            euler_genus,
        }
    }

    pub fn is_planar(&self) -> bool {
        self.euler_genus == 0
    }
}

impl GemMap {
    pub fn from_graph(g: &RibbonGraph) -> Self {
        let n = 4 * g.edge_count();
        let mut s0 = vec![0u32; n];
        for k in 0..g.edge_count() {
            for side in 0..2 {
                let a = flag(EdgeEnd::new(k, 0), side);
                let b = if g.is_twisted(k) {
                    flag(EdgeEnd::new(k, 1), side)
                } else {
                    flag(EdgeEnd::new(k, 1), 1 - side)
                };
                s0[a] = b as u32;
                s0[b] = a as u32;
            }
        }
        let mut s1 = vec![0u32; n];
        for rot in g.rotations() {
            let d = rot.len();
            for i in 0..d {
                let out = flag(rot[i], 1);
                let inc = flag(rot[(i + 1) % d], 0);
                s1[out] = inc as u32;
                s1[inc] = out as u32;
            }
        }
        GemMap {
            s0,
            s1,
            isolated: g.isolated_vertex_count(),
        }
    }

    pub fn flag_count(&self) -> usize {
        self.s0.len()
    }

    pub fn isolated_vertices(&self) -> usize {
        self.isolated
    }

    #[inline]
    pub fn s0(&self, f: usize) -> usize {
        self.s0[f] as usize
    }

    #[inline]
    pub fn s1(&self, f: usize) -> usize {
        self.s1[f] as usize
    }

    #[inline]
    pub fn s2(&self, f: usize) -> usize {
        f ^ 1
    }

    pub(crate) fn s0_table(&self) -> &[u32] {
        &self.s0
    }

    pub(crate) fn s1_table(&self) -> &[u32] {
        &self.s1
    }

    /// Orbit labels under the group generated by the chosen involutions
    /// (`[s0, s1, s2]` switches). Returns `(label per flag, orbit count)`.
    pub fn orbits(&self, use_s0: bool, use_s1: bool, use_s2: bool) -> (Vec<usize>, usize) {
        let n = self.flag_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            stack.push(start);
            while let Some(f) = stack.pop() {
                let mut visit = |g: usize| {
                    if label[g] == usize::MAX {
                        label[g] = count;
                        stack.push(g);
                    }
                };
                if use_s0 {
                    visit(self.s0(f));
                }
                if use_s1 {
                    visit(self.s1(f));
                }
                if use_s2 {
                    visit(self.s2(f));
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Positive-degree vertices plus isolated vertices.
    pub fn vertex_count(&self) -> usize {
        self.orbits(false, true, true).1 + self.isolated
    }

    pub fn edge_count(&self) -> usize {
        self.flag_count() / 4
    }

    pub fn face_count(&self) -> usize {
        self.orbits(true, true, false).1 + self.isolated
    }

    pub fn component_count(&self) -> usize {
        self.orbits(true, true, true).1 + self.isolated
    }

    /// Two-colouring of the flags in which every involution switches colour,
    /// or `None` when some component is non-orientable. Each component's
    /// smallest flag gets colour 0.
    pub fn orientation(&self) -> Option<Vec<u8>> {
        let n = self.flag_count();
        let mut colour = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for start in 0..n {
            if colour[start] != u8::MAX {
                continue;
            }
            colour[start] = 0;
            stack.push(start);
            while let Some(f) = stack.pop() {
                let c = colour[f];
                for g in [self.s0(f), self.s1(f), self.s2(f)] {
                    if colour[g] == u8::MAX {
                        colour[g] = 1 - c;
                        stack.push(g);
                    } else if colour[g] == c {
                        return None;
                    }
                }
            }
        }
        Some(colour)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().is_some()
    }

    pub fn surface_stats(&self) -> SurfaceStats {
        SurfaceStats::from_counts(
            self.vertex_count(),
            self.edge_count(),
            self.face_count(),
            self.component_count(),
            self.is_orientable(),
        )
    }

    /// Boundary lengths (flag count / 2) of every face, sorted; isolated
    /// vertices contribute faces of length 0.
    pub fn face_lengths(&self) -> Vec<usize> {
        let (label, count) = self.orbits(true, true, false);
        let mut len = vec![0usize; count];
        for &l in &label {
            len[l] += 1;
        }
        let mut out: Vec<usize> = len.into_iter().map(|x| x / 2).collect();
        out.extend(std::iter::repeat_n(0, self.isolated));
        out.sort_unstable();
        out
    }
}
