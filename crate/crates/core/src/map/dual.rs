//! Partial duality as a local colour swap on the flag model.

use super::{EdgeEnd, EdgeSubset, MapError, RibbonGraph, SurfaceStats};

impl RibbonGraph {
    /// The partial dual `G^A`.
    ///
    /// On the flags of every edge in `a` the involutions `s0` and `s2` trade
    /// places; `s1` is kept. Vertices of the result are the orbits of
    /// `<s1, s2'>`, numbered by their smallest flag, with the isolated
    /// vertices of `self` appended in their original order. Edge indices are
    /// preserved. When the graph is orientable, every vertex is read in the
    /// direction fixed by a global flag 2-colouring, so the result carries no
    /// twisted edges.
    pub fn partial_dual(&self, a: EdgeSubset) -> RibbonGraph {
        assert_eq!(a.width(), self.edge_count(), "subset width mismatch");
        let gem = self.to_gem();
        let n = gem.flag_count();
        let in_a = |f: usize| a.contains(f / 4);
        let s0p = |f: usize| if in_a(f) { f ^ 1 } else { gem.s0(f) };
        let s2p = |f: usize| if in_a(f) { gem.s0(f) } else { f ^ 1 };
        let colour = gem.orientation();

        // new end tag and side for every flag
        let mut new_end = vec![u8::MAX; n];
        let mut new_side = vec![0u8; n];
        let mut rotations: Vec<Vec<EdgeEnd>> = Vec::new();
        let mut orbit = Vec::new();
        for start in 0..n {
            if new_end[start] != u8::MAX {
                continue;
            }
            orbit.clear();
            let mut x = start;
            loop {
                orbit.push(x);
                let y = s2p(x);
                orbit.push(y);
                x = gem.s1(y);
                if x == start {
                    break;
                }
            }
            // Entry flags of one traversal direction are orbit[0], orbit[2], ...;
            // the reverse direction enters through the odd positions.
            let entry = match &colour {
                Some(c) => *orbit
                    .iter()
                    .filter(|&&f| c[f] == 0)
                    .min()
                    .expect("orbit has both colours"),
                None => start,
            };
            let mut rot = Vec::new();
            let mut x = entry;
            loop {
                let y = s2p(x);
                let k = x / 4;
                // the half-edge holding flag 4k is end 0
                let tag = if x == 4 * k || y == 4 * k { 0 } else { 1 };
                new_end[x] = tag;
                new_end[y] = tag;
                new_side[x] = 0;
                new_side[y] = 1;
                rot.push(EdgeEnd::new(k, tag));
                x = gem.s1(y);
                if x == entry {
                    break;
                }
            }
            rotations.push(rot);
        }
        rotations.extend(std::iter::repeat_with(Vec::new).take(gem.isolated_vertices()));

        let mut twisted = vec![false; self.edge_count()];
        for (k, tw) in twisted.iter_mut().enumerate() {
            let p = (4 * k..4 * k + 4)
                .find(|&f| new_end[f] == 0 && new_side[f] == 0)
                .expect("every edge has an end 0 entry flag");
            let q = s0p(p);
            debug_assert_eq!(new_end[q], 1);
            *tw = new_side[q] == 0;
        }
        RibbonGraph::new(rotations, twisted).expect("partial dual is a valid rotation system")
    }

    /// The geometric dual `G^{E(G)}`.
    pub fn dual(&self) -> RibbonGraph {
        self.partial_dual(EdgeSubset::full(self.edge_count()))
    }

    /// Orientable genus of `G^A` from spanning-subgraph data alone:
    /// `γ(A) + γ(A^c) + c(G) + v(G) − c(A) − c(A^c)`.
    pub fn genus_of_partial_dual(&self, a: EdgeSubset) -> Result<usize, MapError> {
        self.check_subset(a)?;
        let stats = self.surface_stats();
        if !stats.orientable {
            return Err(MapError::NonOrientable);
        }
        let (ca, cc) = (
            self.subset_components(a),
            self.subset_components(a.complement()),
        );
        let (ga, gc) = if stats.is_planar() {
            debug_assert_eq!(self.spanning_stats(a).genus, Some(0));
            debug_assert_eq!(self.spanning_stats(a.complement()).genus, Some(0));
            (0, 0)
        } else {
            (
                self.spanning_stats(a)
                    .genus
                    .expect("subgraph of orientable graph"),
                self.spanning_stats(a.complement())
                    .genus
                    .expect("subgraph of orientable graph"),
            )
        };
        Ok(ga + gc + stats.components + stats.vertices - ca - cc)
    }

    /// Surface statistics of `G^A` read off the swapped flag model without
    /// building the partial dual.
    pub fn partial_dual_stats(&self, a: EdgeSubset) -> SurfaceStats {
        let gem = self.to_gem();
        let mut scratch = DualScratch::new(gem.flag_count());
        let (v, f) = scratch.vertex_face_counts(gem.s0_table(), gem.s1_table(), a.bits());
        let iso = gem.isolated_vertices();
        SurfaceStats::from_counts(
            v + iso,
            self.edge_count(),
            f + iso,
            self.component_count(),
            gem.is_orientable(),
        )
    }
}

/// Reusable buffers for counting the vertices and faces of partial duals.
pub(crate) struct DualScratch {
    seen: Vec<u32>,
    stamp: u32,
}

impl DualScratch {
    pub(crate) fn new(flags: usize) -> Self {
        DualScratch {
            seen: vec![0; flags],
            stamp: 0,
        }
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp = self.stamp.wrapping_add(1);
        if self.stamp == 0 {
            self.seen.iter_mut().for_each(|s| *s = 0);
            self.stamp = 1;
        }
        self.stamp
    }

    /// Orbit counts of `<s1, s2'>` and `<s0', s1>` (flag-carrying only)
    /// for the partial dual with respect to the edge mask `bits`.
    pub(crate) fn vertex_face_counts(
        &mut self,
        s0: &[u32],
        s1: &[u32],
        bits: u64,
    ) -> (usize, usize) {
        let n = s0.len();
        let in_a = |f: usize| bits >> (f / 4) & 1 == 1;
        // vertices: alternate s2' then s1
        let stamp = self.next_stamp();
        let mut vertices = 0;
        for start in 0..n {
            if self.seen[start] == stamp {
                continue;
            }
            vertices += 1;
            let mut x = start;
            loop {
                self.seen[x] = stamp;
                let y = if in_a(x) { s0[x] as usize } else { x ^ 1 };
                self.seen[y] = stamp;
                x = s1[y] as usize;
                if x == start {
                    break;
                }
            }
        }
        // faces: alternate s0' then s1
        let stamp = self.next_stamp();
        let mut faces = 0;
        for start in 0..n {
            if self.seen[start] == stamp {
                continue;
            }
            faces += 1;
            let mut x = start;
            loop {
                self.seen[x] = stamp;
                let y = if in_a(x) { x ^ 1 } else { s0[x] as usize };
                self.seen[y] = stamp;
                x = s1[y] as usize;
                if x == start {
                    break;
                }
            }
        }
        (vertices, faces)
    }
}
