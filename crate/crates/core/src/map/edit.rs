//! Graph edits. Every edit returns a new graph.

use super::gem::flag;
use super::{Corner, EdgeEnd, MapError, RibbonGraph};

impl RibbonGraph {
    /// `G − e`: both ends of `k` leave their rotations and higher edges shift down.
    pub fn delete_edge(&self, k: usize) -> Result<RibbonGraph, MapError> {
        self.check_edge(k)?;
        let rotations = self
            .rotations()
            .iter()
            .map(|rot| {
                rot.iter()
                    .filter(|e| e.edge != k)
                    .map(|e| EdgeEnd::new(if e.edge > k { e.edge - 1 } else { e.edge }, e.end))
                    .collect()
            })
            .collect();
        let mut twisted = self.twists().to_vec();
        twisted.remove(k);
        Ok(RibbonGraph::new(rotations, twisted).expect("deletion keeps a valid rotation system"))
    }

    /// Adds a new edge (index `e(G)`) parallel to `k`, running beside it.
    ///
    /// For an untwisted edge the new end sits right after `k.0` at one end and
    /// right before `k.1` at the other, which bounds a digon face; a twisted
    /// edge swaps sides along its length, so its parallel copy sits after both
    /// ends and is twisted too.
    pub fn add_parallel_edge(&self, k: usize) -> Result<RibbonGraph, MapError> {
        self.check_edge(k)?;
        let new = self.edge_count();
        let twisted_k = self.is_twisted(k);
        let mut rotations = self.rotations().to_vec();
        let (u, pu) = self.place(EdgeEnd::new(k, 0));
        rotations[u].insert(pu + 1, EdgeEnd::new(new, 0));
        let (w, _) = self.place(EdgeEnd::new(k, 1));
        let pw = rotations[w]
            .iter()
            .position(|e| *e == EdgeEnd::new(k, 1))
            .expect("end present");
        let at = if twisted_k { pw + 1 } else { pw };
        rotations[w].insert(at, EdgeEnd::new(new, 1));
        let mut twisted = self.twists().to_vec();
        twisted.push(twisted_k);
        Ok(RibbonGraph::new(rotations, twisted)
            .expect("parallel insertion keeps a valid rotation system"))
    }

    /// Replaces `k = uv` by the path `u x v` through a new degree-2 vertex `x`
    /// (index `v(G)`). Edge `k` becomes `ux`; the new edge `e(G)` is `xv`.
    pub fn subdivide_edge(&self, k: usize) -> Result<RibbonGraph, MapError> {
        self.check_edge(k)?;
        let new = self.edge_count();
        let mut rotations = self.rotations().to_vec();
        let (w, pw) = self.place(EdgeEnd::new(k, 1));
        rotations[w][pw] = EdgeEnd::new(new, 1);
        rotations.push(vec![EdgeEnd::new(k, 1), EdgeEnd::new(new, 0)]);
        let mut twisted = self.twists().to_vec();
        twisted.push(false);
        Ok(
            RibbonGraph::new(rotations, twisted)
                .expect("subdivision keeps a valid rotation system"),
        )
    }

    pub fn check_corner(&self, c: Corner) -> Result<(), MapError> {
        self.check_vertex(c.vertex)?;
        let degree = self.degree(c.vertex);
        if c.gap < degree.max(1) {
            Ok(())
        } else {
            Err(MapError::GapOutOfRange {
                vertex: c.vertex,
                gap: c.gap,
                degree,
            })
        }
    }

    /// Adds an untwisted edge (index `e(G)`) with end 0 in corner `a` and end 1
    /// in corner `b`. When both corners lie on one face of an orientable
    /// graph, the edge splits that face and the genus is unchanged.
    pub fn insert_edge(&self, a: Corner, b: Corner) -> Result<RibbonGraph, MapError> {
        self.check_corner(a)?;
        self.check_corner(b)?;
        let new = self.edge_count();
        let mut rotations = self.rotations().to_vec();
        let end0 = EdgeEnd::new(new, 0);
        let end1 = EdgeEnd::new(new, 1);
        let pos = |c: Corner, rot: &Vec<EdgeEnd>| if rot.is_empty() { 0 } else { c.gap + 1 };
        if a.vertex == b.vertex {
            let rot = &mut rotations[a.vertex];
            let (pa, pb) = (pos(a, rot), pos(b, rot));
            if pa <= pb {
                // insert the later one first so the earlier index stays valid;
                // equal corners give `.. end0 end1 ..`
                rot.insert(pb, end1);
                rot.insert(pa, end0);
            } else {
                rot.insert(pa, end0);
                rot.insert(pb, end1);
            }
        } else {
            let pa = pos(a, &rotations[a.vertex]);
            rotations[a.vertex].insert(pa, end0);
            let pb = pos(b, &rotations[b.vertex]);
            rotations[b.vertex].insert(pb, end1);
        }
        let mut twisted = self.twists().to_vec();
        twisted.push(false);
        Ok(RibbonGraph::new(rotations, twisted)
            .expect("edge insertion keeps a valid rotation system"))
    }

    /// The corners on each face, faces ordered by smallest flag; isolated
    /// vertices follow as single-corner faces.
    pub fn face_corners(&self) -> Vec<Vec<Corner>> {
        let gem = self.to_gem();
        let (label, count) = gem.orbits(true, true, false);
        let mut faces = vec![Vec::new(); count];
        for (v, rot) in self.rotations().iter().enumerate() {
            for (i, &end) in rot.iter().enumerate() {
                faces[label[flag(end, 1)]].push(Corner { vertex: v, gap: i });
            }
        }
        for v in 0..self.vertex_count() {
            if self.degree(v) == 0 {
                faces.push(vec![Corner { vertex: v, gap: 0 }]);
            }
        }
        faces
    }

    /// Disjoint union; `other`'s vertices and edges are numbered after `self`'s.
    pub fn disjoint_union(&self, other: &RibbonGraph) -> RibbonGraph {
        let shift = self.edge_count();
        let mut rotations = self.rotations().to_vec();
        rotations.extend(other.rotations().iter().map(|rot| {
            rot.iter()
                .map(|e| EdgeEnd::new(e.edge + shift, e.end))
                .collect()
        }));
        let mut twisted = self.twists().to_vec();
        twisted.extend_from_slice(other.twists());
        RibbonGraph::new(rotations, twisted).expect("disjoint union is valid")
    }

    /// The join `self ∨ other`: vertex `c1.vertex` of `self` and vertex
    /// `c2.vertex` of `other` are pasted along the arcs at the given gaps.
    ///
    /// The merged vertex keeps the index of `c1.vertex`; `other`'s remaining
    /// vertices follow `self`'s in order, and `other`'s edges are shifted by
    /// `e(self)`. Reading counterclockwise from gap `c1`, the merged rotation
    /// runs through all of `other`'s rotation starting just after gap `c2`.
    pub fn join(
        &self,
        c1: Corner,
        other: &RibbonGraph,
        c2: Corner,
    ) -> Result<RibbonGraph, MapError> {
        self.check_corner(c1)?;
        other.check_corner(c2)?;
        let shift = self.edge_count();
        let lift = |e: &EdgeEnd| EdgeEnd::new(e.edge + shift, e.end);
        let mut rotations = self.rotations().to_vec();

        let r2 = other.rotation(c2.vertex);
        let spliced: Vec<EdgeEnd> = if r2.is_empty() {
            Vec::new()
        } else {
            let start = (c2.gap + 1) % r2.len();
            r2[start..].iter().chain(&r2[..start]).map(lift).collect()
        };
        let r1 = &mut rotations[c1.vertex];
        let at = if r1.is_empty() { 0 } else { c1.gap + 1 };
        r1.splice(at..at, spliced);

        for (v, rot) in other.rotations().iter().enumerate() {
            if v != c2.vertex {
                rotations.push(rot.iter().map(lift).collect());
            }
        }
        let mut twisted = self.twists().to_vec();
        twisted.extend_from_slice(other.twists());
        Ok(RibbonGraph::new(rotations, twisted).expect("join is a valid rotation system"))
    }
}
