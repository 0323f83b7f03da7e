//! Seeded random ribbon graphs for the audits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::map::{Corner, EdgeEnd, RibbonGraph, MAX_SUBSET_WIDTH};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RandomError {
    #[error("cannot build a connected graph with {vertices} vertices and {edges} edges")]
    Unsatisfiable { vertices: usize, edges: usize },
}

/// Generator for trial `trial` of a run seeded with `seed`; trials draw from
/// disjoint streams so they can be regenerated independently.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn check_targets(v: usize, e: usize) -> Result<(), RandomError> {
    if v == 0 || e + 1 < v || e > MAX_SUBSET_WIDTH {
        return Err(RandomError::Unsatisfiable {
            vertices: v,
            edges: e,
        });
    }
    Ok(())
}

fn random_gap(g: &RibbonGraph, v: usize, rng: &mut impl Rng) -> Corner {
    Corner {
        vertex: v,
        gap: rng.gen_range(0..g.degree(v).max(1)),
    }
}

/// A connected plane ribbon graph: a random tree grown leaf by leaf, then
/// chords inserted between two corners of one traced face.
pub fn random_planar_with(
    rng: &mut impl Rng,
    v: usize,
    e: usize,
) -> Result<RibbonGraph, RandomError> {
    check_targets(v, e)?;
    let edge = RibbonGraph::from_pairs(&[&[(0, 0)], &[(0, 1)]], vec![false]).expect("single edge");
    let leaf = Corner { vertex: 0, gap: 0 };
    let mut g = RibbonGraph::isolated(1);
    for _ in 1..v {
        let u = rng.gen_range(0..g.vertex_count());
        let at = random_gap(&g, u, rng);
        g = g.join(at, &edge, leaf).expect("corner in range");
    }
    for _ in v - 1..e {
        let faces = g.face_corners();
        let face = &faces[rng.gen_range(0..faces.len())];
        let a = face[rng.gen_range(0..face.len())];
        let b = face[rng.gen_range(0..face.len())];
        g = g.insert_edge(a, b).expect("corners in range");
    }
    Ok(g)
}

pub fn random_planar(seed: u64, v: usize, e: usize) -> Result<RibbonGraph, RandomError> {
    random_planar_with(&mut ChaCha8Rng::seed_from_u64(seed), v, e)
}

/// A connected ribbon graph with ends dropped into random rotation positions.
/// Each edge is twisted with probability `twist`; with `twist = 0` the graph
/// is orientable but usually of positive genus.
pub fn random_ribbon_with(
    rng: &mut impl Rng,
    v: usize,
    e: usize,
    twist: f64,
) -> Result<RibbonGraph, RandomError> {
    check_targets(v, e)?;
    let mut rotations: Vec<Vec<EdgeEnd>> = vec![Vec::new(); v];
    for k in 0..e {
        let (a, b) = if k + 1 < v {
            (rng.gen_range(0..=k), k + 1)
        } else {
            (rng.gen_range(0..v), rng.gen_range(0..v))
        };
        for (at, end) in [(a, 0), (b, 1)] {
            let pos = rng.gen_range(0..=rotations[at].len());
            rotations[at].insert(pos, EdgeEnd::new(k, end));
        }
    }
    let twisted = (0..e).map(|_| rng.gen_bool(twist)).collect();
    Ok(RibbonGraph::new(rotations, twisted).expect("every end placed once"))
}
