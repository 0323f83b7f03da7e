use super::*;

fn cycle(n: usize) -> RibbonGraph {
    let rotations: Vec<Vec<EdgeEnd>> = (0..n)
        .map(|i| vec![EdgeEnd::new((i + n - 1) % n, 1), EdgeEnd::new(i, 0)])
        .collect();
    RibbonGraph::new(rotations, vec![false; n]).unwrap()
}

fn b1() -> RibbonGraph {
    RibbonGraph::from_pairs(&[&[(0, 0), (0, 1)]], vec![true]).unwrap()
}

fn subset(g: &RibbonGraph, edges: &[usize]) -> EdgeSubset {
    EdgeSubset::from_edges(edges.iter().copied(), g.edge_count()).unwrap()
}

#[test]
fn rejects_bad_rotation_systems() {
    assert_eq!(
        RibbonGraph::from_pairs(&[&[(0, 0), (0, 0)]], vec![false]).unwrap_err(),
        MapError::DuplicateEnd(EdgeEnd::new(0, 0))
    );
    assert_eq!(
        RibbonGraph::from_pairs(&[&[(0, 0)]], vec![false]).unwrap_err(),
        MapError::MissingEnd(EdgeEnd::new(0, 1))
    );
    assert!(matches!(
        RibbonGraph::from_pairs(&[&[(1, 0)]], vec![false]),
        Err(MapError::EdgeOutOfRange { .. })
    ));
}

#[test]
fn plane_cycle_stats() {
    let s = cycle(4).surface_stats();
    assert_eq!((s.vertices, s.edges, s.faces, s.components), (4, 4, 2, 1));
    assert_eq!(s.genus, Some(0));
    assert!(s.orientable);
}

#[test]
fn bouquets_are_projective() {
    let s = b1().surface_stats();
    assert_eq!(s.euler_genus, 1);
    assert!(!s.orientable);
    let b2 = b1()
        .join(
            Corner { vertex: 0, gap: 0 },
            &b1(),
            Corner { vertex: 0, gap: 0 },
        )
        .unwrap();
    assert_eq!(b2.surface_stats().euler_genus, 2);
    assert_eq!(b2.vertex_count(), 1);
}

#[test]
fn spanning_stats_examples() {
    let c2 = cycle(2);
    let s = c2.spanning_stats(subset(&c2, &[0]));
    assert_eq!((s.components, s.faces), (1, 1));
    for g in [cycle(3), cycle(5), b1()] {
        let s = g.spanning_stats(EdgeSubset::empty(g.edge_count()));
        assert_eq!(
            (s.components, s.faces, s.genus),
            (g.vertex_count(), g.vertex_count(), Some(0))
        );
    }
    let c3 = cycle(3);
    let s = c3.spanning_stats(EdgeSubset::full(3));
    assert_eq!((s.components, s.faces, s.genus), (1, 2, Some(0)));
}

#[test]
fn partial_dual_of_empty_set_is_identity() {
    for g in [cycle(1), cycle(3), b1()] {
        let d = g.partial_dual(EdgeSubset::empty(g.edge_count()));
        assert_eq!(d.canonical_rotations(), g.canonical_rotations());
        assert_eq!(d.twists(), g.twists());
    }
}

#[test]
fn dual_of_plane_digon() {
    let c2 = cycle(2);
    let d = c2.dual();
    let s = d.surface_stats();
    assert_eq!(s.vertices, 2);
    assert_eq!(s.genus, Some(0));
}

#[test]
fn one_edge_partial_dual_of_digon_is_toroidal() {
    let c2 = cycle(2);
    let d = c2.partial_dual(subset(&c2, &[0]));
    let s = d.surface_stats();
    assert_eq!((s.vertices, s.edges), (1, 2));
    assert_eq!(s.genus, Some(1));
    assert_eq!(c2.genus_of_partial_dual(subset(&c2, &[0])).unwrap(), 1);
    assert!(
        d.twists().iter().all(|t| !t),
        "orientable dual is read untwisted"
    );
}

#[test]
fn genus_formula_matches_construction_on_triangle() {
    let c3 = cycle(3);
    for a in EdgeSubset::all(3) {
        let formula = c3.genus_of_partial_dual(a).unwrap();
        let built = c3.partial_dual(a).surface_stats().genus.unwrap();
        assert_eq!(formula, built, "subset {a}");
    }
    assert_eq!(c3.genus_of_partial_dual(subset(&c3, &[1])).unwrap(), 1);
}

#[test]
fn genus_formula_rejects_non_orientable() {
    let g = b1();
    assert_eq!(
        g.genus_of_partial_dual(EdgeSubset::empty(1)).unwrap_err(),
        MapError::NonOrientable
    );
}

#[test]
fn fast_stats_match_constructed_dual() {
    let g = RibbonGraph::from_pairs(
        &[&[(0, 0), (1, 0), (0, 1), (2, 0)], &[(1, 1), (2, 1)]],
        vec![false, true, false],
    )
    .unwrap();
    for a in EdgeSubset::all(3) {
        assert_eq!(
            g.partial_dual_stats(a),
            g.partial_dual(a).surface_stats(),
            "subset {a}"
        );
    }
}

#[test]
fn edits() {
    let c3 = cycle(3);
    let path = c3.delete_edge(1).unwrap();
    let s = path.surface_stats();
    assert_eq!((s.vertices, s.edges, s.faces, s.genus), (3, 2, 1, Some(0)));

    let sub = c3.subdivide_edge(0).unwrap();
    let s = sub.surface_stats();
    assert_eq!((s.vertices, s.edges, s.genus), (4, 4, Some(0)));

    let edge = RibbonGraph::from_pairs(&[&[(0, 0)], &[(0, 1)]], vec![false]).unwrap();
    let d2 = edge.add_parallel_edge(0).unwrap();
    let s = d2.surface_stats();
    assert_eq!((s.vertices, s.edges, s.faces), (2, 2, 2));

    assert!(c3.delete_edge(3).is_err());
    assert!(c3.subdivide_edge(7).is_err());
    assert!(c3.add_parallel_edge(3).is_err());
}

#[test]
fn parallel_edges_keep_planarity() {
    // a fan on four vertices: apex 0, path 1-2-3
    let g = RibbonGraph::from_pairs(
        &[
            &[(0, 0), (1, 0), (2, 0)],
            &[(3, 0), (0, 1)],
            &[(4, 0), (1, 1), (3, 1)],
            &[(2, 1), (4, 1)],
        ],
        vec![false; 5],
    )
    .unwrap();
    assert_eq!(g.surface_stats().genus, Some(0));
    for k in 0..5 {
        let h = g.add_parallel_edge(k).unwrap();
        assert_eq!(h.surface_stats().genus, Some(0), "edge {k}");
        let h2 = h.add_parallel_edge(k).unwrap();
        assert_eq!(h2.surface_stats().genus, Some(0), "edge {k} twice");
    }
    let loop_graph = cycle(1).add_parallel_edge(0).unwrap();
    assert_eq!(loop_graph.surface_stats().genus, Some(0));
}

#[test]
fn joins() {
    let c2 = cycle(2);
    let j = c2
        .join(
            Corner { vertex: 0, gap: 0 },
            &b1(),
            Corner { vertex: 0, gap: 0 },
        )
        .unwrap();
    let s = j.surface_stats();
    assert_eq!((s.vertices, s.edges), (2, 3));
    assert!(!s.orientable);

    let edge = RibbonGraph::from_pairs(&[&[(0, 0)], &[(0, 1)]], vec![false]).unwrap();
    let p = edge
        .join(
            Corner { vertex: 1, gap: 0 },
            &edge,
            Corner { vertex: 0, gap: 0 },
        )
        .unwrap();
    let s = p.surface_stats();
    assert_eq!((s.vertices, s.edges, s.genus), (3, 2, Some(0)));

    assert!(matches!(
        edge.join(
            Corner { vertex: 0, gap: 1 },
            &edge,
            Corner { vertex: 0, gap: 0 }
        ),
        Err(MapError::GapOutOfRange { .. })
    ));
    assert!(matches!(
        edge.join(
            Corner { vertex: 2, gap: 0 },
            &edge,
            Corner { vertex: 0, gap: 0 }
        ),
        Err(MapError::VertexOutOfRange { .. })
    ));
}

#[test]
fn isolated_vertices_survive_duality() {
    let g = cycle(2).disjoint_union(&RibbonGraph::isolated(2));
    let d = g.partial_dual(EdgeSubset::from_edges([0], 2).unwrap());
    let (s, t) = (g.surface_stats(), d.surface_stats());
    assert_eq!(
        t.vertices,
        g.spanning_stats(EdgeSubset::from_edges([0], 2).unwrap())
            .faces
    );
    assert_eq!(s.components, t.components);
    assert_eq!(d.degree(d.vertex_count() - 1), 0);
}

#[test]
fn inserted_chords_stay_planar() {
    let g = cycle(5);
    let faces = g.face_corners();
    assert_eq!(faces.len(), 2);
    let face = &faces[0];
    let h = g.insert_edge(face[0], face[2]).unwrap();
    let s = h.surface_stats();
    assert_eq!((s.faces, s.genus), (3, Some(0)));
    let h = g.insert_edge(face[1], face[1]).unwrap();
    assert_eq!(h.surface_stats().genus, Some(0));
}

#[test]
fn equivalence_up_to_vertex_flips() {
    let twisted_tree = RibbonGraph::from_pairs(
        &[&[(0, 0), (1, 0)], &[(0, 1)], &[(1, 1)]],
        vec![true, false],
    )
    .unwrap();
    let plain = RibbonGraph::from_pairs(
        &[&[(0, 0), (1, 0)], &[(0, 1)], &[(1, 1)]],
        vec![false, false],
    )
    .unwrap();
    assert!(twisted_tree.is_equivalent(&plain));
    assert!(twisted_tree
        .partial_dual(EdgeSubset::empty(2))
        .is_equivalent(&twisted_tree));
    let flipped = RibbonGraph::from_pairs(
        &[&[(0, 0), (2, 0), (1, 0)], &[(0, 1), (1, 1), (2, 1)]],
        vec![false; 3],
    )
    .unwrap();
    let toroidal = RibbonGraph::from_pairs(
        &[&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 1), (2, 1)]],
        vec![false; 3],
    )
    .unwrap();
    let theta = RibbonGraph::from_pairs(
        &[&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (2, 1), (1, 1)]],
        vec![false; 3],
    )
    .unwrap();
    assert!(theta.is_equivalent(&theta.partial_dual(EdgeSubset::empty(3))));
    assert!(theta.is_equivalent(&flipped));
    assert!(!theta.is_equivalent(&toroidal));
    assert!(!b1().is_equivalent(&cycle(1)));
    assert!(!cycle(2).is_equivalent(&cycle(3)));
}
