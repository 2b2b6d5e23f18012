mod common;

use common::has_kuratowski_subdivision;
use heawood::enumeration::generate_connected_levels;
use heawood::invariants::{is_planar, is_planar_fast};
use heawood::{Family, Graph};

#[test]
fn planarity_matches_subdivision_search_up_to_8() {
    let levels = generate_connected_levels(8).unwrap();
    let mut nonplanar = [0; 8];
    for (k, level) in levels.iter().enumerate() {
        for g in level {
            let expected = !has_kuratowski_subdivision(g);
            assert_eq!(is_planar_fast(g), expected, "{g:?}");
            let verdict = is_planar(g);
            assert_eq!(verdict.planar, expected);
            match verdict.witness {
                Some(w) => assert!(!expected && w.verify(g), "bad witness for {g:?}"),
                None => assert!(expected, "missing witness for {g:?}"),
            }
            nonplanar[k] += usize::from(!expected);
        }
    }
    // K_5 is the only nonplanar connected graph on 5 vertices
    assert_eq!(&nonplanar[..5], &[0, 0, 0, 0, 1]);
}

#[test]
fn oracle_sanity() {
    assert!(has_kuratowski_subdivision(&Family::Complete(5).build().unwrap()));
    assert!(has_kuratowski_subdivision(&Family::CompleteBipartite(3, 3).build().unwrap()));
    assert!(!has_kuratowski_subdivision(&Family::Octahedron.build().unwrap()));
    // K_{3,3} with one edge subdivided
    let mut edges: Vec<(usize, usize)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
    edges.retain(|&e| e != (0, 3));
    edges.extend([(0, 6), (6, 3)]);
    let g = Graph::new(7, edges).unwrap();
    assert!(has_kuratowski_subdivision(&g));
    assert!(!is_planar_fast(&g));
}

#[test]
fn larger_known_cases() {
    let petersen = Family::Petersen.build().unwrap();
    let v = is_planar(&petersen);
    assert!(!v.planar && v.witness.unwrap().verify(&petersen));
    for n in 3..20 {
        assert!(is_planar_fast(&Family::DoubleWheel(n).build().unwrap()));
    }
    assert!(is_planar_fast(&Family::Cube.build().unwrap()));
    assert!(!is_planar_fast(&Family::CompleteBipartite(3, 7).build().unwrap()));
    assert!(is_planar_fast(&Family::CompleteBipartite(2, 12).build().unwrap()));
}
