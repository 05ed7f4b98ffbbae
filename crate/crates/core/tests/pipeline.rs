//! End-to-end paths through the public API: build, serialize, classify,
//! canonicalize.

use proptest::prelude::*;
use srconf_core::classify::{find_configurations, reduce_isomorphs};
use srconf_core::constructions::{coordinate_triangle, development, projective_plane, triangle_removal};
use srconf_core::graphs::{decode_adjacency_matrices, decode_graph6, encode_graph6, srg_check};
use srconf_core::iso::{aut_order, canonical_form, is_isomorphic};
use srconf_core::sdds::{sdds_search, Normalization};
use srconf_core::{Configuration, Graph, Group, Side, SrcParams};

fn minus_triangle(q: u64) -> Configuration {
    let [a, b, c] = coordinate_triangle(q).unwrap();
    triangle_removal(&projective_plane(q).unwrap(), a, b, c).unwrap()
}

#[test]
fn triangle_removal_parameters_and_round_trips() {
    for (q, want) in [(5, SrcParams::new(16, 3, 2, 2)), (7, SrcParams::new(36, 5, 10, 12)), (8, SrcParams::new(49, 6, 17, 20))] {
        let c = minus_triangle(q);
        assert_eq!(c.src_check().unwrap(), Some(want), "q = {q}");
        assert_eq!(srg_check(&c.associated_graph(Side::Point).unwrap()), Some(want.srg()));
        assert!(c.is_proper().unwrap());
        assert_eq!(Configuration::from_text(&c.to_text()).unwrap(), c);
        assert_eq!(Configuration::from_json(&c.to_json()).unwrap(), c);
    }
}

fn matrix(g: &Graph) -> String {
    (0..g.order())
        .map(|a| (0..g.order()).map(|b| if g.has_edge(a, b) { '1' } else { '0' }).collect::<String>() + "\n")
        .collect()
}

#[test]
fn point_graph_survives_both_file_formats() {
    let g = minus_triangle(7).associated_graph(Side::Point).unwrap();
    assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
    let text = format!("Graph 1\n{}\nGraph 2\n{}", matrix(&g), matrix(&g.complement()));
    assert_eq!(decode_adjacency_matrices(&text).unwrap(), vec![g.clone(), g.complement()]);
}

#[test]
fn classification_recovers_the_construction() {
    let c = minus_triangle(5);
    let found = find_configurations(&c.associated_graph(Side::Point).unwrap(), 3, None);
    assert!(found.iter().all(|f| f.src_check().unwrap() == c.src_check().unwrap()));
    let classes = reduce_isomorphs(&found).unwrap();
    assert_eq!(classes.iter().map(|k| k.count).sum::<usize>(), found.len());
    assert!(classes.iter().any(|k| k.form == canonical_form(&c).unwrap()));
}

#[test]
fn z13_developments_match_the_paley_classification() {
    let z13 = Group::cyclic(13);
    let sets = sdds_search(&z13, 3, 2, 3, Normalization::ContainsIdentity).unwrap();
    assert!(!sets.is_empty());
    let devs: Vec<Configuration> = sets.iter().map(|d| development(&z13, d).unwrap()).collect();
    for d in &devs {
        assert_eq!(d.src_check().unwrap(), Some(SrcParams::new(13, 3, 2, 3)));
    }
    let paley = devs[0].associated_graph(Side::Point).unwrap();
    let from_graph = reduce_isomorphs(&find_configurations(&paley, 3, None)).unwrap();
    let from_group = reduce_isomorphs(&devs).unwrap();
    let forms = |v: &[srconf_core::classify::IsoClass]| v.iter().map(|c| c.form.clone()).collect::<Vec<_>>();
    assert_eq!(forms(&from_group), forms(&from_graph));
}

#[test]
fn double_dual_is_the_same_configuration() {
    let c = minus_triangle(7);
    assert!(is_isomorphic(&c.dual().unwrap().dual().unwrap(), &c).unwrap());
}

fn shuffled(c: &Configuration, points: &[u32], line_order: &[usize]) -> Configuration {
    let r = c.relabel(points);
    Configuration::from_lines(r.v(), line_order.iter().map(|&i| r.lines()[i].clone()).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn canonical_form_ignores_labels(
        points in Just((0..36u32).collect::<Vec<_>>()).prop_shuffle(),
        lines in Just((0..36usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let c = minus_triangle(7);
        let s = shuffled(&c, &points, &lines);
        prop_assert!(s.is_valid());
        prop_assert_eq!(canonical_form(&s).unwrap(), canonical_form(&c).unwrap());
        prop_assert_eq!(aut_order(&s).unwrap(), aut_order(&c).unwrap());
        prop_assert_eq!(s.alpha_spectrum().unwrap(), c.alpha_spectrum().unwrap());
    }
}
