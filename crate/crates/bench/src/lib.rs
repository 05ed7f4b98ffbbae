//! Inputs shared by the benchmarks.

use srconf_core::constructions::{coordinate_triangle, projective_plane, triangle_removal};
use srconf_core::{Configuration, Graph, GraphSpec};

pub fn graph(spec: &str) -> Graph {
    spec.parse::<GraphSpec>().and_then(|s| s.build()).expect("benchmark graph spec")
}

pub fn plane_minus_triangle(q: u64) -> Configuration {
    let [a, b, c] = coordinate_triangle(q).expect("prime power");
    triangle_removal(&projective_plane(q).expect("prime power"), a, b, c).expect("order at least 5")
}
