//! Vertex links of the polytope: cubes at ideal vertices, tetrahedra at finite ones.

use std::collections::BTreeMap;

use halfpipe::catalog::p_system;
use halfpipe::numfield::TimeParam;
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, link_at_vertex, EnumerateOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = TimeParam::ratio(1, 3);
    let sys = p_system(&t, true, false)?;
    let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
    let mut census: BTreeMap<(String, Vec<usize>), usize> = BTreeMap::new();
    for v in &verts {
        let link = link_at_vertex(&sys, v)?;
        *census.entry((format!("{:?}", v.kind), link.f_vector())).or_default() += 1;
    }
    for ((kind, f), n) in &census {
        println!("{n:>3} {kind:<7} vertices with link f-vector {f:?}");
    }
    let lattice = build_face_lattice(&sys, &verts);
    println!("polytope f-vector {:?}", lattice.f_vector());
    Ok(())
}
