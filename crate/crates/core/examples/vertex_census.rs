//! Vertex census of the 22-half-space polytope at a few parameter values.

use halfpipe::catalog::p_system;
use halfpipe::numfield::TimeParam;
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions, VertexKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for expr in ["1/2", "-1/2", "1/sqrt3", "0"] {
        let t: TimeParam = expr.parse()?;
        let start = std::time::Instant::now();
        let sys = p_system(&t, true, false)?;
        let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
        let ideal = verts.iter().filter(|v| v.kind == VertexKind::Ideal).count();
        let lattice = build_face_lattice(&sys, &verts);
        println!(
            "t = {t}: {} vertices ({ideal} ideal), f-vector {:?}, {:.2?}",
            verts.len(),
            lattice.f_vector(),
            start.elapsed()
        );
    }
    Ok(())
}
