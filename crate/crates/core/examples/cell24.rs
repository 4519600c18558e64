//! The `t = 1` truncation with two extra half-spaces is the right-angled ideal 24-cell.

use halfpipe::catalog::cell24_system;
use halfpipe::forms::ParamForm;
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions, VertexKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sys = cell24_system()?;
    let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
    let lattice = build_face_lattice(&sys, &verts);
    let form = ParamForm::hyperbolic(4);
    let mut right = 0;
    for r in lattice.ridges() {
        let (a, b) = (sys.covector(&r.labels[0])?, sys.covector(&r.labels[1])?);
        if form.dual_b(a.coeffs(), b.coeffs())?.is_zero() {
            right += 1;
        }
    }
    println!("f-vector {:?}", lattice.f_vector());
    println!("ideal vertices {}", verts.iter().filter(|v| v.kind == VertexKind::Ideal).count());
    println!("right ridges {right} of {}", lattice.ridges().len());
    Ok(())
}
