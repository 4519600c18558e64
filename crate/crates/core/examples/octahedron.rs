//! The 3-dimensional octahedron family: constant combinatorics through `t = 0` and
//! a red edge whose angle follows the same cosine law as the 4-dimensional ridges.

use halfpipe::catalog::octahedron_system;
use halfpipe::forms::ParamForm;
use halfpipe::numfield::TimeParam;
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for expr in ["3/4", "1/2", "0", "-1/2", "-9/10"] {
        let t: TimeParam = expr.parse()?;
        let sys = octahedron_system(&t, true)?;
        let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
        let lattice = build_face_lattice(&sys, &verts);
        let red = if t.is_zero() {
            None
        } else {
            ParamForm::new(3, &t).angle_between(sys.covector("Q0")?, sys.covector("Q2")?)?.cosine.map(|c| c.to_exact_string())
        };
        println!("t = {expr:>5}: f-vector {:?}, red-edge cosine {:?}", lattice.f_vector(), red);
    }
    Ok(())
}
