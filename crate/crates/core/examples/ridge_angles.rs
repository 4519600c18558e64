//! Dihedral angles along the ridges at several parameters, plus the certified
//! closed form of the non-right angle on each branch.

use halfpipe::catalog::p_system;
use halfpipe::forms::{hp_angle_sq, ParamForm};
use halfpipe::numfield::{BranchFunc, Poly, RatFunc, TimeParam, IDENTITY_SAMPLES};
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, EnumerateOptions};
use halfpipe::FieldScalar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for expr in ["1/2", "1/sqrt3", "-1/2", "0"] {
        let t: TimeParam = expr.parse()?;
        let sys = p_system(&t, true, false)?;
        let verts = enumerate_vertices(&sys, EnumerateOptions::default())?;
        let lattice = build_face_lattice(&sys, &verts);
        let form = ParamForm::new(4, &t);
        let mut right = 0;
        let mut other = Vec::new();
        for r in lattice.ridges() {
            let (a, b) = (sys.covector(&r.labels[0])?, sys.covector(&r.labels[1])?);
            if t.is_zero() {
                // Half-pipe angles exist only between two spacelike planes.
                if let Ok(psi) = hp_angle_sq(a, b) {
                    other.push(format!("{}{}: ψ² = {}", r.labels[0], r.labels[1], psi.to_exact_string()));
                }
            } else if form.dual_b(a.coeffs(), b.coeffs())?.is_zero() {
                right += 1;
            } else {
                let c = form.angle_between(a, b)?.cosine.map(|c| c.to_exact_string());
                other.push(format!("{}{}: {:?}", r.labels[0], r.labels[1], c));
            }
        }
        if t.is_zero() {
            println!("t = 0: {} ridges between spacelike planes", other.len());
        } else {
            println!("t = {expr}: {right} right ridges, {} others", other.len());
        }
        if let Some(first) = other.first() {
            println!("    e.g. {first}");
        }
    }

    // (3t² − 1)/(1 + t²) versus 3 − 4/(1 + t²) on both branches.
    let int = |n| FieldScalar::from_int(n);
    let num = Poly::new(vec![int(-1), int(0), int(3)]);
    let den = Poly::new(vec![int(1), int(0), int(1)]);
    let lhs = BranchFunc::uniform(RatFunc::new(num, den.clone())?);
    let rhs = BranchFunc::int(3).sub(&BranchFunc::uniform(RatFunc::new(Poly::constant(int(4)), den)?));
    let report = lhs.certify_identity(&rhs, IDENTITY_SAMPLES)?;
    println!("cos identity certified: {:?}", report.holds);
    Ok(())
}
