//! Exact arithmetic in ℚ(√2,√3): products, inverses, exact signs and square roots.

use halfpipe::numfield::{BranchFunc, FieldScalar, TimeParam};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = &FieldScalar::sqrt2() + &FieldScalar::sqrt3();
    let b = &FieldScalar::sqrt2() - &FieldScalar::sqrt3();
    println!("(√2+√3)(√2−√3) = {}", (&a * &b).to_exact_string());
    println!("1/(√2+√3) = {} ≈ {}", a.inv()?.to_exact_string(), a.inv()?.to_decimal(15));

    // 5√2 − 7 is tiny and positive; its sign is decided exactly.
    let near = &(&FieldScalar::sqrt2() * &FieldScalar::from_int(5)) - &FieldScalar::from_int(7);
    println!("sign(5√2 − 7) = {}", near.signum());

    let square = &(&FieldScalar::from_int(5) + &(&FieldScalar::sqrt6() * &FieldScalar::from_int(2))) * &FieldScalar::one();
    println!("√(5 + 2√6) = {:?}", square.sqrt()?.map(|r| r.to_exact_string()));

    // Piecewise function t|t| and its one-sided limits.
    let f = BranchFunc::t_abs_t();
    for expr in ["1/2", "-1/2", "1/sqrt3"] {
        let t: TimeParam = expr.parse()?;
        println!("t|t| at {expr} = {}", f.eval(&t)?.to_exact_string());
    }
    println!("limits at 0 of d/dt t|t|: {:?}", f.derivative(1).limit_at_zero()?);
    Ok(())
}
